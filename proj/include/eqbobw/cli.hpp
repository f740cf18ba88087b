#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eqbobw {

enum ExitCode : int {
    kExitExists = 0,
    kExitInternal = 1,
    kExitInputError = 2,
    kExitNotExists = 3,
    kExitResource = 4,
};

/// Runs one command line (without the program name). Reports go to out,
/// diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqbobw
