#pragma once

#include "eqbobw/model.hpp"

#include <map>
#include <string>
#include <vector>

namespace eqbobw {

struct PartitionInput {
    std::vector<Value> numbers;
    Value target = 0;
};

/// Describes a generated or canned instance.
struct InstanceMetadata {
    std::string name;
    Value scale = 1;
    std::map<std::string, bool> verdicts;
    std::vector<std::string> caveats;
};

struct CannedInstance {
    Instance instance;
    InstanceMetadata metadata;
};

/// Three agents, m+2 goods. Needs sum = 2T.
Instance gen_weak(const PartitionInput& input);
/// Needs a partition of the first m goods into two sets of sum T each.
Lottery weak_forward_lottery(const PartitionInput& input, const std::vector<std::size_t>& first,
                             const std::vector<std::size_t>& second);

/// k+1 agents, m+2 goods with m = 3k. Needs sum = kT.
Instance gen_strong(const PartitionInput& input);
/// parts[j] lists the goods given to agent j+1; each must sum to T.
Lottery strong_forward_lottery(const PartitionInput& input,
                               const std::vector<std::vector<std::size_t>>& parts);

/// Three agents, m+1 goods. Needs sum = 2T.
Instance gen_biased(const PartitionInput& input);

InstanceMetadata describe_generated(const std::string& kind, const PartitionInput& input);

std::vector<std::string> canned_names();
/// Throws InputError for an unknown name.
CannedInstance canned(const std::string& name);

}  // namespace eqbobw
