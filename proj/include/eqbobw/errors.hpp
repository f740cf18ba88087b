#pragma once

#include <stdexcept>
#include <string>

namespace eqbobw {

/// Malformed or out-of-range input (bad indices, dimension mismatch, parse errors).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// An operation was called on an input outside its supported domain.
class PreconditionError : public std::logic_error {
public:
    explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

/// The instance does not have equal row sums but the algorithm needs them.
class NotNormalisedError : public PreconditionError {
public:
    explicit NotNormalisedError(const std::string& what) : PreconditionError(what) {}
};

/// The requested combination (e.g. agent count) is not handled by this solver.
class UnsupportedError : public PreconditionError {
public:
    explicit UnsupportedError(const std::string& what) : PreconditionError(what) {}
};

/// An enumeration or state-space cap would be exceeded.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace eqbobw
