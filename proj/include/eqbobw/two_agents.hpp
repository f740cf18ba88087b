#pragma once

#include "eqbobw/model.hpp"

#include <array>
#include <string>
#include <vector>

namespace eqbobw {

enum class BiasedCase { AlreadyBiased, Case1, Case21, Case22a, Case22b };

std::string to_string(BiasedCase c);

/// Record of one run of the two-agent biased construction.
struct BiasedTrace {
    std::size_t agent = 0;  // the agent the result favours
    Allocation start;       // greedy EQX allocation
    Value delta = 0;        // other agent's value minus the favoured agent's, at the start
    BiasedCase case_taken = BiasedCase::AlreadyBiased;
    std::vector<std::size_t> transfers;  // goods moved, in order
    Allocation result;
};

/// The poorest agent (lowest index on ties) repeatedly takes its most valued
/// remaining good (lowest index on ties). Always EQX.
Allocation greedy_eqx(const Instance& instance);

/// EQ1 allocation in which the given agent is weakly richest. Requires n = 2
/// (UnsupportedError) and a normalised instance (NotNormalisedError).
BiasedTrace one_biased_eq1(const Instance& instance, std::size_t agent);

struct TwoAgentSolution {
    Lottery lottery;
    std::array<BiasedTrace, 2> traces;
};

/// Mixes the 0-biased and 1-biased allocations so both agents expect the same value.
TwoAgentSolution solve_two_agents_traced(const Instance& instance);
Lottery solve_two_agents(const Instance& instance);

/// Uniform lottery over the n cyclic shifts (agent i gets good (i+k) mod n).
/// Requires m = n and a normalised instance.
Lottery shift_lottery(const Instance& instance);

/// Uniform lottery over the n rotations of the greedy EQX bundles.
/// Requires identical valuation rows.
Lottery identical_lottery(const Instance& instance);

}  // namespace eqbobw
