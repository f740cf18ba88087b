#pragma once

#include "eqbobw/exactlp.hpp"
#include "eqbobw/model.hpp"

#include <utility>
#include <vector>

namespace eqbobw {

/// Welfare-maximising fractional allocation giving every agent the same value.
struct WelfareSolution {
    FractionalAllocation fractional;
    Rational welfare_per_agent;
    lp::LinearProgram program;  // variables x_{i,g} at i*m+g, then w
    lp::Optimal optimum;
};

using Cell = std::pair<std::size_t, std::size_t>;  // (agent, good)

struct ConstraintSet {
    std::vector<Cell> cells;
    Rational lower;
    Rational upper;
};

/// Constraint rows of the rounding polytope split into two laminar families.
struct BihierarchyStructure {
    std::vector<ConstraintSet> first;   // one welfare set per agent
    std::vector<ConstraintSet> second;  // one assignment set per good, then singletons

    /// Throws std::logic_error unless the first family is pairwise disjoint,
    /// the second is laminar, and every variable occurs in the second family.
    void validate(std::size_t agent_count, std::size_t good_count) const;
};

/// Throws InputError unless every value is 0 or 1.
WelfareSolution max_welfare_eq_lp(const Instance& instance);

BihierarchyStructure bihierarchy_structure(const Instance& instance, const WelfareSolution& sol);

/// Convex combination of integral allocations reproducing the fractional
/// solution exactly; every agent's value is floor(w*) or ceil(w*).
Lottery bihierarchy_decompose(const Instance& instance, const WelfareSolution& sol);

Lottery solve_binary(const Instance& instance);

}  // namespace eqbobw
