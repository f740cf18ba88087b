#pragma once

#include "eqbobw/certify.hpp"
#include "eqbobw/model.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace eqbobw {

inline constexpr std::uint64_t kDefaultStateCap = 10'000'000;

/// Bundle values, extreme own-good values and nonempty flags after some prefix of goods.
struct DPState {
    std::vector<Value> w;
    std::vector<Value> h;  // max own value (EQ1) or min own value (EQX); 0 when empty
    std::vector<bool> nonempty;

    friend bool operator==(const DPState&, const DPState&) = default;
};

struct DPStateHash {
    std::size_t operator()(const DPState& s) const;
};

struct DPLayer {
    std::vector<DPState> states;  // discovery order
    /// For layer t > 0: index of the predecessor in layer t-1 and the agent receiving good t-1.
    std::vector<std::pair<std::size_t, std::size_t>> parents;
    std::unordered_map<DPState, std::size_t, DPStateHash> index;
};

struct DPResult {
    Notion notion = Notion::EQ1;
    std::vector<DPLayer> layers;  // layers[t] after assigning goods 0..t-1
    ProfileSet profiles;          // fair final states projected onto w
    std::map<IntProfile, std::size_t> final_state;  // first fair final state for each profile
};

/// Applies one good to a state under the running max/min rule.
DPState dp_transition(const DPState& s, std::size_t agent, Value value, Notion notion);

/// w_j - h_j <= min_i w_i for every nonempty bundle j.
bool dp_state_fair(const DPState& s);

/// Reachable-state DP over goods. Throws ResourceError when a layer exceeds the cap.
DPResult fair_profile_set_dp(const Instance& instance, Notion notion,
                             std::uint64_t cap = kDefaultStateCap);

/// Throws InputError when the profile is not in the result.
Allocation reconstruct(const DPResult& result, const IntProfile& profile);

/// The DP profile set fed to the mixing LP; lotteries have at most n+1 allocations.
BobwDecision solve_general(const Instance& instance, Notion notion,
                           std::uint64_t cap = kDefaultStateCap);

std::optional<Allocation> exists_i_biased_dp(const Instance& instance, std::size_t agent,
                                             Notion notion, std::uint64_t cap = kDefaultStateCap);

}  // namespace eqbobw
