#pragma once

#include "eqbobw/model.hpp"
#include "eqbobw/rational.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace eqbobw {

/// Zero-sum direction along which every profile of a set scores negatively.
struct Witness {
    std::vector<Rational> lambda;
    Rational max_inner;

    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Either a lottery that is ex ante EQ and ex post fair, or a witness that none exists.
using BobwDecision = std::variant<Lottery, Witness>;

struct Mixture {
    std::vector<Rational> probabilities;  // one per input profile
    Rational common_value;
};

std::vector<ValueProfile> to_value_profiles(const std::vector<IntProfile>& profiles);

/// Probabilities over the profiles whose mixture is constant across agents.
/// Throws InputError on an empty list or mismatched dimensions.
std::optional<Mixture> mix_to_equal(const std::vector<ValueProfile>& profiles);

/// Maximises eps subject to lambda.v <= -eps, sum lambda = 0, |lambda_i| <= 1.
/// Returns a witness exactly when the optimum is positive.
std::optional<Witness> nonexistence_witness(const std::vector<ValueProfile>& profiles);

/// True when lambda sums to zero, max_inner is the exact maximum of lambda.v
/// over the profiles, and that maximum is negative.
bool verify_witness(const Witness& witness, const std::vector<ValueProfile>& profiles);

struct WeightedProfile {
    ValueProfile profile;
    Rational weight;
};

/// Reweights onto at most n+1 entries with the same weighted sum. Equal
/// profiles are merged first (keeping the first). Input order is preserved
/// among survivors.
std::vector<WeightedProfile> caratheodory_prune(std::vector<WeightedProfile> entries);

/// Same as caratheodory_prune, reporting survivors as (input index, weight).
std::vector<std::pair<std::size_t, Rational>> caratheodory_indices(
    const std::vector<ValueProfile>& profiles, const std::vector<Rational>& weights);

/// Lottery with support at most n+1 and the same expected profile.
Lottery prune_lottery(const Instance& instance, const Lottery& lottery);

/// Mixing LP over the profile set; the lottery uses the representatives and
/// has at most n+1 allocations. Throws InputError on an empty set.
BobwDecision decide_bobw(const ProfileSet& profiles);

}  // namespace eqbobw
