#pragma once

#include "eqbobw/certify.hpp"
#include "eqbobw/model.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace eqbobw {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Every allocation passing the notion predicate, in lexicographic owner order.
/// Throws ResourceError when n^m exceeds the cap.
std::vector<Allocation> enumerate_fair(const Instance& instance, Notion notion,
                                       std::uint64_t cap = kDefaultEnumerationCap);

ProfileSet profile_set(const Instance& instance, Notion notion,
                       std::uint64_t cap = kDefaultEnumerationCap);

BobwDecision brute_force_bobw(const Instance& instance, Notion notion,
                              std::uint64_t cap = kDefaultEnumerationCap);

/// First fair allocation (in enumeration order) where the agent is weakly richest.
std::optional<Allocation> exists_i_biased(const Instance& instance, std::size_t agent,
                                          Notion notion,
                                          std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace eqbobw
