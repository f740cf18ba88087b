#pragma once

#include "eqbobw/rational.hpp"

#include <compare>
#include <map>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eqbobw {

using Value = std::int64_t;
using IntProfile = std::vector<Value>;
using ValueProfile = std::vector<Rational>;

enum class Notion { EQ1, EQX };

std::string to_string(Notion notion);
/// Accepts "eq1" / "eqx" (case-insensitive).
Notion parse_notion(std::string_view text);

/// n agents, m goods, additive nonnegative integer valuations.
class Instance {
public:
    /// Throws InputError on ragged rows, negative values or zero agents.
    /// An instance without goods is written as n empty rows.
    explicit Instance(std::vector<std::vector<Value>> valuations);

    std::size_t agent_count() const { return agent_count_; }
    std::size_t good_count() const { return good_count_; }
    const std::vector<std::vector<Value>>& valuations() const { return valuations_; }

    Value value(std::size_t agent, std::size_t good) const {
        return valuations_[agent][good];
    }
    Value total(std::size_t agent) const;
    Value max_value() const;

    /// Common row sum t when every agent values M equally, otherwise empty.
    std::optional<Value> is_normalised() const;
    bool is_binary() const;
    bool has_identical_rows() const;

    /// Same goods with agents a and b exchanged.
    Instance with_agents_swapped(std::size_t a, std::size_t b) const;

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    std::size_t agent_count_;
    std::size_t good_count_;
    std::vector<std::vector<Value>> valuations_;
};

/// Integral allocation: good g belongs to owner()[g].
class Allocation {
public:
    Allocation() = default;
    explicit Allocation(std::vector<std::size_t> owner) : owner_(std::move(owner)) {}

    const std::vector<std::size_t>& owner() const { return owner_; }
    std::size_t good_count() const { return owner_.size(); }
    std::size_t owner_of(std::size_t good) const { return owner_[good]; }

    std::vector<std::size_t> bundle(std::size_t agent) const;

    /// Throws InputError unless the allocation has one owner in [0, n) per good.
    void validate_for(const Instance& instance) const;

    /// Returns a copy with agents a and b exchanging bundles.
    Allocation with_agents_swapped(std::size_t a, std::size_t b) const;

    friend auto operator<=>(const Allocation&, const Allocation&) = default;

private:
    std::vector<std::size_t> owner_;
};

/// n x m column-stochastic matrix of exact shares.
class FractionalAllocation {
public:
    /// Throws InputError when a share leaves [0,1] or a column does not sum to 1.
    FractionalAllocation(std::size_t agent_count, std::size_t good_count,
                         std::vector<std::vector<Rational>> shares);

    static FractionalAllocation from_integral(const Allocation& a, std::size_t agent_count);

    std::size_t agent_count() const { return shares_.size(); }
    std::size_t good_count() const { return good_count_; }
    const Rational& share(std::size_t agent, std::size_t good) const {
        return shares_[agent][good];
    }
    const std::vector<std::vector<Rational>>& shares() const { return shares_; }

    bool is_integral() const;
    /// Expected value of each agent's fractional bundle.
    ValueProfile profile(const Instance& instance) const;

    friend bool operator==(const FractionalAllocation&, const FractionalAllocation&) = default;

private:
    std::size_t good_count_;
    std::vector<std::vector<Rational>> shares_;
};

struct LotteryEntry {
    Allocation allocation;
    Rational probability;

    friend bool operator==(const LotteryEntry&, const LotteryEntry&) = default;
};

/// Finite distribution over integral allocations. Construction merges
/// duplicate allocations and orders the support by owner vector.
class Lottery {
public:
    /// Throws InputError on an empty support, probabilities outside (0,1],
    /// mismatched good counts, or a total different from 1.
    explicit Lottery(std::vector<LotteryEntry> entries);

    static Lottery certain(Allocation allocation);

    const std::vector<LotteryEntry>& support() const { return support_; }
    std::size_t size() const { return support_.size(); }
    std::size_t good_count() const { return support_.front().allocation.good_count(); }

    /// sum_k p_k A^k as an n x m matrix.
    FractionalAllocation expectation(std::size_t agent_count) const;

    friend bool operator==(const Lottery&, const Lottery&) = default;

private:
    std::vector<LotteryEntry> support_;
};

Value bundle_value(const Instance& instance, std::size_t agent,
                   std::span<const std::size_t> goods);

IntProfile profile_of(const Instance& instance, const Allocation& a);

bool is_eq1(const Instance& instance, const Allocation& a);
bool is_eqx(const Instance& instance, const Allocation& a);
bool is_fair(const Instance& instance, const Allocation& a, Notion notion);

bool is_eq(std::span<const Rational> profile);
bool is_eq(std::span<const Value> profile);

/// Agent i weakly richest in a fair allocation. Throws PreconditionError
/// when the allocation is not fair under the notion.
bool is_i_biased(const Instance& instance, const Allocation& a, std::size_t agent, Notion notion);

struct BobwReport {
    bool ex_ante_eq = false;
    bool ex_post_fair = false;
    ValueProfile expected_profile;
    /// Per support entry, whether it passes the notion predicate.
    std::vector<bool> support_fair;

    bool passed() const { return ex_ante_eq && ex_post_fair; }
};

/// Distinct value profiles of a set of fair allocations, each with the
/// first allocation found that realises it.
struct ProfileSet {
    std::map<IntProfile, Allocation> representative;

    std::size_t size() const { return representative.size(); }
    bool contains(const IntProfile& p) const { return representative.count(p) != 0; }
    /// Keeps the existing representative when the profile is already present.
    void insert(IntProfile p, const Allocation& a) { representative.emplace(std::move(p), a); }
    std::vector<IntProfile> profiles() const;
};

BobwReport check_bobw(const Instance& instance, const Lottery& lottery, Notion notion);

ValueProfile expected_profile(const Instance& instance, const Lottery& lottery);

}  // namespace eqbobw
