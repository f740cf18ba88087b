#include "eqbobw/model.hpp"

#include "eqbobw/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace eqbobw {

std::string to_string(Notion notion) { return notion == Notion::EQ1 ? "eq1" : "eqx"; }

Notion parse_notion(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "eq1") {
        return Notion::EQ1;
    }
    if (lower == "eqx") {
        return Notion::EQX;
    }
    throw InputError("unknown fairness notion '" + std::string(text) + "' (expected eq1 or eqx)");
}

// ---------------------------------------------------------------------------
// Instance

Instance::Instance(std::vector<std::vector<Value>> valuations)
    : agent_count_(valuations.size()),
      good_count_(valuations.empty() ? 0 : valuations.front().size()),
      valuations_(std::move(valuations)) {
    if (agent_count_ == 0) {
        throw InputError("instance needs at least one agent");
    }
    for (std::size_t i = 0; i < agent_count_; ++i) {
        if (valuations_[i].size() != good_count_) {
            throw InputError("valuation row " + std::to_string(i) + " has " +
                             std::to_string(valuations_[i].size()) + " entries, expected " +
                             std::to_string(good_count_));
        }
        for (Value v : valuations_[i]) {
            if (v < 0) {
                throw InputError("valuations must be nonnegative");
            }
        }
    }
}

Value Instance::total(std::size_t agent) const {
    Value sum = 0;
    for (Value v : valuations_.at(agent)) {
        sum += v;
    }
    return sum;
}

Value Instance::max_value() const {
    Value best = 0;
    for (const auto& row : valuations_) {
        for (Value v : row) {
            best = std::max(best, v);
        }
    }
    return best;
}

std::optional<Value> Instance::is_normalised() const {
    const Value t = total(0);
    for (std::size_t i = 1; i < agent_count_; ++i) {
        if (total(i) != t) {
            return std::nullopt;
        }
    }
    return t;
}

bool Instance::is_binary() const {
    for (const auto& row : valuations_) {
        for (Value v : row) {
            if (v != 0 && v != 1) {
                return false;
            }
        }
    }
    return true;
}

bool Instance::has_identical_rows() const {
    return std::all_of(valuations_.begin(), valuations_.end(),
                       [&](const auto& row) { return row == valuations_.front(); });
}

Instance Instance::with_agents_swapped(std::size_t a, std::size_t b) const {
    auto rows = valuations_;
    std::swap(rows.at(a), rows.at(b));
    return Instance(std::move(rows));
}

// ---------------------------------------------------------------------------
// Allocation

std::vector<std::size_t> Allocation::bundle(std::size_t agent) const {
    std::vector<std::size_t> goods;
    for (std::size_t g = 0; g < owner_.size(); ++g) {
        if (owner_[g] == agent) {
            goods.push_back(g);
        }
    }
    return goods;
}

void Allocation::validate_for(const Instance& instance) const {
    if (owner_.size() != instance.good_count()) {
        throw InputError("allocation covers " + std::to_string(owner_.size()) +
                         " goods but the instance has " +
                         std::to_string(instance.good_count()));
    }
    for (std::size_t g = 0; g < owner_.size(); ++g) {
        if (owner_[g] >= instance.agent_count()) {
            throw InputError("good " + std::to_string(g) + " assigned to unknown agent " +
                             std::to_string(owner_[g]));
        }
    }
}

Allocation Allocation::with_agents_swapped(std::size_t a, std::size_t b) const {
    auto owner = owner_;
    for (auto& o : owner) {
        if (o == a) {
            o = b;
        } else if (o == b) {
            o = a;
        }
    }
    return Allocation(std::move(owner));
}

// ---------------------------------------------------------------------------
// FractionalAllocation

FractionalAllocation::FractionalAllocation(std::size_t agent_count, std::size_t good_count,
                                           std::vector<std::vector<Rational>> shares)
    : good_count_(good_count), shares_(std::move(shares)) {
    if (shares_.size() != agent_count) {
        throw InputError("fractional allocation has wrong number of agent rows");
    }
    for (const auto& row : shares_) {
        if (row.size() != good_count) {
            throw InputError("fractional allocation row has wrong length");
        }
        for (const auto& x : row) {
            if (x < 0 || x > 1) {
                throw InputError("fractional share outside [0,1]");
            }
        }
    }
    for (std::size_t g = 0; g < good_count; ++g) {
        Rational column = 0;
        for (const auto& row : shares_) {
            column += row[g];
        }
        if (column != 1) {
            throw InputError("column " + std::to_string(g) + " of fractional allocation sums to " +
                             to_fraction_string(column));
        }
    }
}

FractionalAllocation FractionalAllocation::from_integral(const Allocation& a,
                                                         std::size_t agent_count) {
    std::vector<std::vector<Rational>> shares(agent_count,
                                              std::vector<Rational>(a.good_count(), 0));
    for (std::size_t g = 0; g < a.good_count(); ++g) {
        shares.at(a.owner_of(g))[g] = 1;
    }
    return FractionalAllocation(agent_count, a.good_count(), std::move(shares));
}

bool FractionalAllocation::is_integral() const {
    for (const auto& row : shares_) {
        for (const auto& x : row) {
            if (x != 0 && x != 1) {
                return false;
            }
        }
    }
    return true;
}

ValueProfile FractionalAllocation::profile(const Instance& instance) const {
    if (instance.agent_count() != agent_count() || instance.good_count() != good_count_) {
        throw InputError("fractional allocation does not match instance dimensions");
    }
    ValueProfile out(agent_count(), Rational(0));
    for (std::size_t i = 0; i < agent_count(); ++i) {
        for (std::size_t g = 0; g < good_count_; ++g) {
            if (shares_[i][g] != 0) {
                out[i] += shares_[i][g] * instance.value(i, g);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Lottery

Lottery::Lottery(std::vector<LotteryEntry> entries) {
    if (entries.empty()) {
        throw InputError("lottery support must be nonempty");
    }
    const std::size_t m = entries.front().allocation.good_count();
    std::map<Allocation, Rational> merged;
    Rational total = 0;
    for (auto& e : entries) {
        if (e.allocation.good_count() != m) {
            throw InputError("lottery support allocations disagree on the number of goods");
        }
        if (e.probability <= 0 || e.probability > 1) {
            throw InputError("lottery probability " + to_fraction_string(e.probability) +
                             " outside (0,1]");
        }
        total += e.probability;
        merged[e.allocation] += e.probability;
    }
    if (total != 1) {
        throw InputError("lottery probabilities sum to " + to_fraction_string(total) +
                         ", expected 1");
    }
    support_.reserve(merged.size());
    for (auto& [alloc, p] : merged) {
        support_.push_back({alloc, p});
    }
}

Lottery Lottery::certain(Allocation allocation) {
    return Lottery({LotteryEntry{std::move(allocation), Rational(1)}});
}

FractionalAllocation Lottery::expectation(std::size_t agent_count) const {
    const std::size_t m = good_count();
    std::vector<std::vector<Rational>> shares(agent_count, std::vector<Rational>(m, 0));
    for (const auto& e : support_) {
        for (std::size_t g = 0; g < m; ++g) {
            const std::size_t owner = e.allocation.owner_of(g);
            if (owner >= agent_count) {
                throw InputError("lottery allocation names agent outside the instance");
            }
            shares[owner][g] += e.probability;
        }
    }
    return FractionalAllocation(agent_count, m, std::move(shares));
}

// ---------------------------------------------------------------------------
// Predicates

Value bundle_value(const Instance& instance, std::size_t agent,
                   std::span<const std::size_t> goods) {
    if (agent >= instance.agent_count()) {
        throw InputError("agent index " + std::to_string(agent) + " out of range");
    }
    std::vector<bool> seen(instance.good_count(), false);
    Value sum = 0;
    for (std::size_t g : goods) {
        if (g >= instance.good_count()) {
            throw InputError("good index " + std::to_string(g) + " out of range");
        }
        if (seen[g]) {
            throw InputError("good " + std::to_string(g) + " listed twice in bundle");
        }
        seen[g] = true;
        sum += instance.value(agent, g);
    }
    return sum;
}

IntProfile profile_of(const Instance& instance, const Allocation& a) {
    a.validate_for(instance);
    IntProfile w(instance.agent_count(), 0);
    for (std::size_t g = 0; g < a.good_count(); ++g) {
        const std::size_t i = a.owner_of(g);
        w[i] += instance.value(i, g);
    }
    return w;
}

namespace {

// w_j minus the best (EQ1) or worst (EQX) own good must not exceed any w_i.
// Agents with empty bundles impose nothing.
bool pairwise_condition(const Instance& instance, const Allocation& a, Notion notion) {
    a.validate_for(instance);
    const std::size_t n = instance.agent_count();
    IntProfile w(n, 0);
    IntProfile h(n, 0);
    std::vector<bool> nonempty(n, false);
    for (std::size_t g = 0; g < a.good_count(); ++g) {
        const std::size_t i = a.owner_of(g);
        const Value v = instance.value(i, g);
        w[i] += v;
        if (!nonempty[i]) {
            h[i] = v;
            nonempty[i] = true;
        } else {
            h[i] = notion == Notion::EQ1 ? std::max(h[i], v) : std::min(h[i], v);
        }
    }
    const Value poorest = *std::min_element(w.begin(), w.end());
    for (std::size_t j = 0; j < n; ++j) {
        if (nonempty[j] && w[j] - h[j] > poorest) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool is_eq1(const Instance& instance, const Allocation& a) {
    return pairwise_condition(instance, a, Notion::EQ1);
}

bool is_eqx(const Instance& instance, const Allocation& a) {
    return pairwise_condition(instance, a, Notion::EQX);
}

bool is_fair(const Instance& instance, const Allocation& a, Notion notion) {
    return pairwise_condition(instance, a, notion);
}

bool is_eq(std::span<const Rational> profile) {
    return std::adjacent_find(profile.begin(), profile.end(), std::not_equal_to<>()) ==
           profile.end();
}

bool is_eq(std::span<const Value> profile) {
    return std::adjacent_find(profile.begin(), profile.end(), std::not_equal_to<>()) ==
           profile.end();
}

bool is_i_biased(const Instance& instance, const Allocation& a, std::size_t agent, Notion notion) {
    if (agent >= instance.agent_count()) {
        throw InputError("agent index " + std::to_string(agent) + " out of range");
    }
    if (!is_fair(instance, a, notion)) {
        throw PreconditionError("allocation is not " + to_string(notion) +
                                "; biasedness is only defined for fair allocations");
    }
    const IntProfile w = profile_of(instance, a);
    return w[agent] == *std::max_element(w.begin(), w.end());
}

ValueProfile expected_profile(const Instance& instance, const Lottery& lottery) {
    if (lottery.good_count() != instance.good_count()) {
        throw InputError("lottery covers " + std::to_string(lottery.good_count()) +
                         " goods but the instance has " +
                         std::to_string(instance.good_count()));
    }
    ValueProfile expected(instance.agent_count(), Rational(0));
    for (const auto& e : lottery.support()) {
        const IntProfile w = profile_of(instance, e.allocation);
        for (std::size_t i = 0; i < w.size(); ++i) {
            expected[i] += e.probability * w[i];
        }
    }
    return expected;
}

std::vector<IntProfile> ProfileSet::profiles() const {
    std::vector<IntProfile> out;
    out.reserve(representative.size());
    for (const auto& [p, a] : representative) {
        out.push_back(p);
    }
    return out;
}

BobwReport check_bobw(const Instance& instance, const Lottery& lottery, Notion notion) {
    BobwReport report;
    report.expected_profile = expected_profile(instance, lottery);
    report.ex_ante_eq = is_eq(std::span<const Rational>(report.expected_profile));
    report.ex_post_fair = true;
    for (const auto& e : lottery.support()) {
        const bool fair = is_fair(instance, e.allocation, notion);
        report.support_fair.push_back(fair);
        report.ex_post_fair = report.ex_post_fair && fair;
    }
    return report;
}

}  // namespace eqbobw
