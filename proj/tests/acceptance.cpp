// Runs every acceptance criterion and prints one PASS/FAIL line each.

#include "eqbobw/binary.hpp"
#include "eqbobw/certify.hpp"
#include "eqbobw/dp.hpp"
#include "eqbobw/oracle.hpp"
#include "eqbobw/reductions.hpp"
#include "eqbobw/two_agents.hpp"
#include "support/generators.hpp"
#include "support/naive.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace eqbobw;

namespace {

// A failed check records its message; the first few are printed.
struct Result {
    long checks = 0;
    long failures = 0;
    std::string first;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            if (failures++ == 0) first = what;
        }
    }
};

std::string show(const Instance& inst) {
    std::ostringstream s;
    s << '[';
    for (std::size_t i = 0; i < inst.agent_count(); ++i) {
        s << (i ? ",[" : "[");
        for (std::size_t g = 0; g < inst.good_count(); ++g) s << (g ? "," : "") << inst.value(i, g);
        s << ']';
    }
    s << ']';
    return s.str();
}

std::set<IntProfile> keys(const ProfileSet& s) {
    const auto v = s.profiles();
    return {v.begin(), v.end()};
}

ValueProfile rational_profile(const IntProfile& p) {
    ValueProfile out;
    for (Value v : p) out.emplace_back(static_cast<long>(v));
    return out;
}

// All value profiles of integral allocations, built good by good.
std::set<IntProfile> all_profiles(const Instance& inst) {
    std::set<IntProfile> layer{IntProfile(inst.agent_count(), 0)};
    for (std::size_t g = 0; g < inst.good_count(); ++g) {
        std::set<IntProfile> next;
        for (const auto& p : layer) {
            for (std::size_t i = 0; i < inst.agent_count(); ++i) {
                IntProfile q = p;
                q[i] += inst.value(i, g);
                next.insert(std::move(q));
            }
        }
        layer = std::move(next);
    }
    return layer;
}

Result criterion1() {
    Result r;
    std::mt19937_64 rng(1001);
    for (int run = 0; run < 10000; ++run) {
        const std::size_t m = rng() % 9;
        const Instance inst = gen::random_normalised(rng, 2, m, 12);
        const TwoAgentSolution sol = solve_two_agents_traced(inst);
        for (const auto& e : sol.lottery.support())
            r.expect(naive::eq1(inst, e.allocation.owner()), "support not EQ1 on " + show(inst));
        const ValueProfile exp = expected_profile(inst, sol.lottery);
        r.expect(exp[0] == exp[1], "unequal expectation on " + show(inst));
        for (const auto& t : sol.traces)
            r.expect(t.transfers.size() <= m, "too many transfers on " + show(inst));
    }
    return r;
}

Result criterion2() {
    Result r;
    const Instance inst({{1, 3, 5}, {4, 3, 2}});
    const auto eqx = enumerate_fair(inst, Notion::EQX);
    r.expect(eqx.size() == 1, "EQX allocation count is not 1");
    if (eqx.size() == 1) r.expect(profile_of(inst, eqx[0]) == IntProfile{5, 7}, "EQX profile is not (5,7)");
    const auto d = solve_general(inst, Notion::EQX);
    const auto* w = std::get_if<Witness>(&d);
    r.expect(w != nullptr, "solver found an EQX lottery");
    if (w) {
        r.expect(verify_witness(*w, to_value_profiles(profile_set(inst, Notion::EQX).profiles())),
                 "witness does not verify");
    }
    return r;
}

Result criterion3() {
    Result r;
    const Instance inst = canned("no_bobw_3x4").instance;
    const auto set = profile_set(inst, Notion::EQ1);
    r.expect(set.size() > 0, "no EQ1 profiles");
    for (const auto& p : set.profiles()) r.expect(2 * p[0] - p[1] - p[2] < 0, "profile violates the bound");
    const auto profiles = to_value_profiles(set.profiles());
    for (const auto& d : {brute_force_bobw(inst, Notion::EQ1), solve_general(inst, Notion::EQ1)}) {
        const auto* w = std::get_if<Witness>(&d);
        r.expect(w != nullptr, "a lottery was returned");
        if (w) r.expect(verify_witness(*w, profiles), "witness does not verify");
    }
    return r;
}

Result criterion4() {
    Result r;
    std::mt19937_64 rng(4004);
    for (int run = 0; run < 1000; ++run) {
        const std::size_t n = 1 + rng() % 4;
        const std::size_t m = rng() % 11;
        const Instance inst = gen::random_binary(rng, n, m);
        const std::string tag = " on " + show(inst);
        const WelfareSolution sol = max_welfare_eq_lp(inst);
        const Rational& w = sol.welfare_per_agent;
        r.expect(verify_optimality(sol.program, sol.optimum.point, sol.optimum.value, sol.optimum.certificate),
                 "optimality certificate fails" + tag);
        r.expect(w == naive::binary_equal_welfare(inst), "w* differs from the closed form" + tag);
        const Lottery l = solve_binary(inst);
        r.expect(l.expectation(n) == sol.fractional, "expectation differs from X*" + tag);
        r.expect(expected_profile(inst, l) == ValueProfile(n, w), "expected value differs from w*" + tag);
        const Value lo = static_cast<Value>(floor(w));
        const Value hi = static_cast<Value>(ceil(w));
        for (const auto& e : l.support()) {
            r.expect(naive::eq1(inst, e.allocation.owner()), "support not EQ1" + tag);
            for (Value v : naive::profile(inst, e.allocation.owner()))
                r.expect(v == lo || v == hi, "support value outside the rounding" + tag);
        }
        for (const auto& p : all_profiles(inst)) {
            if (std::adjacent_find(p.begin(), p.end(), std::not_equal_to<>()) == p.end()) {
                r.expect(Rational(static_cast<long>(n)) * w >= Rational(static_cast<long>(p[0] * Value(n))),
                         "integral EQ allocation beats w*" + tag);
            }
        }
    }
    return r;
}

void compare_dp_oracle(Result& r, const Instance& inst) {
    for (Notion notion : {Notion::EQ1, Notion::EQX}) {
        const std::string tag = " (" + to_string(notion) + ") on " + show(inst);
        r.expect(keys(fair_profile_set_dp(inst, notion).profiles) == keys(profile_set(inst, notion)),
                 "profile sets differ" + tag);
        r.expect(solve_general(inst, notion).index() == brute_force_bobw(inst, notion).index(),
                 "existence differs" + tag);
    }
}

// Every instance with n agents, m goods and values in [0, vmax].
void grid(Result& r, std::size_t n, std::size_t m, Value vmax) {
    std::vector<Value> cells(n * m, 0);
    while (true) {
        std::vector<std::vector<Value>> rows(n, std::vector<Value>(m));
        for (std::size_t k = 0; k < cells.size(); ++k) rows[k / m][k % m] = cells[k];
        compare_dp_oracle(r, Instance(std::move(rows)));
        std::size_t k = 0;
        while (k < cells.size() && cells[k] == vmax) cells[k++] = 0;
        if (k == cells.size()) break;
        ++cells[k];
    }
}

Result criterion5() {
    Result r;
    grid(r, 1, 3, 3);
    grid(r, 2, 0, 0);
    grid(r, 2, 1, 6);
    grid(r, 2, 2, 6);
    grid(r, 2, 3, 3);
    grid(r, 3, 1, 6);
    grid(r, 3, 2, 2);
    std::mt19937_64 rng(5005);
    for (int run = 0; run < 2000; ++run) {
        const std::size_t n = 1 + rng() % 3;
        compare_dp_oracle(r, gen::random_instance(rng, n, rng() % 7, 1 + static_cast<Value>(rng() % 6)));
    }
    return r;
}

Result criterion6() {
    Result r;
    {
        const PartitionInput in{{1, 1, 1, 1}, 2};
        const Instance inst = gen_weak(in);
        r.expect(inst.is_normalised() == Value((4 + 5) * 2), "weak instance total is not (m+5)T");
        const Lottery l = weak_forward_lottery(in, {0, 1}, {2, 3});
        r.expect(expected_profile(inst, l) == ValueProfile(3, Rational(66, 13)), "weak expectation is not 66/13");
        std::multiset<Rational> probs;
        for (const auto& e : l.support()) {
            probs.insert(e.probability);
            r.expect(naive::eq1(inst, e.allocation.owner()), "weak support not EQ1");
        }
        r.expect(probs == std::multiset<Rational>{Rational(5, 13), Rational(4, 13), Rational(4, 13)},
                 "weak probabilities differ");
    }
    {
        const PartitionInput in{{1, 1, 2, 1, 1, 2}, 4};
        const Instance inst = gen_strong(in);
        const Lottery l = strong_forward_lottery(in, {{0, 1, 2}, {3, 4, 5}});
        std::multiset<Rational> probs;
        Rational total = 0;
        for (const auto& e : l.support()) {
            probs.insert(e.probability);
            total += e.probability;
            r.expect(naive::eq1(inst, e.allocation.owner()), "strong support not EQ1");
        }
        r.expect(probs == std::multiset<Rational>{Rational(6, 7), Rational(1, 14), Rational(1, 14)},
                 "strong probabilities differ");
        r.expect(total == 1, "strong probabilities do not sum to 1");
        r.expect(is_eq(expected_profile(inst, l)), "strong expectations differ");
    }
    // Biased generator: every multiset of 1..6 of size at most 6 with an even sum.
    long mismatches = 0;
    std::string example;
    std::function<void(std::vector<Value>&, Value)> walk = [&](std::vector<Value>& b, Value from) {
        Value total = 0;
        for (Value x : b) total += x;
        if (!b.empty() && total % 2 == 0) {
            const bool yes = naive::has_equal_partition(b);
            const bool biased = exists_i_biased(gen_biased({b, total / 2}), 0, Notion::EQ1).has_value();
            if (yes != biased && mismatches++ == 0) {
                std::ostringstream s;
                s << "biased generator disagrees with partition on b=(";
                for (std::size_t k = 0; k < b.size(); ++k) s << (k ? "," : "") << b[k];
                s << ")";
                example = s.str();
            }
            ++r.checks;
        }
        if (b.size() == 6) return;
        for (Value x = from; x <= 6; ++x) {
            b.push_back(x);
            walk(b, x);
            b.pop_back();
        }
    };
    std::vector<Value> b;
    walk(b, 1);
    if (mismatches > 0) {
        r.failures += mismatches;
        if (r.first.empty()) r.first = example + " and " + std::to_string(mismatches - 1) + " more";
    }
    return r;
}

Result criterion7() {
    Result r;
    const Instance inst({{9, 6, 6}, {1, 10, 10}, {7, 7, 7}});
    r.expect(!exists_i_biased(inst, 0, Notion::EQ1), "oracle found a 0-biased allocation");
    r.expect(!exists_i_biased_dp(inst, 0, Notion::EQ1), "DP found a 0-biased allocation");
    for (std::size_t i : {1, 2}) {
        for (const auto& a : {exists_i_biased(inst, i, Notion::EQ1), exists_i_biased_dp(inst, i, Notion::EQ1)}) {
            r.expect(a.has_value(), "missing biased allocation for agent " + std::to_string(i));
            if (a) r.expect(is_i_biased(inst, *a, i, Notion::EQ1), "allocation is not biased");
        }
    }
    return r;
}

Result criterion8() {
    Result r;
    std::mt19937_64 rng(8008);
    for (int run = 0; run < 500; ++run) {
        const std::size_t n = 1 + rng() % 6;
        const Instance a = gen::random_normalised(rng, n, n, 10);
        r.expect(check_bobw(a, shift_lottery(a), Notion::EQX).passed(), "shift lottery fails on " + show(a));
        const Instance b = gen::random_identical(rng, n, rng() % 9, 10);
        r.expect(check_bobw(b, identical_lottery(b), Notion::EQX).passed(),
                 "identical lottery fails on " + show(b));
    }
    for (int run = 0; run < 500; ++run) {
        const std::size_t n = 1 + rng() % 4;
        const std::size_t m = rng() % 6;
        const Instance inst = gen::random_instance(rng, n, m, 6);
        const auto all = enumerate_fair(inst, Notion::EQ1);
        std::vector<LotteryEntry> entries;
        std::vector<Value> weights;
        Value total = 0;
        for (std::size_t k = 0; k < all.size() && k < 12; ++k) {
            weights.push_back(1 + static_cast<Value>(rng() % 5));
            total += weights.back();
        }
        for (std::size_t k = 0; k < weights.size(); ++k)
            entries.push_back({all[k], Rational(static_cast<long>(weights[k]), static_cast<long>(total))});
        const Lottery l(std::move(entries));
        const Lottery pruned = prune_lottery(inst, l);
        r.expect(pruned.size() <= n + 1, "pruned support too large on " + show(inst));
        r.expect(expected_profile(inst, pruned) == expected_profile(inst, l), "pruning moved the expectation");
        std::vector<WeightedProfile> wp;
        for (const auto& e : l.support()) wp.push_back({rational_profile(profile_of(inst, e.allocation)), e.probability});
        ValueProfile sum(n, Rational(0));
        const auto kept = caratheodory_prune(wp);
        for (const auto& e : kept)
            for (std::size_t i = 0; i < n; ++i) sum[i] += e.weight * e.profile[i];
        r.expect(kept.size() <= n + 1 && sum == expected_profile(inst, l), "profile pruning differs");
    }
    return r;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_s;
        Result (*run)();
    };
    const Criterion all[] = {
        {1, "two-agent completeness", 60, criterion1},
        {2, "EQX non-existence", 1, criterion2},
        {3, "three-agent non-existence", 1, criterion3},
        {4, "binary pipeline", 120, criterion4},
        {5, "DP and oracle agree", 180, criterion5},
        {6, "reduction forward directions", 30, criterion6},
        {7, "biased non-existence", 1, criterion7},
        {8, "shift, identical and pruning", 30, criterion8},
    };
    int failed = 0;
    for (const auto& c : all) {
        const auto start = std::chrono::steady_clock::now();
        Result r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r.failures = 1;
            r.first = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool pass = r.failures == 0 && secs < c.limit_s;
        failed += pass ? 0 : 1;
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << r.checks
                  << " checks, " << r.failures << " failures, " << secs << " s (limit " << c.limit_s << " s)";
        if (!r.first.empty()) std::cout << "; first: " << r.first;
        if (secs >= c.limit_s) std::cout << "; over time limit";
        std::cout << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
