#include "eqbobw/binary.hpp"
#include "eqbobw/errors.hpp"
#include "support/generators.hpp"
#include "support/naive.hpp"

#include <doctest.h>

using namespace eqbobw;

namespace {
Rational brute_welfare(const Instance& inst) {
    return naive::binary_equal_welfare(inst);
}
}  // namespace

TEST_CASE("welfare LP values") {
    CHECK(max_welfare_eq_lp(Instance({{1, 1, 1}, {1, 1, 1}})).welfare_per_agent == Rational(3, 2));
    CHECK(max_welfare_eq_lp(Instance({{1, 1}, {1, 1}})).welfare_per_agent == 1);
    CHECK(max_welfare_eq_lp(Instance({{1, 0}, {1, 0}})).welfare_per_agent == Rational(1, 2));
    CHECK(max_welfare_eq_lp(Instance({{0, 0}, {1, 1}})).welfare_per_agent == 0);
    CHECK_THROWS_AS(max_welfare_eq_lp(Instance({{2, 0}, {1, 1}})), InputError);
}

TEST_CASE("decomposition of three identical goods") {
    const Instance inst({{1, 1, 1}, {1, 1, 1}});
    const Lottery l = solve_binary(inst);
    std::map<IntProfile, Rational> mass;
    for (const auto& e : l.support()) mass[profile_of(inst, e.allocation)] += e.probability;
    CHECK(mass.size() == 2);
    CHECK(mass[IntProfile{2, 1}] == Rational(1, 2));
    CHECK(mass[IntProfile{1, 2}] == Rational(1, 2));
    CHECK(check_bobw(inst, l, Notion::EQ1).passed());
}

TEST_CASE("structure families") {
    const Instance inst({{1, 0, 1}, {1, 1, 0}, {0, 1, 1}});
    const WelfareSolution sol = max_welfare_eq_lp(inst);
    const BihierarchyStructure s = bihierarchy_structure(inst, sol);
    CHECK(s.first.size() == 3);
    CHECK_NOTHROW(s.validate(3, 3));
    BihierarchyStructure broken = s;
    broken.first.push_back(broken.first.front());
    CHECK_THROWS_AS(broken.validate(3, 3), std::logic_error);
    BihierarchyStructure uncovered = s;
    uncovered.second.clear();
    CHECK_THROWS_AS(uncovered.validate(3, 3), std::logic_error);
}

TEST_CASE("all-zero and single-agent instances") {
    const Instance zero({{0, 0, 0}, {0, 0, 0}});
    CHECK(check_bobw(zero, solve_binary(zero), Notion::EQ1).passed());
    const Instance one({{1, 0, 1}});
    CHECK(check_bobw(one, solve_binary(one), Notion::EQ1).passed());
    const Instance none({{}, {}});
    CHECK(check_bobw(none, solve_binary(none), Notion::EQ1).passed());
}

TEST_CASE("random binary instances") {
    std::mt19937_64 rng(8);
    for (int run = 0; run < 300; ++run) {
        const std::size_t n = 1 + rng() % 4;
        const std::size_t m = rng() % 8;
        const Instance inst = gen::random_binary(rng, n, m);
        const WelfareSolution sol = max_welfare_eq_lp(inst);
        CHECK(sol.welfare_per_agent == brute_welfare(inst));
        const Lottery l = bihierarchy_decompose(inst, sol);
        REQUIRE(check_bobw(inst, l, Notion::EQ1).passed());
        CHECK(l.expectation(n) == sol.fractional);
        const Value lo = static_cast<Value>(floor(sol.welfare_per_agent));
        const Value hi = static_cast<Value>(ceil(sol.welfare_per_agent));
        for (const auto& e : l.support())
            for (Value v : profile_of(inst, e.allocation)) CHECK((v == lo || v == hi));
    }
}
