#include "eqbobw/errors.hpp"
#include "eqbobw/oracle.hpp"
#include "eqbobw/reductions.hpp"
#include "support/naive.hpp"

#include <doctest.h>

using namespace eqbobw;

TEST_CASE("weak generator") {
    const PartitionInput in{{1, 1, 1, 1}, 2};
    const Instance inst = gen_weak(in);
    CHECK(inst.agent_count() == 3);
    CHECK(inst.good_count() == 6);
    CHECK(inst.valuations()[0] == std::vector<Value>{2, 2, 2, 2, 8, 2});
    CHECK(inst.valuations()[1] == std::vector<Value>{1, 1, 1, 1, 10, 4});
    CHECK(inst.is_normalised() == Value(18));

    const Lottery l = weak_forward_lottery(in, {0, 1}, {2, 3});
    CHECK(l.size() == 3);
    CHECK(expected_profile(inst, l) == ValueProfile(3, Rational(66, 13)));
    CHECK(check_bobw(inst, l, Notion::EQ1).passed());
    std::vector<Rational> probs;
    for (const auto& e : l.support()) probs.push_back(e.probability);
    std::sort(probs.begin(), probs.end());
    CHECK(probs == std::vector<Rational>{Rational(4, 13), Rational(4, 13), Rational(5, 13)});

    CHECK_THROWS_AS(gen_weak({{1, 2}, 2}), InputError);
    CHECK_THROWS_AS(gen_weak({{4}, 2}), InputError);
    CHECK_THROWS_AS(weak_forward_lottery(in, {0}, {1, 2, 3}), InputError);
}

TEST_CASE("strong generator") {
    const PartitionInput in{{1, 1, 2, 1, 1, 2}, 4};
    const Instance inst = gen_strong(in);
    CHECK(inst.agent_count() == 3);
    CHECK(inst.good_count() == 8);
    CHECK(inst.is_normalised() == Value((2 * 36 / 3 + 2) * 4));
    const Lottery l = strong_forward_lottery(in, {{0, 1, 2}, {3, 4, 5}});
    std::vector<Rational> probs;
    for (const auto& e : l.support()) probs.push_back(e.probability);
    std::sort(probs.begin(), probs.end());
    CHECK(probs == std::vector<Rational>{Rational(1, 14), Rational(1, 14), Rational(6, 7)});
    const auto exp = expected_profile(inst, l);
    CHECK(is_eq(exp));
    CHECK(check_bobw(inst, l, Notion::EQ1).passed());

    CHECK_THROWS_AS(gen_strong({{1, 1, 1, 1}, 2}), InputError);
    CHECK_THROWS_AS(strong_forward_lottery(in, {{0, 1, 3}, {2, 4, 5}}), InputError);
}

TEST_CASE("biased generator") {
    const Instance yes = gen_biased({{1, 1, 2}, 2});
    CHECK(yes.valuations()[0] == std::vector<Value>{2, 2, 2, 2});
    CHECK(yes.valuations()[1] == std::vector<Value>{1, 1, 2, 4});
    const auto a = exists_i_biased(yes, 0, Notion::EQ1);
    REQUIRE(a);
    CHECK(is_i_biased(yes, *a, 0, Notion::EQ1));
}

// With a number above T no partition exists, yet agent 0 can still be
// richest by a tie; below that bound the generator matches the source problem.
TEST_CASE("biased generator matches partition when no number exceeds T") {
    int agree = 0;
    int tie_only = 0;
    for (std::size_t m = 1; m <= 4; ++m) {
        std::vector<Value> b(m, 1);
        while (true) {
            Value total = 0;
            for (Value x : b) total += x;
            if (total % 2 == 0) {
                const PartitionInput in{b, total / 2};
                const bool yes = naive::has_equal_partition(b);
                const bool biased = exists_i_biased(gen_biased(in), 0, Notion::EQ1).has_value();
                if (*std::max_element(b.begin(), b.end()) <= in.target) {
                    CHECK(yes == biased);
                    ++agree;
                } else {
                    CHECK_FALSE(yes);
                    tie_only += biased ? 1 : 0;
                }
            }
            std::size_t k = 0;
            while (k < m && b[k] == 4) b[k++] = 1;
            if (k == m) break;
            ++b[k];
        }
    }
    CHECK(agree > 0);
    CHECK(tie_only > 0);
}

TEST_CASE("tie counterexample to the biased reduction") {
    const Instance inst = gen_biased({{1, 3}, 2});
    const Allocation a({1, 0, 2});
    CHECK(profile_of(inst, a) == IntProfile{2, 1, 2});
    CHECK(is_i_biased(inst, a, 0, Notion::EQ1));
    CHECK_FALSE(naive::has_equal_partition({1, 3}));
}

TEST_CASE("metadata") {
    CHECK_FALSE(describe_generated("weak", {{1, 1}, 1}).caveats.empty());
    CHECK(describe_generated("strong", {{1, 1, 1}, 3}).caveats.empty());
    CHECK_THROWS_AS(describe_generated("other", {{1, 1}, 1}), InputError);
}

TEST_CASE("canned instances") {
    CHECK(canned_names().size() == 4);
    for (const auto& name : canned_names()) {
        const CannedInstance c = canned(name);
        CHECK(c.metadata.name == name);
        if (c.metadata.verdicts.count("eq_eq1_exists") && c.instance.agent_count() <= 3)
            CHECK(std::holds_alternative<Lottery>(brute_force_bobw(c.instance, Notion::EQ1)) ==
                  c.metadata.verdicts.at("eq_eq1_exists"));
        if (c.metadata.verdicts.count("eq_eqx_exists"))
            CHECK(std::holds_alternative<Lottery>(brute_force_bobw(c.instance, Notion::EQX)) ==
                  c.metadata.verdicts.at("eq_eqx_exists"));
        for (std::size_t i = 0; i < c.instance.agent_count(); ++i) {
            const std::string key = "agent" + std::to_string(i) + "_biased_eq1_exists";
            if (c.metadata.verdicts.count(key))
                CHECK(exists_i_biased(c.instance, i, Notion::EQ1).has_value() ==
                      c.metadata.verdicts.at(key));
        }
    }
    CHECK_THROWS_AS(canned("nope"), InputError);
}
