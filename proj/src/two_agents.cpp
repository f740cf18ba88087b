#include "eqbobw/two_agents.hpp"

#include "eqbobw/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqbobw {

std::string to_string(BiasedCase c) {
    switch (c) {
        case BiasedCase::AlreadyBiased:
            return "already_biased";
        case BiasedCase::Case1:
            return "case1";
        case BiasedCase::Case21:
            return "case2.1";
        case BiasedCase::Case22a:
            return "case2.2a";
        case BiasedCase::Case22b:
            return "case2.2b";
    }
    return "unknown";
}

Allocation greedy_eqx(const Instance& instance) {
    const std::size_t n = instance.agent_count();
    const std::size_t m = instance.good_count();
    std::vector<std::size_t> owner(m, 0);
    std::vector<bool> taken(m, false);
    std::vector<Value> w(n, 0);
    for (std::size_t round = 0; round < m; ++round) {
        const std::size_t i =
            static_cast<std::size_t>(std::min_element(w.begin(), w.end()) - w.begin());
        std::size_t best = m;
        for (std::size_t g = 0; g < m; ++g) {
            if (!taken[g] && (best == m || instance.value(i, g) > instance.value(i, best))) {
                best = g;
            }
        }
        taken[best] = true;
        owner[best] = i;
        w[i] += instance.value(i, best);
    }
    return Allocation(std::move(owner));
}

namespace {

void require_two_normalised(const Instance& instance) {
    if (instance.agent_count() != 2) {
        throw UnsupportedError("the two-agent construction needs exactly 2 agents, got " +
                               std::to_string(instance.agent_count()));
    }
    if (!instance.is_normalised()) {
        throw NotNormalisedError("the two-agent construction needs a normalised instance");
    }
}

Value value_of(const Instance& instance, std::size_t agent, const std::vector<std::size_t>& owner) {
    Value s = 0;
    for (std::size_t g = 0; g < owner.size(); ++g) {
        if (owner[g] == agent) {
            s += instance.value(agent, g);
        }
    }
    return s;
}

// Favours agent 0; the caller relabels for agent 1.
BiasedTrace favour_agent_zero(const Instance& instance) {
    const std::size_t m = instance.good_count();
    BiasedTrace trace;
    trace.start = greedy_eqx(instance);
    std::vector<std::size_t> owner = trace.start.owner();
    const Value w0 = value_of(instance, 0, owner);
    const Value w1 = value_of(instance, 1, owner);
    trace.delta = w1 - w0;
    if (w0 >= w1) {
        trace.case_taken = BiasedCase::AlreadyBiased;
        trace.result = trace.start;
        return trace;
    }
    const Value delta = trace.delta;

    for (std::size_t g = 0; g < m; ++g) {
        if (owner[g] == 1 && instance.value(0, g) >= delta) {
            trace.case_taken = BiasedCase::Case1;
            trace.result = trace.start.with_agents_swapped(0, 1);
            return trace;
        }
    }

    std::vector<std::size_t> compressing;
    for (std::size_t g = 0; g < m; ++g) {
        if (instance.value(0, g) >= instance.value(1, g)) {
            if (owner[g] != 0) {
                throw std::logic_error("compressing good outside agent 0's bundle");
            }
            compressing.push_back(g);
        }
    }
    std::size_t hat = m;
    for (std::size_t g = 0; g < m && hat == m; ++g) {
        if (owner[g] == 1) {
            hat = g;
        }
    }
    owner[hat] = 0;
    trace.transfers.push_back(hat);
    Value a0 = w0 + instance.value(0, hat);
    Value a1 = w1 - instance.value(1, hat);

    for (std::size_t s : compressing) {
        const Value next0 = a0 - instance.value(0, s);
        const Value next1 = a1 + instance.value(1, s);
        if (next0 >= next1) {
            owner[s] = 1;
            trace.transfers.push_back(s);
            a0 = next0;
            a1 = next1;
            continue;
        }
        if (next0 <= a1) {
            trace.case_taken = BiasedCase::Case22a;
        } else {
            owner[s] = 1;
            trace.transfers.push_back(s);
            for (auto& o : owner) {
                o = 1 - o;
            }
            trace.case_taken = BiasedCase::Case22b;
        }
        trace.result = Allocation(std::move(owner));
        return trace;
    }
    trace.case_taken = BiasedCase::Case21;
    trace.result = Allocation(std::move(owner));
    return trace;
}

Value gap(const Instance& instance, const Allocation& a) {
    const IntProfile w = profile_of(instance, a);
    return w[0] - w[1];
}

}  // namespace

BiasedTrace one_biased_eq1(const Instance& instance, std::size_t agent) {
    require_two_normalised(instance);
    if (agent > 1) {
        throw InputError("agent index " + std::to_string(agent) + " out of range");
    }
    BiasedTrace trace;
    if (agent == 0) {
        trace = favour_agent_zero(instance);
    } else {
        trace = favour_agent_zero(instance.with_agents_swapped(0, 1));
        trace.start = trace.start.with_agents_swapped(0, 1);
        trace.result = trace.result.with_agents_swapped(0, 1);
    }
    trace.agent = agent;
    if (!is_eq1(instance, trace.result) || !is_i_biased(instance, trace.result, agent, Notion::EQ1)) {
        throw std::logic_error("biased construction produced an invalid allocation");
    }
    return trace;
}

TwoAgentSolution solve_two_agents_traced(const Instance& instance) {
    require_two_normalised(instance);
    BiasedTrace a = one_biased_eq1(instance, 0);
    BiasedTrace b = one_biased_eq1(instance, 1);
    const Value da = gap(instance, a.result);
    const Value db = gap(instance, b.result);
    std::vector<LotteryEntry> entries;
    if (da == db) {
        // Both gaps are zero: either allocation is already EQ.
        entries.push_back({a.result, Rational(1)});
    } else {
        const Rational p = Rational(-db) / Rational(da - db);
        if (p != 0) {
            entries.push_back({a.result, p});
        }
        if (p != 1) {
            entries.push_back({b.result, Rational(1) - p});
        }
    }
    return {Lottery(std::move(entries)), {std::move(a), std::move(b)}};
}

Lottery solve_two_agents(const Instance& instance) {
    return solve_two_agents_traced(instance).lottery;
}

Lottery shift_lottery(const Instance& instance) {
    const std::size_t n = instance.agent_count();
    if (instance.good_count() != n) {
        throw PreconditionError("shift lottery needs as many goods as agents");
    }
    if (!instance.is_normalised()) {
        throw NotNormalisedError("shift lottery needs a normalised instance");
    }
    std::vector<LotteryEntry> entries;
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<std::size_t> owner(n);
        for (std::size_t i = 0; i < n; ++i) {
            owner[(i + k) % n] = i;
        }
        entries.push_back({Allocation(std::move(owner)), Rational(1, n)});
    }
    return Lottery(std::move(entries));
}

Lottery identical_lottery(const Instance& instance) {
    if (!instance.has_identical_rows()) {
        throw PreconditionError("identical lottery needs identical valuation rows");
    }
    const std::size_t n = instance.agent_count();
    const Allocation base = greedy_eqx(instance);
    std::vector<LotteryEntry> entries;
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<std::size_t> owner = base.owner();
        for (auto& o : owner) {
            o = (o + k) % n;
        }
        entries.push_back({Allocation(std::move(owner)), Rational(1, n)});
    }
    return Lottery(std::move(entries));
}

}  // namespace eqbobw
