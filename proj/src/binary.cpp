#include "eqbobw/binary.hpp"

#include "eqbobw/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace eqbobw {

WelfareSolution max_welfare_eq_lp(const Instance& instance) {
    if (!instance.is_binary()) {
        throw InputError("binary pipeline needs every value to be 0 or 1");
    }
    const std::size_t n = instance.agent_count();
    const std::size_t m = instance.good_count();
    const std::size_t w = n * m;
    lp::LinearProgram prog(w + 1);
    prog.objective[w] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> row(w + 1);
        for (std::size_t g = 0; g < m; ++g) {
            row[i * m + g] = instance.value(i, g);
        }
        row[w] = -1;
        prog.add(std::move(row), lp::Relation::Equal, 0);
    }
    for (std::size_t g = 0; g < m; ++g) {
        std::vector<Rational> row(w + 1);
        for (std::size_t i = 0; i < n; ++i) {
            row[i * m + g] = 1;
        }
        prog.add(std::move(row), lp::Relation::Equal, 1);
    }
    auto result = lp::solve(prog);
    auto* opt = std::get_if<lp::Optimal>(&result);
    if (opt == nullptr) {
        throw std::logic_error("welfare LP must have an optimum");
    }
    std::vector<std::vector<Rational>> shares(n, std::vector<Rational>(m));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t g = 0; g < m; ++g) {
            shares[i][g] = opt->point[i * m + g];
        }
    }
    return WelfareSolution{FractionalAllocation(n, m, std::move(shares)), opt->point[w],
                           std::move(prog), std::move(*opt)};
}

BihierarchyStructure bihierarchy_structure(const Instance& instance, const WelfareSolution& sol) {
    const std::size_t n = instance.agent_count();
    const std::size_t m = instance.good_count();
    const Rational lo(floor(sol.welfare_per_agent));
    const Rational hi(ceil(sol.welfare_per_agent));
    BihierarchyStructure s;
    for (std::size_t i = 0; i < n; ++i) {
        ConstraintSet set{{}, lo, hi};
        for (std::size_t g = 0; g < m; ++g) {
            if (instance.value(i, g) == 1) {
                set.cells.emplace_back(i, g);
            }
        }
        s.first.push_back(std::move(set));
    }
    for (std::size_t g = 0; g < m; ++g) {
        ConstraintSet set{{}, Rational(1), Rational(1)};
        for (std::size_t i = 0; i < n; ++i) {
            set.cells.emplace_back(i, g);
        }
        s.second.push_back(std::move(set));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t g = 0; g < m; ++g) {
            s.second.push_back({{{i, g}}, Rational(0), Rational(1)});
        }
    }
    return s;
}

void BihierarchyStructure::validate(std::size_t agent_count, std::size_t good_count) const {
    std::set<Cell> seen;
    for (const auto& set : first) {
        for (const auto& c : set.cells) {
            if (!seen.insert(c).second) {
                throw std::logic_error("welfare constraint sets overlap");
            }
        }
    }
    std::vector<std::set<Cell>> sets;
    for (const auto& set : second) {
        sets.emplace_back(set.cells.begin(), set.cells.end());
    }
    for (std::size_t a = 0; a < sets.size(); ++a) {
        for (std::size_t b = a + 1; b < sets.size(); ++b) {
            const auto& x = sets[a].size() <= sets[b].size() ? sets[a] : sets[b];
            const auto& y = sets[a].size() <= sets[b].size() ? sets[b] : sets[a];
            const auto shared = static_cast<std::size_t>(
                std::count_if(x.begin(), x.end(), [&](const Cell& c) { return y.count(c) != 0; }));
            if (shared != 0 && shared != x.size()) {
                throw std::logic_error("assignment constraint family is not laminar");
            }
        }
    }
    std::set<Cell> covered;
    for (const auto& s : sets) {
        covered.insert(s.begin(), s.end());
    }
    if (covered.size() != agent_count * good_count) {
        throw std::logic_error("constraint families do not cover every variable");
    }
}

namespace {

using Matrix = std::vector<std::vector<Rational>>;

struct Polytope {
    const Instance& instance;
    Rational lo;
    Rational hi;

    Rational agent_sum(const Matrix& x, std::size_t i) const {
        Rational s = 0;
        for (std::size_t g = 0; g < x[i].size(); ++g) {
            if (instance.value(i, g) == 1) {
                s += x[i][g];
            }
        }
        return s;
    }

    bool contains(const Matrix& x) const {
        const std::size_t n = instance.agent_count();
        const std::size_t m = instance.good_count();
        for (std::size_t g = 0; g < m; ++g) {
            Rational col = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (x[i][g] < 0) {
                    return false;
                }
                col += x[i][g];
            }
            if (col != 1) {
                return false;
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            const Rational s = agent_sum(x, i);
            if (s < lo || s > hi) {
                return false;
            }
        }
        return true;
    }
};

bool integral(const Matrix& x) {
    for (const auto& row : x) {
        for (const auto& v : row) {
            if (v != 0 && v != 1) {
                return false;
            }
        }
    }
    return true;
}

// Moves x to an integral point of its minimal face. Each step follows a cycle
// or a path of fractional entries in the graph goods -- agents, where entries
// the agent values at 0 hang off one shared unconstrained node.
Matrix round_in_face(const Polytope& poly, Matrix x) {
    const Instance& inst = poly.instance;
    const std::size_t n = inst.agent_count();
    const std::size_t m = inst.good_count();
    const std::size_t zero_node = m + n;
    for (;;) {
        std::vector<Cell> edges;
        std::vector<std::vector<std::size_t>> incident(m + n + 1);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t g = 0; g < m; ++g) {
                if (x[i][g] != 0 && x[i][g] != 1) {
                    const std::size_t e = edges.size();
                    edges.emplace_back(i, g);
                    incident[g].push_back(e);
                    incident[inst.value(i, g) == 1 ? m + i : zero_node].push_back(e);
                }
            }
        }
        if (edges.empty()) {
            return x;
        }
        std::vector<Rational> sums(n);
        for (std::size_t i = 0; i < n; ++i) {
            sums[i] = poly.agent_sum(x, i);
        }
        auto eligible = [&](std::size_t node) {
            return node == zero_node || (node >= m && !is_integer(sums[node - m]));
        };
        auto other_end = [&](std::size_t e, std::size_t node) {
            const auto [i, g] = edges[e];
            return node == g ? (inst.value(i, g) == 1 ? m + i : zero_node) : g;
        };

        std::size_t start = edges.empty() ? 0 : edges.front().second;
        for (std::size_t node = m; node <= zero_node; ++node) {
            if (!incident[node].empty() && eligible(node)) {
                start = node;
                break;
            }
        }
        std::vector<std::size_t> nodes{start};
        std::vector<std::size_t> walk;
        std::vector<long> position(m + n + 1, -1);
        position[start] = 0;
        std::size_t first_edge = 0;
        std::size_t cur = start;
        for (;;) {
            std::optional<std::size_t> step;
            for (std::size_t e : incident[cur]) {
                if (walk.empty() || e != walk.back()) {
                    step = e;
                    break;
                }
            }
            if (!step) {
                throw std::logic_error("rounding walk reached a dead end");
            }
            const std::size_t next = other_end(*step, cur);
            walk.push_back(*step);
            if (position[next] >= 0) {
                first_edge = static_cast<std::size_t>(position[next]);
                break;
            }
            if (eligible(next)) {
                break;
            }
            position[next] = static_cast<long>(nodes.size());
            nodes.push_back(next);
            cur = next;
        }

        std::vector<std::pair<std::size_t, int>> signed_edges;
        int sign = 1;
        for (std::size_t t = first_edge; t < walk.size(); ++t) {
            signed_edges.emplace_back(walk[t], sign);
            sign = -sign;
        }
        std::optional<Rational> eps;
        auto limit = [&](Rational r) {
            if (!eps || r < *eps) {
                eps = std::move(r);
            }
        };
        std::vector<int> agent_delta(n, 0);
        for (const auto& [e, s] : signed_edges) {
            const auto [i, g] = edges[e];
            limit(s > 0 ? Rational(1 - x[i][g]) : x[i][g]);
            if (inst.value(i, g) == 1) {
                agent_delta[i] += s;
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (agent_delta[i] > 0) {
                limit((poly.hi - sums[i]) / agent_delta[i]);
            } else if (agent_delta[i] < 0) {
                limit((sums[i] - poly.lo) / -agent_delta[i]);
            }
        }
        if (!eps || *eps <= 0) {
            throw std::logic_error("rounding walk found no room to move");
        }
        for (const auto& [e, s] : signed_edges) {
            const auto [i, g] = edges[e];
            x[i][g] += s * *eps;
        }
    }
}

Allocation to_allocation(const Matrix& v) {
    const std::size_t m = v.empty() ? 0 : v.front().size();
    std::vector<std::size_t> owner(m);
    for (std::size_t g = 0; g < m; ++g) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i][g] == 1) {
                owner[g] = i;
            }
        }
    }
    return Allocation(std::move(owner));
}

}  // namespace

Lottery bihierarchy_decompose(const Instance& instance, const WelfareSolution& sol) {
    const std::size_t n = instance.agent_count();
    const std::size_t m = instance.good_count();
    const Polytope poly{instance, Rational(floor(sol.welfare_per_agent)),
                        Rational(ceil(sol.welfare_per_agent))};
    Matrix x = sol.fractional.shares();
    if (sol.fractional.agent_count() != n || sol.fractional.good_count() != m || !poly.contains(x)) {
        throw PreconditionError("fractional allocation lies outside the rounding polytope");
    }

    std::vector<LotteryEntry> entries;
    Rational remaining = 1;
    const std::size_t max_rounds = n * m + n + 2;
    for (std::size_t round = 0;; ++round) {
        if (round > max_rounds) {
            throw std::logic_error("decomposition did not terminate");
        }
        if (integral(x)) {
            entries.push_back({to_allocation(x), remaining});
            break;
        }
        const Matrix v = round_in_face(poly, x);
        // Largest t keeping x + t(x - v) inside the polytope.
        std::optional<Rational> t;
        auto limit = [&](Rational r) {
            if (!t || r < *t) {
                t = std::move(r);
            }
        };
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t g = 0; g < m; ++g) {
                const Rational d = x[i][g] - v[i][g];
                if (d < 0) {
                    limit(x[i][g] / -d);
                }
            }
            const Rational s = poly.agent_sum(x, i);
            const Rational d = s - poly.agent_sum(v, i);
            if (d > 0) {
                limit((poly.hi - s) / d);
            } else if (d < 0) {
                limit((s - poly.lo) / -d);
            }
        }
        if (!t || *t <= 0) {
            throw std::logic_error("vertex does not lie in the minimal face");
        }
        const Rational p = *t / (1 + *t);
        entries.push_back({to_allocation(v), remaining * p});
        remaining *= 1 - p;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t g = 0; g < m; ++g) {
                x[i][g] += *t * (x[i][g] - v[i][g]);
            }
        }
    }

    Lottery lottery(std::move(entries));
    if (!(lottery.expectation(n) == sol.fractional)) {
        throw std::logic_error("decomposition does not reproduce the fractional allocation");
    }
    for (const auto& e : lottery.support()) {
        for (Value w : profile_of(instance, e.allocation)) {
            if (w != poly.lo && w != poly.hi) {
                throw std::logic_error("support allocation leaves the welfare band");
            }
        }
    }
    return lottery;
}

Lottery solve_binary(const Instance& instance) {
    const WelfareSolution sol = max_welfare_eq_lp(instance);
    bihierarchy_structure(instance, sol).validate(instance.agent_count(), instance.good_count());
    if (!lp::verify_optimality(sol.program, sol.optimum.point, sol.optimum.value,
                               sol.optimum.certificate)) {
        throw std::logic_error("welfare LP certificate failed re-verification");
    }
    Lottery lottery = bihierarchy_decompose(instance, sol);
    const BobwReport report = check_bobw(instance, lottery, Notion::EQ1);
    if (!report.passed() || report.expected_profile.front() != sol.welfare_per_agent) {
        throw std::logic_error("binary lottery failed re-verification");
    }
    return lottery;
}

}  // namespace eqbobw
