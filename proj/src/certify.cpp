#include "eqbobw/certify.hpp"

#include "eqbobw/errors.hpp"
#include "eqbobw/exactlp.hpp"

#include <map>
#include <stdexcept>

namespace eqbobw {

namespace {

std::size_t common_dimension(const std::vector<ValueProfile>& profiles) {
    if (profiles.empty()) {
        throw InputError("profile list is empty");
    }
    const std::size_t n = profiles.front().size();
    for (const auto& v : profiles) {
        if (v.size() != n) {
            throw InputError("profiles differ in dimension");
        }
    }
    return n;
}

Rational inner(const std::vector<Rational>& a, const ValueProfile& v) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * v[i];
    }
    return s;
}

}  // namespace

std::vector<ValueProfile> to_value_profiles(const std::vector<IntProfile>& profiles) {
    std::vector<ValueProfile> out;
    out.reserve(profiles.size());
    for (const auto& p : profiles) {
        out.push_back(to_rationals(p));
    }
    return out;
}

std::optional<Mixture> mix_to_equal(const std::vector<ValueProfile>& profiles) {
    const std::size_t n = common_dimension(profiles);
    const std::size_t k = profiles.size();
    // Variables: p_1..p_k >= 0, then mu free.
    lp::LinearProgram prog(k + 1);
    prog.bounds[k] = lp::Bounds::free();
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> row(k + 1);
        for (std::size_t c = 0; c < k; ++c) {
            row[c] = profiles[c][i];
        }
        row[k] = -1;
        prog.add(std::move(row), lp::Relation::Equal, 0);
    }
    std::vector<Rational> ones(k + 1, Rational(1));
    ones[k] = 0;
    prog.add(std::move(ones), lp::Relation::Equal, 1);

    const auto result = lp::solve(prog);
    const auto* opt = std::get_if<lp::Optimal>(&result);
    if (opt == nullptr) {
        return std::nullopt;
    }
    Mixture mix{std::vector<Rational>(opt->point.begin(), opt->point.begin() + static_cast<long>(k)),
                opt->point[k]};
    return mix;
}

std::optional<Witness> nonexistence_witness(const std::vector<ValueProfile>& profiles) {
    const std::size_t n = common_dimension(profiles);
    const std::size_t k = profiles.size();
    // min sum(u + l) s.t. sum_k p_k v^k_i + mu + u_i - l_i = 0, sum p = 1.
    // Its row multipliers are an optimal (lambda, eps) of the eps-maximisation,
    // which keeps the tableau at n+1 rows however many profiles there are.
    const std::size_t width = k + 1 + 2 * n;
    lp::LinearProgram prog(width, lp::Sense::Minimize);
    prog.bounds[k] = lp::Bounds::free();
    for (std::size_t i = 0; i < n; ++i) {
        prog.objective[k + 1 + i] = 1;
        prog.objective[k + 1 + n + i] = 1;
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> row(width);
        for (std::size_t c = 0; c < k; ++c) {
            row[c] = profiles[c][i];
        }
        row[k] = 1;
        row[k + 1 + i] = 1;
        row[k + 1 + n + i] = -1;
        prog.add(std::move(row), lp::Relation::Equal, 0);
    }
    std::vector<Rational> ones(width);
    for (std::size_t c = 0; c < k; ++c) {
        ones[c] = 1;
    }
    prog.add(std::move(ones), lp::Relation::Equal, 1);

    const auto result = lp::solve(prog);
    const auto& opt = std::get<lp::Optimal>(result);
    if (opt.value <= 0) {
        return std::nullopt;
    }
    Witness w;
    w.lambda.assign(opt.certificate.rows.begin(), opt.certificate.rows.begin() + static_cast<long>(n));
    w.max_inner = inner(w.lambda, profiles.front());
    for (const auto& v : profiles) {
        const Rational s = inner(w.lambda, v);
        if (s > w.max_inner) {
            w.max_inner = s;
        }
    }
    if (!verify_witness(w, profiles)) {
        throw std::logic_error("dual solution does not certify non-existence");
    }
    return w;
}

bool verify_witness(const Witness& witness, const std::vector<ValueProfile>& profiles) {
    if (profiles.empty()) {
        return false;
    }
    Rational sum = 0;
    for (const auto& x : witness.lambda) {
        sum += x;
    }
    if (sum != 0) {
        return false;
    }
    bool first = true;
    Rational best;
    for (const auto& v : profiles) {
        if (v.size() != witness.lambda.size()) {
            return false;
        }
        const Rational s = inner(witness.lambda, v);
        if (first || s > best) {
            best = s;
            first = false;
        }
    }
    return best == witness.max_inner && best < 0;
}

std::vector<std::pair<std::size_t, Rational>> caratheodory_indices(
    const std::vector<ValueProfile>& profiles, const std::vector<Rational>& weights) {
    if (profiles.size() != weights.size()) {
        throw InputError("caratheodory: profile and weight counts differ");
    }
    if (profiles.empty()) {
        return {};
    }
    const std::size_t n = common_dimension(profiles);

    std::vector<std::pair<std::size_t, Rational>> live;
    std::map<ValueProfile, std::size_t> slot;
    for (std::size_t k = 0; k < profiles.size(); ++k) {
        if (weights[k] == 0) {
            continue;
        }
        auto [it, fresh] = slot.emplace(profiles[k], live.size());
        if (fresh) {
            live.emplace_back(k, weights[k]);
        } else {
            live[it->second].second += weights[k];
        }
    }

    while (live.size() > n + 1) {
        std::vector<ValueProfile> head;
        for (std::size_t t = 0; t < n + 2; ++t) {
            head.push_back(profiles[live[t].first]);
        }
        const auto c = lp::affine_dependency(head);
        if (!c) {
            throw std::logic_error("n+2 points in dimension n must be affinely dependent");
        }
        // Shift weight along -c until some positive-coefficient entry hits zero.
        std::optional<Rational> step;
        for (std::size_t t = 0; t < n + 2; ++t) {
            if ((*c)[t] > 0) {
                Rational r = live[t].second / (*c)[t];
                if (!step || r < *step) {
                    step = r;
                }
            }
        }
        std::vector<std::pair<std::size_t, Rational>> next;
        for (std::size_t t = 0; t < live.size(); ++t) {
            Rational w = live[t].second;
            if (t < n + 2) {
                w -= *step * (*c)[t];
            }
            if (w != 0) {
                next.emplace_back(live[t].first, std::move(w));
            }
        }
        live = std::move(next);
    }
    return live;
}

std::vector<WeightedProfile> caratheodory_prune(std::vector<WeightedProfile> entries) {
    std::vector<ValueProfile> profiles;
    std::vector<Rational> weights;
    for (const auto& e : entries) {
        profiles.push_back(e.profile);
        weights.push_back(e.weight);
    }
    std::vector<WeightedProfile> out;
    for (auto& [k, w] : caratheodory_indices(profiles, weights)) {
        out.push_back({std::move(entries[k].profile), std::move(w)});
    }
    return out;
}

Lottery prune_lottery(const Instance& instance, const Lottery& lottery) {
    std::vector<ValueProfile> profiles;
    std::vector<Rational> weights;
    for (const auto& e : lottery.support()) {
        profiles.push_back(to_rationals(profile_of(instance, e.allocation)));
        weights.push_back(e.probability);
    }
    std::vector<LotteryEntry> kept;
    for (auto& [k, w] : caratheodory_indices(profiles, weights)) {
        kept.push_back({lottery.support()[k].allocation, std::move(w)});
    }
    return Lottery(std::move(kept));
}

BobwDecision decide_bobw(const ProfileSet& set) {
    const auto ints = set.profiles();
    const auto profiles = to_value_profiles(ints);
    if (auto mix = mix_to_equal(profiles)) {
        std::vector<ValueProfile> used;
        std::vector<Rational> weights;
        std::vector<std::size_t> origin;
        for (std::size_t k = 0; k < profiles.size(); ++k) {
            if (mix->probabilities[k] != 0) {
                used.push_back(profiles[k]);
                weights.push_back(mix->probabilities[k]);
                origin.push_back(k);
            }
        }
        std::vector<LotteryEntry> entries;
        for (auto& [t, w] : caratheodory_indices(used, weights)) {
            entries.push_back({set.representative.at(ints[origin[t]]), std::move(w)});
        }
        return Lottery(std::move(entries));
    }
    auto witness = nonexistence_witness(profiles);
    if (!witness) {
        throw std::logic_error("profile set is neither mixable nor separable");
    }
    return *witness;
}

}  // namespace eqbobw
