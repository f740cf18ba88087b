#include "eqbobw/dp.hpp"

#include "eqbobw/errors.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace eqbobw {

std::size_t DPStateHash::operator()(const DPState& s) const {
    std::size_t h = 0;
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    for (Value v : s.w) {
        mix(std::hash<Value>{}(v));
    }
    for (Value v : s.h) {
        mix(std::hash<Value>{}(v));
    }
    for (bool b : s.nonempty) {
        mix(b ? 1 : 2);
    }
    return h;
}

DPState dp_transition(const DPState& s, std::size_t agent, Value value, Notion notion) {
    DPState next = s;
    next.w[agent] += value;
    if (!s.nonempty[agent]) {
        next.h[agent] = value;
    } else if (notion == Notion::EQ1) {
        next.h[agent] = std::max(s.h[agent], value);
    } else {
        next.h[agent] = std::min(s.h[agent], value);
    }
    next.nonempty[agent] = true;
    return next;
}

bool dp_state_fair(const DPState& s) {
    const Value poorest = *std::min_element(s.w.begin(), s.w.end());
    for (std::size_t j = 0; j < s.w.size(); ++j) {
        if (s.nonempty[j] && s.w[j] - s.h[j] > poorest) {
            return false;
        }
    }
    return true;
}

namespace {

Allocation walk_back(const DPResult& result, std::size_t final_index) {
    const std::size_t m = result.layers.size() - 1;
    std::vector<std::size_t> owner(m);
    std::size_t idx = final_index;
    for (std::size_t t = m; t > 0; --t) {
        const auto [pred, agent] = result.layers[t].parents[idx];
        owner[t - 1] = agent;
        idx = pred;
    }
    return Allocation(std::move(owner));
}

}  // namespace

DPResult fair_profile_set_dp(const Instance& instance, Notion notion, std::uint64_t cap) {
    const std::size_t n = instance.agent_count();
    const std::size_t m = instance.good_count();
    DPResult result;
    result.notion = notion;
    result.layers.resize(m + 1);
    DPState origin{std::vector<Value>(n, 0), std::vector<Value>(n, 0), std::vector<bool>(n, false)};
    result.layers[0].index.emplace(origin, 0);
    result.layers[0].states.push_back(std::move(origin));

    for (std::size_t g = 0; g < m; ++g) {
        const DPLayer& prev = result.layers[g];
        DPLayer& layer = result.layers[g + 1];
        for (std::size_t p = 0; p < prev.states.size(); ++p) {
            for (std::size_t i = 0; i < n; ++i) {
                DPState next = dp_transition(prev.states[p], i, instance.value(i, g), notion);
                auto [it, fresh] = layer.index.try_emplace(std::move(next), layer.states.size());
                if (fresh) {
                    layer.states.push_back(it->first);
                    layer.parents.emplace_back(p, i);
                    if (layer.states.size() > cap) {
                        throw ResourceError("DP layer " + std::to_string(g + 1) +
                                            " exceeds the state cap of " + std::to_string(cap));
                    }
                }
            }
        }
    }

    const DPLayer& last = result.layers[m];
    for (std::size_t s = 0; s < last.states.size(); ++s) {
        if (!dp_state_fair(last.states[s])) {
            continue;
        }
        const IntProfile& w = last.states[s].w;
        if (result.final_state.emplace(w, s).second) {
            result.profiles.insert(w, walk_back(result, s));
        }
    }
    return result;
}

Allocation reconstruct(const DPResult& result, const IntProfile& profile) {
    const auto it = result.final_state.find(profile);
    if (it == result.final_state.end()) {
        throw InputError("profile is not reachable by a fair allocation");
    }
    return walk_back(result, it->second);
}

BobwDecision solve_general(const Instance& instance, Notion notion, std::uint64_t cap) {
    const DPResult dp = fair_profile_set_dp(instance, notion, cap);
    BobwDecision decision = decide_bobw(dp.profiles);
    if (const auto* lottery = std::get_if<Lottery>(&decision)) {
        if (!check_bobw(instance, *lottery, notion).passed()) {
            throw std::logic_error("DP lottery failed re-verification");
        }
    } else if (!verify_witness(std::get<Witness>(decision),
                               to_value_profiles(dp.profiles.profiles()))) {
        throw std::logic_error("DP witness failed re-verification");
    }
    return decision;
}

std::optional<Allocation> exists_i_biased_dp(const Instance& instance, std::size_t agent,
                                             Notion notion, std::uint64_t cap) {
    if (agent >= instance.agent_count()) {
        throw InputError("agent index " + std::to_string(agent) + " out of range");
    }
    const DPResult dp = fair_profile_set_dp(instance, notion, cap);
    for (const auto& [w, s] : dp.final_state) {
        if (w[agent] == *std::max_element(w.begin(), w.end())) {
            return reconstruct(dp, w);
        }
    }
    return std::nullopt;
}

}  // namespace eqbobw
