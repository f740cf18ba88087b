#include "eqbobw/oracle.hpp"

#include "eqbobw/errors.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace eqbobw {

namespace {

void check_cap(const Instance& instance, std::uint64_t cap) {
    const std::uint64_t n = instance.agent_count();
    std::uint64_t count = 1;
    for (std::size_t g = 0; g < instance.good_count(); ++g) {
        if (count > cap / n) {
            throw ResourceError("enumerating " + std::to_string(n) + "^" +
                                std::to_string(instance.good_count()) +
                                " allocations exceeds the cap of " + std::to_string(cap));
        }
        count *= n;
    }
    if (count > cap) {
        throw ResourceError("allocation count exceeds the cap of " + std::to_string(cap));
    }
}

// Visits owner vectors in lexicographic order; stops early when visit returns false.
void for_each_allocation(const Instance& instance, std::uint64_t cap,
                         const std::function<bool(const Allocation&)>& visit) {
    check_cap(instance, cap);
    const std::size_t n = instance.agent_count();
    const std::size_t m = instance.good_count();
    std::vector<std::size_t> owner(m, 0);
    for (;;) {
        if (!visit(Allocation(owner))) {
            return;
        }
        std::size_t pos = m;
        while (pos > 0 && owner[pos - 1] + 1 == n) {
            owner[--pos] = 0;
        }
        if (pos == 0) {
            return;
        }
        ++owner[pos - 1];
    }
}

}  // namespace

std::vector<Allocation> enumerate_fair(const Instance& instance, Notion notion, std::uint64_t cap) {
    std::vector<Allocation> out;
    for_each_allocation(instance, cap, [&](const Allocation& a) {
        if (is_fair(instance, a, notion)) {
            out.push_back(a);
        }
        return true;
    });
    return out;
}

ProfileSet profile_set(const Instance& instance, Notion notion, std::uint64_t cap) {
    ProfileSet set;
    for_each_allocation(instance, cap, [&](const Allocation& a) {
        if (is_fair(instance, a, notion)) {
            set.insert(profile_of(instance, a), a);
        }
        return true;
    });
    return set;
}

BobwDecision brute_force_bobw(const Instance& instance, Notion notion, std::uint64_t cap) {
    const ProfileSet set = profile_set(instance, notion, cap);
    BobwDecision decision = decide_bobw(set);
    if (const auto* lottery = std::get_if<Lottery>(&decision)) {
        if (!check_bobw(instance, *lottery, notion).passed()) {
            throw std::logic_error("mixing lottery failed re-verification");
        }
    }
    return decision;
}

std::optional<Allocation> exists_i_biased(const Instance& instance, std::size_t agent,
                                          Notion notion, std::uint64_t cap) {
    if (agent >= instance.agent_count()) {
        throw InputError("agent index " + std::to_string(agent) + " out of range");
    }
    std::optional<Allocation> found;
    for_each_allocation(instance, cap, [&](const Allocation& a) {
        if (is_fair(instance, a, notion) && is_i_biased(instance, a, agent, notion)) {
            found = a;
            return false;
        }
        return true;
    });
    return found;
}

}  // namespace eqbobw
