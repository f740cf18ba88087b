#include "eqbobw/reductions.hpp"

#include "eqbobw/errors.hpp"

#include <numeric>
#include <stdexcept>

namespace eqbobw {

namespace {

Value sum_of(const std::vector<Value>& xs) { return std::accumulate(xs.begin(), xs.end(), Value(0)); }

void require_positive(const PartitionInput& input) {
    if (input.numbers.empty()) {
        throw InputError("partition input needs at least one number");
    }
    for (Value b : input.numbers) {
        if (b <= 0) {
            throw InputError("partition numbers must be positive");
        }
    }
    if (input.target <= 0) {
        throw InputError("partition target must be positive");
    }
}

void require_two_way(const PartitionInput& input) {
    require_positive(input);
    if (sum_of(input.numbers) != 2 * input.target) {
        throw InputError("numbers sum to " + std::to_string(sum_of(input.numbers)) +
                         ", expected 2T = " + std::to_string(2 * input.target));
    }
}

std::size_t strong_k(const PartitionInput& input) {
    require_positive(input);
    const std::size_t m = input.numbers.size();
    if (m % 3 != 0) {
        throw InputError("strong reduction needs a multiple of 3 numbers, got " + std::to_string(m));
    }
    const std::size_t k = m / 3;
    if (sum_of(input.numbers) != static_cast<Value>(k) * input.target) {
        throw InputError("numbers sum to " + std::to_string(sum_of(input.numbers)) +
                         ", expected kT = " + std::to_string(static_cast<Value>(k) * input.target));
    }
    return k;
}

void assert_normalised(const Instance& instance, Value total) {
    const auto t = instance.is_normalised();
    if (!t || *t != total) {
        throw std::logic_error("generated instance is not normalised to the expected total");
    }
}

// Checks that the listed parts cover goods 0..m-1 exactly once with sum T each.
void require_partition(const PartitionInput& input,
                       const std::vector<std::vector<std::size_t>>& parts) {
    std::vector<bool> used(input.numbers.size(), false);
    for (const auto& part : parts) {
        Value s = 0;
        for (std::size_t g : part) {
            if (g >= input.numbers.size() || used[g]) {
                throw InputError("partition repeats or misses goods");
            }
            used[g] = true;
            s += input.numbers[g];
        }
        if (s != input.target) {
            throw InputError("partition part sums to " + std::to_string(s) + ", expected " +
                             std::to_string(input.target));
        }
    }
    for (bool u : used) {
        if (!u) {
            throw InputError("partition repeats or misses goods");
        }
    }
}

}  // namespace

Instance gen_weak(const PartitionInput& input) {
    require_two_way(input);
    const Value m = static_cast<Value>(input.numbers.size());
    const Value t = input.target;
    if (m < 2) {
        throw InputError("weak reduction needs at least two numbers");
    }
    std::vector<Value> first(input.numbers.size(), t);
    first.push_back(4 * t);
    first.push_back(t);
    std::vector<Value> other = input.numbers;
    other.push_back(5 * t);
    other.push_back((m - 2) * t);
    Instance instance({first, other, other});
    assert_normalised(instance, (m + 5) * t);
    return instance;
}

Lottery weak_forward_lottery(const PartitionInput& input, const std::vector<std::size_t>& first,
                             const std::vector<std::size_t>& second) {
    require_two_way(input);
    require_partition(input, {first, second});
    const std::size_t m = input.numbers.size();
    std::vector<std::size_t> owner(m + 2, 0);
    for (std::size_t g : first) {
        owner[g] = 1;
    }
    for (std::size_t g : second) {
        owner[g] = 2;
    }
    owner[m + 1] = 0;
    std::vector<LotteryEntry> entries;
    const Rational weights[3] = {Rational(5, 13), Rational(4, 13), Rational(4, 13)};
    for (std::size_t i = 0; i < 3; ++i) {
        owner[m] = i;
        entries.push_back({Allocation(owner), weights[i]});
    }
    return Lottery(std::move(entries));
}

Instance gen_strong(const PartitionInput& input) {
    const std::size_t k = strong_k(input);
    const Value m = static_cast<Value>(input.numbers.size());
    const Value t = input.target;
    std::vector<std::vector<Value>> rows;
    std::vector<Value> first(input.numbers.size(), (2 * m / 3) * t);
    first.push_back(t);
    first.push_back((m / 3 - 1) * t);
    rows.push_back(std::move(first));
    std::vector<Value> other = input.numbers;
    other.push_back((m * m / 3) * t);
    other.push_back((m * m / 3) * t);
    for (std::size_t j = 0; j < k; ++j) {
        rows.push_back(other);
    }
    Instance instance(std::move(rows));
    assert_normalised(instance, (2 * m * m / 3 + m / 3) * t);
    return instance;
}

Lottery strong_forward_lottery(const PartitionInput& input,
                               const std::vector<std::vector<std::size_t>>& parts) {
    const std::size_t k = strong_k(input);
    if (parts.size() != k) {
        throw InputError("strong partition needs exactly k = " + std::to_string(k) + " parts");
    }
    require_partition(input, parts);
    const std::size_t m = input.numbers.size();
    std::vector<std::size_t> owner(m + 2, 0);
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t g : parts[j]) {
            owner[g] = j + 1;
        }
    }
    owner[m] = 0;
    const Rational mm(static_cast<long>(m));
    const Rational p0 = 3 * mm / (4 * mm - 3);
    const Rational pi = (3 * mm - 9) / (4 * mm * mm - 3 * mm);
    if (p0 + Rational(static_cast<long>(k)) * pi != 1) {
        throw std::logic_error("strong lottery probabilities do not sum to 1");
    }
    std::vector<LotteryEntry> entries;
    for (std::size_t i = 0; i <= k; ++i) {
        const Rational& p = i == 0 ? p0 : pi;
        if (p == 0) {
            continue;
        }
        owner[m + 1] = i;
        entries.push_back({Allocation(owner), p});
    }
    return Lottery(std::move(entries));
}

Instance gen_biased(const PartitionInput& input) {
    require_two_way(input);
    const Value m = static_cast<Value>(input.numbers.size());
    const Value t = input.target;
    std::vector<Value> first(input.numbers.size() + 1, t);
    std::vector<Value> other = input.numbers;
    other.push_back((m - 1) * t);
    Instance instance({first, other, other});
    assert_normalised(instance, (m + 1) * t);
    return instance;
}

InstanceMetadata describe_generated(const std::string& kind, const PartitionInput& input) {
    InstanceMetadata meta;
    meta.name = kind;
    if (kind == "weak") {
        if (input.numbers.size() < 20) {
            meta.caveats.push_back(
                "fewer than 20 numbers: the reverse direction of the weak reduction is not "
                "guaranteed");
        }
    } else if (kind != "strong" && kind != "biased") {
        throw InputError("unknown generator '" + kind + "' (expected weak, strong or biased)");
    }
    return meta;
}

std::vector<std::string> canned_names() {
    return {"no_bobw_3x4", "no_eqx_2x3", "no_1biased_3x3", "non_normalised_2x2"};
}

CannedInstance canned(const std::string& name) {
    if (name == "no_bobw_3x4") {
        return {Instance({{7, 11, 11, 11}, {25, 5, 5, 5}, {25, 5, 5, 5}}),
                {name, 5, {{"eq_eq1_exists", false}, {"eq_eqx_exists", false}},
                 {"values scaled by 5 to clear decimals"}}};
    }
    if (name == "no_eqx_2x3") {
        return {Instance({{1, 3, 5}, {4, 3, 2}}),
                {name, 1, {{"eq_eq1_exists", true}, {"eq_eqx_exists", false}}, {}}};
    }
    if (name == "no_1biased_3x3") {
        return {Instance({{9, 6, 6}, {1, 10, 10}, {7, 7, 7}}),
                {name,
                 1,
                 {{"agent0_biased_eq1_exists", false},
                  {"agent1_biased_eq1_exists", true},
                  {"agent2_biased_eq1_exists", true}},
                 {}}};
    }
    if (name == "non_normalised_2x2") {
        return {Instance({{10, 10}, {1, 1}}),
                {name, 1, {{"eq_eq1_exists", false}, {"normalised", false}}, {}}};
    }
    throw InputError("unknown canned instance '" + name + "'");
}

}  // namespace eqbobw
