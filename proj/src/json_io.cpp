#include "eqbobw/json_io.hpp"

#include "eqbobw/errors.hpp"

#include <fstream>
#include <limits>

namespace eqbobw {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw InputError(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

std::size_t as_index(const Json& j, const char* what) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
        throw InputError(std::string(what) + " must be a nonnegative integer");
    }
    return j.get<std::size_t>();
}

Rational as_fraction(const Json& j) {
    if (!j.is_string()) {
        throw InputError("rational values must be \"p/q\" strings");
    }
    return parse_fraction(j.get<std::string>());
}

Json fractions(const std::vector<Rational>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) {
        out.push_back(to_fraction_string(x));
    }
    return out;
}

}  // namespace

Json to_json(const Instance& instance) {
    return Json{{"n", instance.agent_count()},
                {"m", instance.good_count()},
                {"valuations", instance.valuations()}};
}

Instance instance_from_json(const Json& j) {
    const std::size_t n = as_index(field(j, "n"), "n");
    const std::size_t m = as_index(field(j, "m"), "m");
    const Json& rows = field(j, "valuations");
    if (!rows.is_array() || rows.size() != n) {
        throw InputError("valuations must be an array of n rows");
    }
    std::vector<std::vector<Value>> vals;
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != m) {
            throw InputError("every valuation row must have m entries");
        }
        std::vector<Value> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) {
                throw InputError("valuations must be integers");
            }
            r.push_back(v.get<Value>());
        }
        vals.push_back(std::move(r));
    }
    return Instance(std::move(vals));
}

Json to_json(const Allocation& allocation) { return Json{{"owner", allocation.owner()}}; }

Allocation allocation_from_json(const Json& j) {
    const Json& owner = field(j, "owner");
    if (!owner.is_array()) {
        throw InputError("owner must be an array");
    }
    std::vector<std::size_t> out;
    for (const auto& o : owner) {
        out.push_back(as_index(o, "owner entry"));
    }
    return Allocation(std::move(out));
}

Json to_json(const Lottery& lottery) {
    Json support = Json::array();
    for (const auto& e : lottery.support()) {
        support.push_back(
            Json{{"owner", e.allocation.owner()}, {"probability", to_fraction_string(e.probability)}});
    }
    return Json{{"support", std::move(support)}};
}

Lottery lottery_from_json(const Json& j) {
    const Json& support = field(j, "support");
    if (!support.is_array()) {
        throw InputError("support must be an array");
    }
    std::vector<LotteryEntry> entries;
    for (const auto& e : support) {
        entries.push_back({allocation_from_json(e), as_fraction(field(e, "probability"))});
    }
    return Lottery(std::move(entries));
}

Json to_json(const ValueProfile& profile) { return fractions(profile); }

Json to_json(const IntProfile& profile) { return fractions(to_rationals(profile)); }

Json to_json(const Witness& witness) {
    return Json{{"lambda", fractions(witness.lambda)},
                {"max_inner", to_fraction_string(witness.max_inner)}};
}

Witness witness_from_json(const Json& j) {
    const Json& lambda = field(j, "lambda");
    if (!lambda.is_array()) {
        throw InputError("lambda must be an array");
    }
    Witness w;
    for (const auto& x : lambda) {
        w.lambda.push_back(as_fraction(x));
    }
    w.max_inner = as_fraction(field(j, "max_inner"));
    return w;
}

Json to_json(const BiasedTrace& trace) {
    return Json{{"agent", trace.agent},
                {"start", to_json(trace.start)},
                {"delta", trace.delta},
                {"case_taken", to_string(trace.case_taken)},
                {"transfers", trace.transfers},
                {"result", to_json(trace.result)}};
}

Json to_json(const InstanceMetadata& metadata) {
    return Json{{"name", metadata.name},
                {"scale", metadata.scale},
                {"verdicts", metadata.verdicts},
                {"caveats", metadata.caveats}};
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

}  // namespace eqbobw
