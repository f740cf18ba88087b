#include "eqbobw/cli.hpp"

#include "eqbobw/binary.hpp"
#include "eqbobw/certify.hpp"
#include "eqbobw/dp.hpp"
#include "eqbobw/errors.hpp"
#include "eqbobw/json_io.hpp"
#include "eqbobw/oracle.hpp"
#include "eqbobw/reductions.hpp"
#include "eqbobw/two_agents.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

namespace eqbobw {

namespace {

struct Options {
    std::string instance;
    std::string lottery_path;
    std::string notion = "eq1";
    std::string method = "auto";
    std::string witness_method = "dp";
    bool trace = false;
    bool timing = false;
    std::uint64_t cap = kDefaultEnumerationCap;
    std::uint64_t seed = 1;
    std::size_t count = 100;
    std::size_t max_agents = 3;
    std::size_t max_goods = 5;
    Value max_value = 5;
    std::string kind;
    std::string numbers;
    Value target = 0;
    std::string metadata_path;
    bool list = false;
};

Instance load_instance(const std::string& arg) {
    if (std::filesystem::is_regular_file(arg)) {
        return instance_from_json(read_json_file(arg));
    }
    const auto names = canned_names();
    if (std::find(names.begin(), names.end(), arg) != names.end()) {
        return canned(arg).instance;
    }
    throw InputError("'" + arg + "' is neither a readable file nor a canned instance name");
}

Json warning(const std::string& code, const std::string& message) {
    return Json{{"code", code}, {"message", message}};
}

struct Outcome {
    BobwDecision decision;
    std::string method;
    Json warnings = Json::array();
    std::optional<Json> trace;
};

Json traces_json(const TwoAgentSolution& sol) {
    return Json::array({to_json(sol.traces[0]), to_json(sol.traces[1])});
}

void require_eq1(Notion notion, const std::string& method) {
    if (notion != Notion::EQ1) {
        throw UnsupportedError("method '" + method + "' only constructs EQ1 lotteries");
    }
}

Outcome dispatch(const Instance& inst, Notion notion, const std::string& method, std::uint64_t cap) {
    const bool normalised = inst.is_normalised().has_value();
    Json warnings = Json::array();
    if (!normalised) {
        warnings.push_back(warning(
            "not_normalised",
            "agents value the goods differently in total; existence is not guaranteed"));
    }
    auto done = [&](BobwDecision d, const std::string& name, std::optional<Json> trace = {}) {
        return Outcome{std::move(d), name, warnings, std::move(trace)};
    };
    if (method == "oracle") {
        return done(brute_force_bobw(inst, notion, cap), method);
    }
    if (method == "dp") {
        return done(solve_general(inst, notion, cap), method);
    }
    if (method == "two-agents") {
        require_eq1(notion, method);
        const TwoAgentSolution sol = solve_two_agents_traced(inst);
        return done(sol.lottery, method, traces_json(sol));
    }
    if (method == "binary") {
        require_eq1(notion, method);
        return done(solve_binary(inst), method);
    }

    // auto: the first specialised construction whose lottery passes the notion.
    auto passes = [&](const Lottery& lottery) { return check_bobw(inst, lottery, notion).passed(); };
    if (inst.has_identical_rows()) {
        Lottery l = identical_lottery(inst);
        if (passes(l)) {
            return done(std::move(l), "identical");
        }
    }
    if (inst.good_count() == inst.agent_count() && normalised) {
        Lottery l = shift_lottery(inst);
        if (passes(l)) {
            return done(std::move(l), "shift");
        }
    }
    if (inst.agent_count() == 2 && normalised) {
        const TwoAgentSolution sol = solve_two_agents_traced(inst);
        if (passes(sol.lottery)) {
            return done(sol.lottery, "two-agents", traces_json(sol));
        }
    }
    if (inst.is_binary() && notion == Notion::EQ1) {
        return done(solve_binary(inst), "binary");
    }
    return done(solve_general(inst, notion, cap), "dp");
}

Json decision_json(const Instance& inst, Notion notion, const BobwDecision& decision) {
    Json j;
    if (const auto* lottery = std::get_if<Lottery>(&decision)) {
        const BobwReport report = check_bobw(inst, *lottery, notion);
        if (!report.passed()) {
            throw std::logic_error("refusing to emit a lottery that fails verification");
        }
        j["exists"] = true;
        j["lottery"] = to_json(*lottery);
        j["expected_profile"] = to_json(report.expected_profile);
    } else {
        j["exists"] = false;
        j["witness"] = to_json(std::get<Witness>(decision));
    }
    return j;
}

int cmd_solve(const Options& o, std::ostream& out) {
    const Instance inst = load_instance(o.instance);
    const Notion notion = parse_notion(o.notion);
    const auto begin = std::chrono::steady_clock::now();
    std::optional<Outcome> found;
    try {
        found = dispatch(inst, notion, o.method, o.cap);
    } catch (const NotNormalisedError& e) {
        Json j{{"notion", to_string(notion)},
               {"method", o.method},
               {"error", warning("not_normalised", e.what())}};
        out << j.dump(2) << '\n';
        return kExitInputError;
    }
    const auto end = std::chrono::steady_clock::now();
    const Outcome& outcome = *found;

    Json j = decision_json(inst, notion, outcome.decision);
    j["notion"] = to_string(notion);
    j["method"] = outcome.method;
    j["warnings"] = outcome.warnings;
    if (o.trace) {
        if (outcome.trace) {
            j["trace"] = *outcome.trace;
        } else {
            j["warnings"].push_back(
                warning("no_trace", "traces are only recorded by the two-agent method"));
        }
    }
    if (o.timing) {
        j["timing_ms"] =
            std::chrono::duration<double, std::milli>(end - begin).count();
    }
    out << j.dump(2) << '\n';
    return j["exists"].get<bool>() ? kExitExists : kExitNotExists;
}

int cmd_check(const Options& o, std::ostream& out) {
    const Instance inst = load_instance(o.instance);
    const Notion notion = parse_notion(o.notion);
    const Json doc = read_json_file(o.lottery_path);
    Lottery lottery = [&] {
        if (doc.is_object() && doc.contains("support")) {
            return lottery_from_json(doc);
        }
        if (doc.is_object() && doc.contains("lottery")) {
            return lottery_from_json(doc.at("lottery"));
        }
        throw InputError("'" + o.lottery_path + "' holds neither a lottery nor a solve report with one");
    }();
    const BobwReport report = check_bobw(inst, lottery, notion);
    Json support = Json::array();
    for (std::size_t k = 0; k < lottery.size(); ++k) {
        const auto& e = lottery.support()[k];
        support.push_back(Json{{"owner", e.allocation.owner()},
                               {"probability", to_fraction_string(e.probability)},
                               {"profile", to_json(profile_of(inst, e.allocation))},
                               {"fair", static_cast<bool>(report.support_fair[k])}});
    }
    Json j{{"notion", to_string(notion)},
           {"ex_ante_eq", report.ex_ante_eq},
           {"ex_post_fair", report.ex_post_fair},
           {"expected_profile", to_json(report.expected_profile)},
           {"support", std::move(support)},
           {"passed", report.passed()}};
    out << j.dump(2) << '\n';
    return report.passed() ? kExitExists : kExitNotExists;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    const Instance inst = load_instance(o.instance);
    const Notion notion = parse_notion(o.notion);
    const auto all = enumerate_fair(inst, notion, o.cap);
    ProfileSet set;
    for (const auto& a : all) {
        set.insert(profile_of(inst, a), a);
    }
    Json profiles = Json::array();
    for (const auto& [p, a] : set.representative) {
        profiles.push_back(Json{{"profile", to_json(p)}, {"owner", a.owner()}});
    }
    Json j{{"notion", to_string(notion)},
           {"fair_allocations", all.size()},
           {"profiles", std::move(profiles)}};
    out << j.dump(2) << '\n';
    return kExitExists;
}

int cmd_witness(const Options& o, std::ostream& out) {
    const Instance inst = load_instance(o.instance);
    const Notion notion = parse_notion(o.notion);
    const BobwDecision decision = o.witness_method == "oracle" ? brute_force_bobw(inst, notion, o.cap)
                                                       : solve_general(inst, notion, o.cap);
    Json j{{"notion", to_string(notion)}};
    if (const auto* w = std::get_if<Witness>(&decision)) {
        j["exists"] = false;
        j["witness"] = to_json(*w);
        out << j.dump(2) << '\n';
        return kExitNotExists;
    }
    j["exists"] = true;
    out << j.dump(2) << '\n';
    return kExitExists;
}

std::vector<Value> parse_numbers(const std::string& text) {
    std::vector<Value> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const Rational q = parse_fraction(item);
        if (!is_integer(q)) {
            throw InputError("'" + item + "' is not an integer");
        }
        out.push_back(static_cast<Value>(numerator_of(q)));
    }
    if (out.empty()) {
        throw InputError("--numbers needs a comma-separated list of integers");
    }
    return out;
}

void write_metadata(const std::string& path, const InstanceMetadata& meta) {
    if (path.empty()) {
        return;
    }
    std::ofstream f(path);
    if (!f) {
        throw InputError("cannot write '" + path + "'");
    }
    f << to_json(meta).dump(2) << '\n';
}

int cmd_gen(const Options& o, std::ostream& out, std::ostream& err) {
    const PartitionInput input{parse_numbers(o.numbers), o.target};
    const InstanceMetadata meta = describe_generated(o.kind, input);
    const Instance inst = o.kind == "weak"     ? gen_weak(input)
                          : o.kind == "strong" ? gen_strong(input)
                                               : gen_biased(input);
    for (const auto& c : meta.caveats) {
        err << "warning: " << c << '\n';
    }
    write_metadata(o.metadata_path, meta);
    out << to_json(inst).dump(2) << '\n';
    return kExitExists;
}

int cmd_canned(const Options& o, std::ostream& out) {
    if (o.list) {
        out << Json(canned_names()).dump(2) << '\n';
        return kExitExists;
    }
    if (o.instance.empty()) {
        throw InputError("canned needs an instance name (or --list)");
    }
    const CannedInstance c = canned(o.instance);
    write_metadata(o.metadata_path, c.metadata);
    out << to_json(c.instance).dump(2) << '\n';
    return kExitExists;
}

int cmd_fuzz(const Options& o, std::ostream& out) {
    const Notion notion = parse_notion(o.notion);
    if (o.max_agents == 0 || o.max_value < 0) {
        throw InputError("fuzz needs at least one agent and nonnegative values");
    }
    std::mt19937_64 rng(o.seed);
    Json mismatches = Json::array();
    std::size_t exists = 0;
    for (std::size_t run = 0; run < o.count; ++run) {
        const std::size_t n = 1 + rng() % o.max_agents;
        const std::size_t m = rng() % (o.max_goods + 1);
        std::vector<std::vector<Value>> rows(n, std::vector<Value>(m));
        for (auto& row : rows) {
            for (auto& v : row) {
                v = static_cast<Value>(rng() % static_cast<std::uint64_t>(o.max_value + 1));
            }
        }
        const Instance inst(std::move(rows));
        const Outcome fast = dispatch(inst, notion, "auto", o.cap);
        const BobwDecision slow = brute_force_bobw(inst, notion, o.cap);
        const bool a = std::holds_alternative<Lottery>(fast.decision);
        const bool b = std::holds_alternative<Lottery>(slow);
        exists += a ? 1 : 0;
        if (a != b) {
            mismatches.push_back(Json{{"instance", to_json(inst)}, {"method", fast.method}});
        }
    }
    Json j{{"seed", o.seed},
           {"count", o.count},
           {"notion", to_string(notion)},
           {"exists", exists},
           {"mismatches", mismatches}};
    out << j.dump(2) << '\n';
    return mismatches.empty() ? kExitExists : kExitNotExists;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact ex ante EQ / ex post EQ1-EQX lotteries", "eqbobw"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::string> notions{"eq1", "eqx"};

    auto add_notion = [&](CLI::App* sub) {
        sub->add_option("--notion", o.notion, "Ex post fairness notion")
            ->check(CLI::IsMember(notions, CLI::ignore_case));
    };
    auto add_cap = [&](CLI::App* sub) {
        sub->add_option("--cap", o.cap, "Enumeration / DP state cap")->check(CLI::PositiveNumber);
    };

    auto* solve = app.add_subcommand("solve", "Decide existence and build a lottery or witness");
    solve->add_option("instance", o.instance, "Instance JSON file or canned name")->required();
    add_notion(solve);
    solve->add_option("--method", o.method)
        ->check(CLI::IsMember({"auto", "two-agents", "binary", "dp", "oracle"}));
    solve->add_flag("--trace", o.trace, "Include the two-agent biased traces");
    solve->add_flag("--timing", o.timing, "Include wall-clock time (output becomes non-deterministic)");
    add_cap(solve);

    auto* check = app.add_subcommand("check", "Verify a lottery or solve report");
    check->add_option("instance", o.instance)->required();
    check->add_option("lottery", o.lottery_path, "Lottery JSON or solve report")->required();
    add_notion(check);

    auto* enumerate = app.add_subcommand("enumerate", "List fair value profiles by brute force");
    enumerate->add_option("instance", o.instance)->required();
    add_notion(enumerate);
    add_cap(enumerate);

    auto* witness = app.add_subcommand("witness", "Print a non-existence witness, if any");
    witness->add_option("instance", o.instance)->required();
    add_notion(witness);
    witness->add_option("--method", o.witness_method)->check(CLI::IsMember({"dp", "oracle"}));
    add_cap(witness);

    auto* gen = app.add_subcommand("gen", "Generate a reduction instance");
    gen->add_option("kind", o.kind)->required()->check(CLI::IsMember({"weak", "strong", "biased"}));
    gen->add_option("--numbers", o.numbers, "Comma-separated positive integers")->required();
    gen->add_option("--target", o.target, "Target T")->required();
    gen->add_option("--metadata", o.metadata_path, "Write metadata JSON here");

    auto* canned_cmd = app.add_subcommand("canned", "Print a canned instance");
    canned_cmd->add_option("name", o.instance);
    canned_cmd->add_flag("--list", o.list);
    canned_cmd->add_option("--metadata", o.metadata_path, "Write metadata JSON here");

    auto* fuzz = app.add_subcommand("fuzz", "Compare the solver against brute force on random instances");
    add_notion(fuzz);
    fuzz->add_option("--seed", o.seed);
    fuzz->add_option("--count", o.count);
    fuzz->add_option("--max-agents", o.max_agents);
    fuzz->add_option("--max-goods", o.max_goods);
    fuzz->add_option("--max-value", o.max_value);
    add_cap(fuzz);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitExists : kExitInputError;
    }

    try {
        if (solve->parsed()) return cmd_solve(o, out);
        if (check->parsed()) return cmd_check(o, out);
        if (enumerate->parsed()) return cmd_enumerate(o, out);
        if (witness->parsed()) return cmd_witness(o, out);
        if (gen->parsed()) return cmd_gen(o, out, err);
        if (canned_cmd->parsed()) return cmd_canned(o, out);
        if (fuzz->parsed()) return cmd_fuzz(o, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitInputError;
}

}  // namespace eqbobw
