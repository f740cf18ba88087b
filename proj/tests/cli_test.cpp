#include "eqbobw/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using eqbobw::run_cli;
using Json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("eqbobw_cli_" + name);
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_CASE("solve exit codes") {
    CHECK(cli({"solve", "no_eqx_2x3"}).code == 0);
    CHECK(cli({"solve", "no_eqx_2x3", "--notion", "eqx"}).code == 3);
    CHECK(cli({"solve", "no_bobw_3x4"}).code == 3);
    CHECK(cli({"solve", "no_1biased_3x3"}).code == 0);
    CHECK(cli({"solve", "/nonexistent/file.json"}).code == 2);
    CHECK(cli({"solve", "no_eqx_2x3", "--method", "nonsense"}).code == 2);
    CHECK(cli({"solve", "no_eqx_2x3", "--notion", "eqx", "--method", "two-agents"}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"solve", "no_bobw_3x4", "--method", "oracle", "--cap", "10"}).code == 4);
}

TEST_CASE("solve report fields") {
    const Run r = cli({"solve", "no_bobw_3x4"});
    const Json j = r.json();
    CHECK(j["exists"] == false);
    CHECK(j["witness"]["lambda"] == Json::array({"1/1", "-1/2", "-1/2"}));
    CHECK(j["method"] == "dp");

    const Json t = cli({"solve", "no_eqx_2x3", "--trace"}).json();
    CHECK(t["exists"] == true);
    CHECK(t["method"] == "two-agents");
    CHECK(t["expected_profile"] == Json::array({"9/2", "9/2"}));
    CHECK(t["trace"].size() == 2);
    CHECK(t["trace"][0]["case_taken"] == "case1");

    const Json nn = cli({"solve", "non_normalised_2x2"}).json();
    CHECK(nn["warnings"].dump().find("not_normalised") != std::string::npos);
}

TEST_CASE("output is deterministic without timing") {
    for (const char* name : {"no_eqx_2x3", "no_bobw_3x4", "no_1biased_3x3"}) {
        CHECK(cli({"solve", name}).out == cli({"solve", name}).out);
    }
    CHECK(cli({"solve", "no_eqx_2x3", "--timing"}).json().contains("timing_ms"));
    CHECK_FALSE(cli({"solve", "no_eqx_2x3"}).json().contains("timing_ms"));
}

TEST_CASE("solve report round-trips through check") {
    const std::string inst = temp_file("inst.json", cli({"canned", "no_eqx_2x3"}).out);
    const std::string report = temp_file("report.json", cli({"solve", inst}).out);
    const Run c = cli({"check", inst, report});
    CHECK(c.code == 0);
    CHECK(c.json()["passed"] == true);

    Json bad = Json::parse(cli({"solve", inst}).out);
    bad["lottery"]["support"][0]["probability"] = "1/3";
    CHECK(cli({"check", inst, temp_file("bad.json", bad.dump())}).code == 2);

    bad = Json::parse(cli({"solve", inst}).out);
    bad["lottery"]["support"][0]["probability"] = "abc";
    CHECK(cli({"check", inst, temp_file("bad2.json", bad.dump())}).code == 2);

    const Json unfair = {{"support", {{{"owner", {0, 0, 0}}, {"probability", "1/1"}}}}};
    const Run u = cli({"check", inst, temp_file("unfair.json", unfair.dump())});
    CHECK(u.code == 3);
    CHECK(u.json()["ex_post_fair"] == false);
}

TEST_CASE("enumerate and witness") {
    const Json e = cli({"enumerate", "no_eqx_2x3"}).json();
    CHECK(e["profiles"].size() == 5);
    CHECK(e["fair_allocations"] == 5);
    CHECK(cli({"enumerate", "no_eqx_2x3", "--notion", "eqx"}).json()["profiles"].size() == 1);

    const Run w = cli({"witness", "no_eqx_2x3", "--notion", "eqx", "--method", "oracle"});
    CHECK(w.code == 3);
    CHECK(w.json()["witness"]["lambda"] == Json::array({"1/1", "-1/1"}));
    CHECK(cli({"witness", "no_eqx_2x3"}).code == 0);
}

TEST_CASE("generators and canned instances") {
    const Run g = cli({"gen", "weak", "--numbers", "1,1,1,1", "--target", "2"});
    CHECK(g.code == 0);
    CHECK(g.json()["valuations"][0] == Json::array({2, 2, 2, 2, 8, 2}));
    CHECK(cli({"gen", "weak", "--numbers", "1,2", "--target", "2"}).code == 2);
    CHECK(cli({"gen", "weak", "--numbers", "1,x", "--target", "2"}).code == 2);
    const std::string meta = temp_file("meta.json", "");
    CHECK(cli({"gen", "weak", "--numbers", "1,1,1,1", "--target", "2", "--metadata", meta}).code == 0);
    std::ifstream in(meta);
    CHECK_FALSE(Json::parse(in)["caveats"].empty());

    CHECK(cli({"canned", "--list"}).json().size() == 4);
    CHECK(cli({"canned", "nope"}).code == 2);
}

TEST_CASE("fuzz") {
    const Run f = cli({"fuzz", "--seed", "3", "--count", "60"});
    CHECK(f.code == 0);
    CHECK(f.json()["mismatches"].empty());
}
