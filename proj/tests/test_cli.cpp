#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "graydbl/double_category.hpp"

namespace {

struct Out {
    int code;
    std::string out, err;
};

Out run(std::vector<std::string> args) {
    std::ostringstream o, e;
    int c = gdcli::run(args, o, e);
    return {c, o.str(), e.str()};
}

nlohmann::json runJson(std::vector<std::string> args, int* code = nullptr) {
    args.insert(args.begin(), "--json");
    Out r = run(args);
    if (code) *code = r.code;
    return nlohmann::json::parse(r.out);
}

std::string data(const std::string& p) { return std::string(GRAYDBL_SOURCE_DIR) + "/data/" + p; }

}  // namespace

TEST_SUITE("cli") {
TEST_CASE("validate zoo:G") {
    int code = -1;
    auto j = runJson({"validate", "zoo:G"}, &code);
    CHECK(code == 0);
    CHECK(j["schema"] == 1);
    CHECK(j["ok"] == true);
    auto g = gd::generatorG();
    CHECK(j["data"]["counts"]["objects"] == g.nObj());
    CHECK(j["data"]["counts"]["hcells"] == g.nH());
    CHECK(j["data"]["counts"]["vcells"] == g.nV());
    CHECK(j["data"]["counts"]["squares"] == g.nSq());
    Out t = run({"validate", "zoo:G"});
    CHECK(t.out.find("4 objects 6 hcells 6 vcells 9 squares") != std::string::npos);
}

TEST_CASE("adjunction check") {
    int code = -1;
    auto j = runJson({"tensor", "adjunction-check", "zoo:G", "zoo:G", "zoo:arrowH"}, &code);
    CHECK(code == 0);
    CHECK(j["data"]["cones"] == j["data"]["functors"]);
    CHECK(j["data"]["cones"].get<int>() > 0);
}

TEST_CASE("monoid check names the failing condition") {
    int code = -1;
    auto j = runJson({"monoid", "check", data("monoid/broken-unit.json")}, &code);
    CHECK(code == 1);
    bool named = false;
    for (const auto& c : j["checks"])
        if (c["name"] == "condition (ii)") named = c["ok"] == false;
    CHECK(named);
    CHECK(j["data"]["report"]["violations"][0]["axiom"] == "(ii)");
    CHECK(run({"monoid", "check", data("monoid/z2.json"), "--derived"}).code == 0);
    CHECK(run({"monoid", "check", data("monoid/labelled-b3.json")}).code == 0);
    CHECK(run({"monoid", "check", data("monoid/labelled-broken-naturality.json")}).code == 1);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 3);
    CHECK(run({"frobnicate"}).code == 3);
    CHECK(run({"validate", "zoo:nope"}).code == 3);
    CHECK(run({"validate", "/no/such/file.json"}).code == 3);
    CHECK(run({"canonical-check", "l-id", "zoo:1"}).code == 3);
    CHECK(run({"validate", data("double/broken-z3.json")}).code == 1);
    CHECK(run({"functors", "zoo:G", "zoo:G", "--budget", "5"}).code == 2);
    CHECK(run({"tensor", "realize", "zoo:arrowH", "zoo:arrowH", "--depth", "1"}).code == 2);
    CHECK(run({"tensor", "realize", "zoo:arrowH", "zoo:arrowH"}).code == 0);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("budget from config, environment and flags") {
    auto dir = std::filesystem::temp_directory_path() / "graydbl_cli_test";
    std::filesystem::create_directories(dir);
    std::string cfg = (dir / "tight.toml").string();
    std::ofstream(cfg) << "# tiny\nbudget = 5\n";
    CHECK(run({"functors", "zoo:G", "zoo:G", "--config", cfg}).code == 2);
    CHECK(run({"functors", "zoo:G", "zoo:G", "--config", cfg, "--budget", "100000"}).code == 0);
    setenv("GRAYDBL_BUDGET", "5", 1);
    CHECK(run({"functors", "zoo:G", "zoo:G"}).code == 2);
    CHECK(run({"functors", "zoo:G", "zoo:G", "--budget", "100000"}).code == 0);
    unsetenv("GRAYDBL_BUDGET");
    std::ofstream(cfg) << "budget = lots\n";
    CHECK(run({"validate", "zoo:G", "--config", cfg}).code == 3);
}

TEST_CASE("zoo expressions and files") {
    auto j = runJson({"validate", "zoo:arrowH*arrowV"});
    CHECK(j["data"]["counts"]["objects"] == 4);
    CHECK(runJson({"validate", "zoo:sqr(arrow2)"})["ok"] == true);
    CHECK(runJson({"validate", "zoo:transpose(isoH)"})["ok"] == true);
    CHECK(runJson({"validate", data("double/arrow.json")})["data"]["counts"]["squares"] == 3);
    CHECK(run({"sqr", data("twocat/idempotent.json")}).code == 0);
    CHECK(run({"h2", "zoo:G"}).code == 0);
    CHECK(run({"v2", "zoo:isoV"}).code == 0);
    CHECK(run({"mnd", "zoo:idempotent2"}).code == 0);
    CHECK(run({"strict-hom", "zoo:arrowH", "zoo:isoH"}).code == 0);
    CHECK(run({"chi", "v", "zoo:1", "zoo:arrowV", "zoo:1", "--check-assoc", "--check-unit"}).code == 0);
    CHECK(run({"chi", "mnd", "zoo:1", "zoo:idempotent2", "--check-unit"}).code == 0);
    CHECK(run({"coherence", "pentagon", "zoo:1", "zoo:1", "zoo:1", "zoo:1"}).code == 0);
    CHECK(run({"tensor", "present", "zoo:arrowH", "zoo:arrowV"}).code == 0);
}

TEST_CASE("reports are deterministic and round trip") {
    std::vector<std::string> args{"--json", "suite", "run", data("suite/acceptance-lite.json")};
    auto here = std::filesystem::current_path();
    std::filesystem::current_path(GRAYDBL_SOURCE_DIR);
    Out a = run(args), b = run(args);
    std::filesystem::current_path(here);
    CHECK(a.code == 0);
    auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
    CHECK(ja == jb);
    CHECK(nlohmann::json::parse(ja.dump()) == ja);
    CHECK(ja["data"]["suite"].size() == 9);
    CHECK(ja["data"]["suite"][0]["name"] == "G validates");
    for (const auto& c : ja["data"]["suite"]) CHECK(c["ok"] == true);

    auto dir = std::filesystem::temp_directory_path() / "graydbl_cli_test";
    std::filesystem::create_directories(dir);
    std::string bad = (dir / "suite.json").string();
    std::ofstream(bad) << R"({"schema":1,"checks":[{"name":"ok","args":["validate","zoo:1"]},)"
                       << R"({"name":"broken","args":["monoid","check",")" << data("monoid/broken-unit.json")
                       << R"("]}]})";
    auto j = runJson({"suite", "run", bad});
    CHECK(j["exit"] == 1);
    CHECK(j["data"]["suite"][1]["checks"][1]["name"] == "condition (ii)");
}
}
