#include "kra/builtins.hpp"
#include "kra/cli.hpp"
#include "kra/dsl.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "kra");
    std::ostringstream out;
    std::ostringstream err;
    const int code = kra::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(KRA_FIXTURE_DIR) + "/" + name; }

} // namespace

TEST_CASE("exit codes") {
    CHECK(run({"validate", "--builtin", "sm"}).code == 0);
    CHECK(run({"validate", fixture("nonsense.kra")}).code == 2);
    CHECK(run({"verdict", "--builtin", "chain", "-n", "4"}).code == 0);
    CHECK(run({"verdict", "--builtin", "chain", "-n", "4", "--strict"}).code == 4);
    CHECK(run({"verdict", "--builtin", "sm", "--strict"}).code == 0);
    CHECK(run({"check-rconnect", "--builtin", "chain", "--strict"}).code == 4);
    CHECK(run({"coverage", "--builtin", "chain", "--strict"}).code == 4);
    CHECK(run({"frobnicate"}).code == 64);
    CHECK(run({"verdict", "--builtin", "sm", "-n", "5"}).code == 64);
    CHECK(run({"validate", "--builtin", "unknown"}).code == 64);
    CHECK(run({"validate"}).code == 64);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("invalid diagrams exit with the validation code") {
    kra::KrajewskiDiagram d = kra::builtin("chain");
    d.edges.pop_back();
    const auto path = std::filesystem::temp_directory_path() / "kra_unit_invalid.kra";
    {
        std::ofstream f(path);
        f << kra::serialize(d);
    }
    CHECK(run({"validate", path.string()}).code == 3);
    CHECK(run({"verdict", path.string()}).code == 3);
    const auto j = nlohmann::json::parse(run({"fields", path.string(), "--json"}).out);
    CHECK(j["error"]["kind"] == "validation");
    std::filesystem::remove(path);
}

TEST_CASE("chain verdict text") {
    const auto r = run({"verdict", "--builtin", "chain", "-n", "4"});
    CHECK(r.out.find("Inconclusive: R-connectedness fails") != std::string::npos);
}

TEST_CASE("JSON envelope") {
    const auto r = run({"check-rconnect", "--builtin", "sm", "--dim", "4", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["tool"] == "kra");
    CHECK(j["command"] == "check-rconnect");
    CHECK(j["input"]["kind"] == "builtin");
    CHECK(j["result"]["verdict"] == true);
    CHECK(j["warnings"].is_array());
}

TEST_CASE("parse errors in JSON mode") {
    const auto r = run({"validate", fixture("nonsense.kra"), "--json"});
    CHECK(r.code == 2);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["result"].is_null());
    CHECK(j["error"]["kind"] == "parse");
    CHECK(j["error"]["line"] == 4);
    CHECK(j["error"]["column"] == 13);
    CHECK(r.err.find("nonsense.kra:4:13") != std::string::npos);
}

TEST_CASE("text and JSON reports agree on verdicts and witnesses") {
    for (const std::string b : {"sm", "chain", "ym:3"}) {
        CAPTURE(b);
        const auto text = run({"check-rconnect", "--builtin", b});
        const auto json = nlohmann::json::parse(run({"check-rconnect", "--builtin", b, "--json"}).out);
        const bool verdict = json["result"]["verdict"];
        CHECK((text.out.find("not R-connected") == std::string::npos) == verdict);
        for (const auto& c : json["result"]["cond1"]) {
            if (!c["witness"].is_null()) {
                CHECK(text.out.find(c["witness"]["text"].get<std::string>()) != std::string::npos);
            }
        }
        for (const auto& c : json["result"]["cond2"]) {
            if (!c["witness"].is_null()) {
                CHECK(text.out.find(c["witness"]["text"].get<std::string>()) != std::string::npos);
            }
        }
        const auto vt = run({"verdict", "--builtin", b, "-n", "8"});
        const auto vj = nlohmann::json::parse(run({"verdict", "--builtin", b, "-n", "8", "--json"}).out);
        CHECK(vt.out.find(vj["result"]["verdict"].get<std::string>()) != std::string::npos);
    }
}

TEST_CASE("fmt prints the canonical text") {
    const auto r = run({"fmt", "--builtin", "sm"});
    CHECK(r.code == 0);
    CHECK(r.out == kra::serialize(kra::builtin("sm")));
}

TEST_CASE("output is deterministic") {
    const auto a = run({"coverage", "--builtin", "sm", "--json"});
    const auto b = run({"coverage", "--builtin", "sm", "--json"});
    CHECK(a.out == b.out);
}

TEST_CASE("powercount") {
    const auto r = run({"powercount", "-n", "8", "--loops", "2", "--ext", "2", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["result"]["omega_external"]["value"] == -2);
    CHECK(j["result"]["heat_kernel"][0]["c"] == "1/3");
    CHECK(run({"powercount", "-n", "3"}).code == 64);
}
