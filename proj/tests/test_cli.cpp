#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "twobridge/cli.hpp"

using twobridge::run_cli;
using nlohmann::json;

namespace {

struct CliResult {
    int status;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("seminorm verb prints the bare value") {
    CliResult r = run({"seminorm", "--knot", "1/3", "--p", "0", "--q", "1"});
    CHECK(r.status == 0);
    CHECK(r.out == "6\n");

    r = run({"seminorm", "--knot", "2/5", "--p", "0", "--q", "0"});
    CHECK(r.status == 0);
    CHECK(r.out == "0\n");

    r = run({"seminorm", "--knot", "[2,2]", "--p", "1", "--q", "0"});
    CHECK(r.status == 0);
    CHECK(r.out == "2\n");
}

TEST_CASE("surfaces --json emits strict, schema-stable records") {
    CliResult r = run({"surfaces", "--knot", "2/5", "--json"});
    REQUIRE(r.status == 0);
    REQUIRE(!r.out.empty());
    CHECK(r.out.back() == '\n');

    json parsed = json::parse(r.out);  // throws on malformed output
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 3);
    std::multiset<int> weights;
    for (const json& rec : parsed) {
        for (const char* key :
             {"alpha", "beta", "n", "eps", "m", "slope", "orientable", "weight", "deltas"}) {
            REQUIRE(rec.contains(key));
        }
        REQUIRE(rec.size() == 9);
        CHECK(rec["alpha"] == 5);
        CHECK(rec["beta"] == 2);
        weights.insert(rec["weight"].get<int>());
    }
    CHECK(weights == std::multiset<int>{0, 1, 1});
}

TEST_CASE("surfaces prints a plain table by default") {
    CliResult r = run({"surfaces", "--knot", "82/429"});
    CHECK(r.status == 0);
    CHECK(r.out.find("knot 82/429") != std::string::npos);
    CHECK(r.out.find("0100\t[6,-2,2,-2,4,6]\t0\tyes\t37") != std::string::npos);
}

TEST_CASE("tree verb writes DOT, JSON, and actions") {
    std::filesystem::path dot_path =
        std::filesystem::temp_directory_path() / "twobridge_test_tree.dot";
    std::filesystem::remove(dot_path);

    CliResult r = run({"tree", "--knot", "82/429", "--smoothing", "0100", "--dot",
                       dot_path.string(), "--actions"});
    REQUIRE(r.status == 0);
    std::ifstream file(dot_path);
    REQUIRE(file.good());
    std::stringstream content;
    content << file.rdbuf();
    CHECK(content.str().rfind("graph basic_tree {", 0) == 0);
    CHECK(r.out.find("actions: 37") != std::string::npos);
    std::filesystem::remove(dot_path);

    r = run({"tree", "--knot", "82/429", "--smoothing", "0100", "--json"});
    REQUIRE(r.status == 0);
    json parsed = json::parse(r.out);
    CHECK(parsed["eps"] == "0100");
    CHECK(parsed["anchors"] == "segment");
    REQUIRE(parsed["subtrees"].size() == 4);
    CHECK(parsed["subtrees"][1]["kind"] == "linear");
    CHECK(parsed["subtrees"][0]["case"] == "C2b");
    CHECK(parsed["subtrees"][0]["valence"] == 6);

    // Without --dot the DOT text goes to stdout.
    r = run({"tree", "--knot", "1/3", "--smoothing", "0"});
    CHECK(r.status == 0);
    CHECK(r.out.rfind("graph basic_tree {", 0) == 0);
}

TEST_CASE("census passes cleanly on a small range") {
    CliResult r = run({"census", "--max-alpha", "25"});
    CHECK(r.status == 0);
    CHECK(r.out.find(" 0 violations") != std::string::npos);
}

TEST_CASE("census with alpha up to 99 exits clean") {
    CliResult r = run({"census", "--max-alpha", "99", "--jobs", "2"});
    CHECK(r.status == 0);
    CHECK(r.out.find(" 0 violations") != std::string::npos);
}

TEST_CASE("crosscheck reports a match") {
    CliResult r = run({"crosscheck", "--knot", "82/429"});
    CHECK(r.status == 0);
    CHECK(r.out.find("MATCH") != std::string::npos);

    r = run({"crosscheck", "--knot", "82/429", "--json"});
    CHECK(r.status == 0);
    json parsed = json::parse(r.out);
    CHECK(parsed["match"] == true);
    CHECK(parsed["generated"].size() == 8);
    CHECK(parsed["only_generated"].empty());
}

TEST_CASE("pretzel verb prints the conjectural table") {
    CliResult r = run({"pretzel", "--p", "3", "--q", "5", "--r", "7", "--json"});
    REQUIRE(r.status == 0);
    json parsed = json::parse(r.out);
    REQUIRE(parsed.size() == 9);
    for (const json& rec : parsed) {
        CHECK(rec["conjectural"] == true);
        CHECK((rec["surface_type"] == "TypeIII" || rec["surface_type"] == "TypeII"));
    }
    CHECK(parsed[0]["weight"] == 24);
    CHECK(parsed[5]["weight"] == 52);

    r = run({"pretzel", "--p", "3", "--q", "5", "--r", "7"});
    CHECK(r.status == 0);
    CHECK(r.out.find("conjectural") != std::string::npos);
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run({"frobnicate"}).status == 2);
    CHECK(run({"surfaces"}).status == 2);                          // missing --knot
    CHECK(run({"surfaces", "--knot", "5/4"}).status == 2);         // even alpha
    CHECK(run({"surfaces", "--knot", "abc"}).status == 2);
    CHECK(run({"seminorm", "--knot", "1/3", "--p", "x", "--q", "1"}).status == 2);
    CHECK(run({"tree", "--knot", "82/429", "--smoothing", "1100"}).status == 2);
    CHECK(run({"tree", "--knot", "82/429", "--smoothing", "012"}).status == 2);
    CHECK(run({"pretzel", "--p", "2", "--q", "3", "--r", "3"}).status == 2);
    CHECK(run({}).status == 2);                                    // no subcommand
}

TEST_CASE("help exits with status 0") {
    CliResult r = run({"--help"});
    CHECK(r.status == 0);
    CHECK(r.out.find("surfaces") != std::string::npos);
}
