#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <regex>
#include <set>
#include <sstream>

#include "centorb/cli.hpp"
#include "centorb/error.hpp"

using namespace centorb;
using centorb::cli::Json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args, const std::string& stdin_text) {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

const std::string kJ2J3 =
    R"({"matrix": [["0","0","0","0","0"],["1","0","0","0","0"],["0","0","0","0","0"],["0","0","1","0","0"],["0","0","0","1","0"]]})";
const std::string k135 = R"({"jordan": [{"eigenvalue": "0", "blocks": [[1,1],[3,1],[5,1]]}]})";

std::set<std::pair<std::string, std::string>> dot_edges(const std::string& dot) {
    std::set<std::pair<std::string, std::string>> edges;
    const std::regex edge(R"re("([^"]+)" -> "([^"]+)")re");
    for (auto it = std::sregex_iterator(dot.begin(), dot.end(), edge); it != std::sregex_iterator(); ++it)
        edges.emplace((*it)[1], (*it)[2]);
    return edges;
}

}  // namespace

TEST_CASE("analyze") {
    auto r = run({"analyze"}, kJ2J3);
    REQUIRE(r.code == 0);
    auto j = r.json();
    CHECK(j["jordan_type"] == Json::parse(R"([{"eigenvalue":"0","blocks":[[2,1],[3,1]]}])"));
    CHECK(j["centralizer_dimension"] == 9);
    CHECK(j["orbit_count"] == 6);
    CHECK(j["gen_function"] == Json::parse("[1,1,1,1,1,1]"));
    CHECK(j["eigenvalues"][0]["increments"] == Json::parse("[2,1]"));
    CHECK(j["eigenvalues"][0]["tail_sums"] == Json::parse("[2,1]"));

    // Cross-check the coefficients against brute force over F_2.
    auto v = run({"verify", "--prime", "2"}, kJ2J3).json();
    CHECK(v["dimension_histogram"] == j["gen_function"]);

    j = run({"analyze"}, k135).json();
    CHECK(j["orbit_count"] == 18);
    CHECK(j["gen_function"] == Json::parse("[1,1,2,2,3,3,2,2,1,1]"));

    j = run({"analyze"}, R"({"matrix": [["1","0"],["0","1"]]})").json();
    CHECK(j["centralizer_dimension"] == 4);
    CHECK(j["orbit_count"] == 2);
    CHECK(j["gen_function"] == Json::parse("[1,0,1]"));
}

TEST_CASE("analyze accepts symbolic eigenvalues and large counts") {
    std::string blocks;
    for (int s = 1; s <= 70; ++s) blocks += (s > 1 ? "," : "") + std::string("[") + std::to_string(s) + ",1]";
    const auto r = run({"analyze"}, R"({"jordan": [{"eigenvalue": "i", "blocks": [)" + blocks + "]}]}");
    REQUIRE(r.code == 0);
    CHECK(r.json()["orbit_count"] == "1180591620717411303424");  // 2^70
    CHECK(r.json()["jordan_type"][0]["eigenvalue"] == "i");
}

TEST_CASE("lattice") {
    auto r = run({"lattice", "--format", "json"}, k135);
    REQUIRE(r.code == 0);
    const auto j = r.json();
    CHECK(j["nodes"].size() == 18);
    CHECK(j["nodes"][0] == Json::parse(R"(["000", 0])"));
    std::set<std::pair<std::string, std::string>> covers;
    for (const auto& c : j["covers"]) covers.emplace(c[0], c[1]);
    CHECK(covers.count({"000", "001"}));
    CHECK(covers.count({"121", "122"}));

    const auto dot = run({"lattice", "--format", "dot"}, k135);
    REQUIRE(dot.code == 0);
    CHECK(dot.out.rfind("digraph", 0) == 0);
    CHECK(dot.out.find("\"122\" [dim=9];") != std::string::npos);
    CHECK(dot_edges(dot.out) == covers);

    const auto chain = run({"lattice", "--format", "dot"}, R"({"jordan":[{"eigenvalue":"2","blocks":[[3,1]]}]})");
    CHECK(dot_edges(chain.out) ==
          std::set<std::pair<std::string, std::string>>{{"0", "1"}, {"1", "2"}, {"2", "3"}});

    const auto capped = run({"lattice", "--cap", "10"}, k135);
    CHECK(capped.code == cli::kCapExceeded);
    CHECK(capped.err.find("18") != std::string::npos);

    const auto multi = run({"lattice"}, R"({"jordan":[{"eigenvalue":"1","blocks":[[1,1]]},{"eigenvalue":"2","blocks":[[2,1]]}]})");
    CHECK(multi.json()["nodes"].back() == Json::parse(R"(["1|2", 3])"));
}

TEST_CASE("classify") {
    auto j = run({"classify", "--vector", "0,0,0,0,0"}, kJ2J3).json();
    CHECK(j["is_bottom"] == true);
    CHECK(j["orbit_dimension"] == 0);

    j = run({"classify", "--vector", "0,0,0,1,0"}, kJ2J3).json();
    CHECK(j["label"] == "11");
    CHECK(j["orbit_dimension"] == 3);
    CHECK(j["heights"][0]["heights"] == Json::parse("[1,2]"));

    j = run({"classify", "--vector", "3,-1/2,7,0,2"}, kJ2J3).json();
    CHECK(j["is_top"] == true);
    CHECK(j["orbit_dimension"] == 5);

    auto r = run({"classify", "--vector", "1,0"}, k135);
    CHECK(r.code == cli::kInputError);
    CHECK(r.err.find("matrix") != std::string::npos);

    r = run({"classify", "--vector", "1,0"}, kJ2J3);
    CHECK(r.code == cli::kInputError);
    r = run({"classify", "--vector", "1,x,0,0,0"}, kJ2J3);
    CHECK(r.code == cli::kInputError);
    CHECK(r.err.find("entry 1") != std::string::npos);
}

TEST_CASE("compare") {
    auto j = run({"compare", "--vector", "1,2,0,1,0", "--vector", "3,6,0,3,0"}, kJ2J3).json();
    CHECK(j["equivalent"] == true);
    CHECK(j["comparable"] == "=");

    j = run({"compare", "--vector", "0,0,0,1,0", "--vector", "1,0,0,0,0"}, kJ2J3).json();
    CHECK(j["equivalent"] == false);
    CHECK(j["label1"] == "11");
    CHECK(j["label2"] == "20");
    CHECK(j["comparable"] == "<");

    j = run({"compare", "--vector", "1,0", "--vector", "0,1"}, R"({"matrix": [["1","0"],["0","2"]]})").json();
    CHECK(j["equivalent"] == false);
    CHECK(j["comparable"] == "incomparable");

    j = run({"compare", "--vector", "1,0,0,0,0", "--vector", "0,1,0,0,0"}, kJ2J3).json();
    CHECK(j["comparable"] == ">");

    for (int seed = 0; seed < 10; ++seed) {
        j = run({"compare", "--vector", "1,0,0,2,-1", "--seed", std::to_string(seed)}, kJ2J3).json();
        CHECK(j["equivalent"] == true);
        CHECK(j["transform_seed"] == seed);
    }
}

TEST_CASE("verify") {
    auto r = run({"verify", "--prime", "2"}, R"({"jordan":[{"eigenvalue":"0","blocks":[[1,1],[2,1]]}]})");
    CHECK(r.code == 0);
    CHECK(r.json()["invariant_subspaces"] == 4);
    CHECK(r.json()["pass"] == true);

    r = run({"verify", "--prime", "2"}, R"({"jordan":[{"eigenvalue":"0","blocks":[[2,1],[3,1]]}]})");
    CHECK(r.code == 0);
    CHECK(r.json()["invariant_subspaces"] == 6);

    r = run({"verify", "--prime", "2"}, R"({"jordan":[{"eigenvalue":"1/2","blocks":[[2,1]]}]})");
    CHECK(r.code == cli::kInputError);
    CHECK(r.err.find("1/2") != std::string::npos);
    r = run({"verify", "--prime", "2"}, R"({"jordan":[{"eigenvalue":"1/3","blocks":[[2,1]]}]})");
    CHECK(r.code == 0);

    r = run({"verify", "--prime", "3", "--cap", "100"}, R"({"jordan":[{"eigenvalue":"0","blocks":[[5,1]]}]})");
    CHECK(r.code == cli::kCapExceeded);
    r = run({"verify", "--prime", "4"}, R"({"jordan":[{"eigenvalue":"0","blocks":[[1,1]]}]})");
    CHECK(r.code == cli::kInputError);
}

TEST_CASE("input validation names the offending field") {
    struct Case {
        std::string doc;
        std::string needle;
    };
    const std::vector<Case> cases = {
        {R"({"matrix": [["1","2"],["3"]]})", "matrix[1]"},
        {R"({"matrix": [["1","2"],["3", 0.5]]})", "matrix[1][1]"},
        {R"({"matrix": [["1","2/0"],["3","4"]]})", "matrix[0][1]"},
        {R"({"jordan": [{"eigenvalue":"0","blocks":[[2,1],[2,3]]}]})", "jordan[0].blocks[1]"},
        {R"({"jordan": [{"eigenvalue":"0","blocks":[[0,1]]}]})", "jordan[0].blocks[0][0]"},
        {R"({"jordan": [{"eigenvalue":"0","blocks":[[1,-1]]}]})", "jordan[0].blocks[0][1]"},
        {R"({"jordan": [{"eigenvalue":"0","blocks":[[1,1]]},{"eigenvalue":"0/5","blocks":[[1,1]]}]})", "jordan[1].eigenvalue"},
        {R"({"jordan": [{"eigenvalue":"0","blocks":[[1,1]]}], "matrix": [["1"]]})", "exactly one"},
        {R"({"jordan": [{"eigenvalue":"0","blocks":[[1,1]], "extra": 1}]})", "extra"},
        {R"({"matrix": [["0","-1"],["1","0"]]})", "Jordan type"},
        {"{\n  \"matrix\": [[1,\n}", "line 3"},
    };
    for (const auto& c : cases) {
        const auto r = run({"analyze"}, c.doc);
        CHECK_MESSAGE(r.code == cli::kInputError, c.doc);
        CHECK_MESSAGE(r.err.find(c.needle) != std::string::npos, r.err);
    }
    CHECK(run({"bogus"}, k135).code == cli::kInputError);
    CHECK(run({"analyze", "/nonexistent/spec.json"}, "").code == cli::kInputError);
    CHECK(run({"--help"}, "").code == 0);
}

TEST_CASE("outputs are byte-identical across runs") {
    const std::vector<std::pair<std::vector<std::string>, std::string>> invocations = {
        {{"analyze"}, kJ2J3},
        {{"lattice", "--format", "dot"}, k135},
        {{"lattice", "--format", "json"}, k135},
        {{"classify", "--vector", "1,2,3,4,5"}, kJ2J3},
        {{"compare", "--vector", "1,0,0,2,-1", "--seed", "7"}, kJ2J3},
        {{"verify", "--prime", "3"}, R"({"jordan":[{"eigenvalue":"0","blocks":[[1,1],[3,1]]}]})"},
    };
    for (const auto& [args, doc] : invocations) {
        const auto a = run(args, doc);
        const auto b = run(args, doc);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}
