#include "doctest.h"

#include "qloop/cli.hpp"

#include <json.hpp>

#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

using Json = nlohmann::json;

namespace {

struct Run {
    int code = 0;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "qloop");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Run r;
    r.code = qloop::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("criterion job") {
    Run r = run({"criterion", "--n", "1", "--mode", "generic", "--factors", "1:1", "1:q^2"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["result"]["predicted"] == "reducible");
    const Json& v = j["result"]["violations"];
    REQUIRE(v.size() == 2);
    CHECK(v[0] == Json{{"k", 1}, {"k_prime", 2}, {"t", 1}, {"sign", "+"}});
    CHECK(v[1]["sign"] == "-");
    CHECK(j["job"]["command"] == "criterion");
    CHECK(j["job"]["seed"] == 20240917);
    CHECK(j["job"]["factors"] == Json{"1:1", "1:q^2"});
    CHECK(j["version"] == QLOOP_VERSION);

    Json ok = Json::parse(run({"criterion", "--n", "3", "--factors", "1:1", "3:q^5"}).out);
    CHECK(ok["result"]["predicted"] == "irreducible");
}

TEST_CASE("verify and rmatrix jobs") {
    Run v = run({"verify", "--suite", "relations", "--n", "2", "--xi", "1", "--a", "1"});
    CHECK(v.code == 0);
    Json vj = Json::parse(v.out);
    CHECK(vj["result"]["passed"] == true);
    CHECK(vj["result"]["cases"].get<int>() > 0);

    Run r = run({"rmatrix", "--n", "1", "--xi", "1", "--zeta", "1", "--a", "1", "--b", "q^2", "--format", "json"});
    REQUIRE(r.code == 0);
    Json rj = Json::parse(r.out);
    CHECK(rj["result"]["rank"] == 1);
    CHECK(rj["result"]["kernel_dim"] == 3);
    CHECK(rj["result"]["assembled"]["cols"] == 4);
    CHECK(rj["job"]["b"] == "q^2");

    Run csv = run({"rmatrix", "--n", "1", "--xi", "1", "--zeta", "1", "--a", "1", "--b", "3", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("# qloop " QLOOP_VERSION, 0) == 0);
    CHECK(run({"criterion", "--n", "1", "--factors", "1:1", "--format", "csv"}).code == 2);
}

TEST_CASE("irreducible and build jobs") {
    Run r = run({"irreducible", "--n", "1", "--factors", "1:1", "1:2"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["result"]["agrees"] == true);
    Run e = run({"irreducible", "--n", "1", "--mode", "epsilon(5)", "--factors", "1:1", "1:e^3"});
    REQUIRE(e.code == 0);
    CHECK(Json::parse(e.out)["result"]["agrees"] == true);
    Run b = run({"build", "--n", "2", "--factors", "1:1", "2:q"});
    REQUIRE(b.code == 0);
    CHECK(Json::parse(b.out)["result"]["basis"].size() == 9);
}

TEST_CASE("usage errors") {
    Run bad_n = run({"criterion", "--n", "0", "--factors", "1:1"});
    CHECK(bad_n.code == 2);
    CHECK(bad_n.err.rfind("qloop: --n:", 0) == 0);
    Run bad_expr = run({"criterion", "--n", "1", "--factors", "1:q^^"});
    CHECK(bad_expr.code == 2);
    CHECK(bad_expr.err.find("--factors") != std::string::npos);
    CHECK(bad_expr.err.find('\n') == bad_expr.err.size() - 1);
    CHECK(run({"criterion", "--n", "1", "--factors", "1:0"}).code == 2);
    CHECK(run({"criterion", "--n", "1", "--factors", "1:e"}).code == 2);
    CHECK(run({"verify", "--suite", "nope", "--n", "1"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("artifacts are reproducible") {
    std::string path = std::string(QLOOP_TEST_TMP) + "/qloop_cli_grid.json";
    std::vector<std::string> args{"grid", "--n", "1", "--seed", "5", "--out", path};
    Run first = run(args);
    REQUIRE(first.code == 0);
    CHECK(first.out.empty());
    std::string a = slurp(path);
    REQUIRE_FALSE(a.empty());
    REQUIRE(run(args).code == 0);
    CHECK(slurp(path) == a);
    Json j = Json::parse(a);
    CHECK(j["job"]["seed"] == 5);
    CHECK(j["result"]["disagreements"] == 0);

    std::vector<std::string> irr{"irreducible", "--n", "2", "--factors", "1:1", "2:q^3", "--seed", "11"};
    CHECK(run(irr).out == run(irr).out);
}
