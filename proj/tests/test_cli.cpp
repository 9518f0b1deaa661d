#include <doctest.h>

#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#ifndef FXF_CLI_PATH
#define FXF_CLI_PATH "fxf"
#endif

namespace {

using Json = nlohmann::ordered_json;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args)
{
    std::string cmd = std::string(FXF_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
        res.out.append(buf.data(), n);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

const char* heun_example =
    "'{\"gamma\":\"1\",\"delta\":\"0\",\"epsilon\":\"-1/2\",\"alpha_beta\":\"-1\","
    "\"alpha_plus_beta\":\"-1/2\",\"d\":\"1/2\",\"q\":\"1/2\"}'";

} // namespace

TEST_CASE("cli: classify reports four regular points for the Heun example")
{
    RunResult r = run_cli(std::string("classify --heun ") + heun_example);
    REQUIRE(r.exit_code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["classification"]["regular_count"] == 4);
    CHECK(doc["classification"]["irregular_count"] == 0);
    CHECK(doc["matched_heun"]["d"] == "1/2");
}

TEST_CASE("cli: heun-dual with q/(alpha beta) = 1 returns the coalescence map")
{
    RunResult r = run_cli(std::string("heun-dual --heun ") + heun_example +
                          " --q-over-ab 1");
    REQUIRE(r.exit_code == 0);
    Json doc = Json::parse(r.out);
    REQUIRE(!doc["map"].is_null());
    CHECK(doc["map"]["gamma"] == "0");   // 1 - gamma
    CHECK(doc["map"]["delta"] == "0");   // -delta
    CHECK(doc["map"]["epsilon"] == "3/2"); // 1 - epsilon
    CHECK(doc["flags"][0] == "coalescence_q_over_ab_one");
}

TEST_CASE("cli: reduce reproduces the closed-form branch values")
{
    RunResult r = run_cli("reduce --a 1 --b 5 --c 3 --m 2 --n 1");
    REQUIRE(r.exit_code == 0);
    Json doc = Json::parse(r.out);
    const Json& sol = doc["solutions"][0];
    CHECK(sol["R"] == "-1/3");
    CHECK(sol["c1"] == "9/4");
    CHECK(sol["mu"] == "1/2");
    CHECK(doc["checks"]["substitution"] == "pass");
    CHECK(doc["checks"]["n_equals_R_mx_plus_n_squared"] == "pass");
}

TEST_CASE("cli: malformed JSON exits with code 2 and a machine-readable error")
{
    RunResult r = run_cli("classify --heun '{broken'");
    CHECK(r.exit_code == 2);
    Json doc = Json::parse(r.out);
    CHECK(doc.contains("error"));
}

TEST_CASE("cli: byte-identical output on repeated runs")
{
    std::string args = std::string("verify --identity product_eq3 --heun ") +
                       heun_example;
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("cli: emitted equations round trip as inputs")
{
    RunResult r = run_cli(std::string("classify --heun ") + heun_example);
    REQUIRE(r.exit_code == 0);
    Json doc = Json::parse(r.out);
    std::string ode = doc["input"].dump();

    RunResult second = run_cli("companion --ode '" + ode + "'");
    REQUIRE(second.exit_code == 0);
    Json comp = Json::parse(second.out);
    CHECK(comp["source"]["P"] == doc["input"]["P"]);
}

TEST_CASE("cli: batch runs")
{
    const char* empty_path = "/tmp/fxf_batch_empty.json";
    {
        std::ofstream f(empty_path);
        f << "[]";
    }
    RunResult r = run_cli(std::string("batch ") + empty_path);
    REQUIRE(r.exit_code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["total"] == 0);
    CHECK(doc["pass"] == 0);
    CHECK(doc["fail"] == 0);

    const char* mixed_path = "/tmp/fxf_batch_mixed.json";
    {
        std::ofstream f(mixed_path);
        Json batch = Json::array();
        batch.push_back(Json{{"name", "hg-dual"},
                             {"input", Json{{"a", "1/2"}, {"b", "1/3"}, {"c", "5/4"}}}});
        // an impossibly tight tolerance forces a verification failure
        batch.push_back(Json{
            {"name", "verify"},
            {"input", Json{{"identity", "product_eq3"},
                           {"equation", Json{{"type", "hypergeometric"},
                                             {"a", "1/2"},
                                             {"b", "1/3"},
                                             {"c", "5/4"}}}}},
            {"options", Json{{"tol", "1e-60"}}}});
        f << batch.dump();
    }
    RunResult m = run_cli(std::string("batch ") + mixed_path);
    CHECK(m.exit_code == 1);
    Json doc2 = Json::parse(m.out);
    CHECK(doc2["total"] == 2);
    CHECK(doc2["pass"] == 1);
    CHECK(doc2["fail"] == 1);
    CHECK(doc2["results"][0]["output"]["map"]["c"] == "-1/4");
}

TEST_CASE("cli: the coalescence map is itself a valid heun-dual input")
{
    RunResult r = run_cli(std::string("heun-dual --heun ") + heun_example +
                          " --q-over-ab 1");
    REQUIRE(r.exit_code == 0);
    Json doc = Json::parse(r.out);
    std::string mapped = doc["map"].dump();
    RunResult second = run_cli("heun-dual --heun '" + mapped + "'");
    CHECK(second.exit_code == 0);
    Json doc2 = Json::parse(second.out);
    CHECK(doc2["source"]["gamma"] == doc["map"]["gamma"]);
}

TEST_CASE("cli: random hg-dual sweep passes")
{
    RunResult r = run_cli("hg-dual --sweep 50 --seed 7");
    REQUIRE(r.exit_code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["sweep"] == 50);
    CHECK(doc["pass"] == 50);
    CHECK(doc["fail"] == 0);
}
