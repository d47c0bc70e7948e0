#include "hooklaw/cli.hpp"
#include "hooklaw/partition.hpp"
#include "hooklaw/verify.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

using namespace hooklaw;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "hooklaw");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

} // namespace

TEST_CASE("pn") {
    const auto r = run({"pn", "--n", "100"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "190569292\n");
    CHECK(run({"pn", "--n", "0"}).out == "1\n");
    CHECK(run({"pn"}).code == cli::kUsage);
}

TEST_CASE("exact") {
    const auto r = run({"exact", "--n", "3", "--m", "2"});
    REQUIRE(r.code == cli::kOk);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["p_n"] == "3");
    CHECK(doc["E_Y"][0] == "2");
    CHECK(doc["E_Z"][0] == "1");
    CHECK(doc["E_Y"][1] == "3");
    CHECK(doc["E_Y"][2] == "17/3");
    CHECK(doc["E_Z"][1] == "17/9");
    CHECK(doc["hook_hist"]["1"] == "4");
    CHECK(doc["hook_hist"]["2"] == "2");
    CHECK(doc["hook_hist"]["3"] == "3");
    CHECK(run({"exact", "--n", "61"}).code == cli::kTolerance);
}

TEST_CASE("gf-check") {
    const auto r = run({"gf-check", "--n", "12", "--m", "2"});
    CHECK(r.code == cli::kOk);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 13);
    CHECK(rows[0] == "n\tp_n\tcoefficient\tE_Y\toracle");
    CHECK(rows[3] == "3\t3\t17\t17/3\texact-match");
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].ends_with("exact-match"));
    const auto wide = lines(run({"gf-check", "--n", "80", "--m", "1"}).out);
    CHECK(wide.back().ends_with("identity-match"));
}

TEST_CASE("asym") {
    const auto r = run({"asym", "--n", "1000"});
    REQUIRE(r.code == cli::kOk);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["n"] == 1000);
    CHECK(doc["residual"].get<double>() < 1e-5);
    CHECK(doc["hr_ratio"].get<double>() == doctest::Approx(1.0142).epsilon(1e-3));
    CHECK(doc["hayman_ratio"].get<double>() == doctest::Approx(1.0047).epsilon(1e-3));
    CHECK(doc["p_exact"] == "24061467864032622473692149727991");
}

TEST_CASE("shape and limit tables") {
    const auto shape = lines(run({"shape", "--points", "10"}).out);
    CHECK(shape.size() == 11);
    CHECK(shape[0] == "t,s");
    const auto limit = lines(run({"limit"}).out);
    CHECK(limit.size() == 242);
    CHECK(limit[0] == "u,density,cdf");
    CHECK(limit[1].starts_with("0,"));
}

TEST_CASE("sample output is reproducible") {
    const auto a = run({"sample", "--n", "500", "--count", "300", "--seed", "42", "--threads", "1"});
    const auto b = run({"sample", "--n", "500", "--count", "300", "--seed", "42", "--threads", "3"});
    const auto c = run({"sample", "--n", "500", "--count", "300", "--seed", "43", "--threads", "1"});
    REQUIRE(a.code == cli::kOk);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
    const auto rows = lines(a.out);
    CHECK(rows.size() == 301);
    CHECK(rows[0] == "trial,hook,scaled");
    CHECK(rows[1].starts_with("0,"));
    CHECK(a.err.find("\"subcommand\"") != std::string::npos);

    const auto f = run({"sample", "--n", "500", "--count", "50", "--algo", "fristedt"});
    CHECK(f.code == cli::kOk);
    CHECK(f.err.find("acceptance") != std::string::npos);
}

TEST_CASE("sample histogram") {
    const auto r = run({"sample", "--n", "200", "--count", "2000", "--hist", "20"});
    REQUIRE(r.code == cli::kOk);
    const auto doc = nlohmann::json::parse(r.out);
    std::int64_t total = doc["overflow"].get<std::int64_t>();
    for (const auto& c : doc["counts"]) total += c.get<std::int64_t>();
    CHECK(total == 2000);
    CHECK(doc["counts"].size() == 20);
}

TEST_CASE("ks") {
    const auto r = run({"ks", "--n", "100", "--count", "2000", "--seed", "5"});
    REQUIRE(r.code == cli::kOk);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["ks_distance"].get<double>() > 0.0);
    CHECK(doc["ks_distance"].get<double>() < 0.2);
}

TEST_CASE("usage errors") {
    CHECK(run({"--help"}).code == cli::kOk);
    CHECK(run({"pn", "--n", "5", "--bogus"}).code == cli::kUsage);
    CHECK(run({"frobnicate"}).code == cli::kUsage);
    CHECK(run({"sample", "--n", "5", "--algo", "nope"}).code == cli::kUsage);
    CHECK(run({"verify", "--level", "medium"}).code == cli::kUsage);
}

TEST_CASE("verify quick") {
    const auto r = run({"verify", "--level", "quick"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verification catches a wrong hook definition") {
    CHECK(check_han_identity(10, 3).passed);
    const HookFunction arm_only = [](const Partition& lambda, Cell c) { return lambda.row(c.t) - c.s + 1; };
    CHECK_FALSE(check_han_identity(10, 3, arm_only).passed);
}
