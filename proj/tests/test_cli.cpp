#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include <json.hpp>

#include <zeromode/cli.hpp>

using namespace zeromode;
using namespace zeromode::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::string cmd, std::map<std::string, std::string> params, OutputFormat fmt = OutputFormat::csv) {
    RunConfig cfg{std::move(cmd), std::move(params), fmt, std::nullopt};
    std::ostringstream out, err;
    int const code = run(cfg, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("scan syntax", "[cli]") {
    auto v = parse_scan("R-scan", "1:3:3");
    CHECK(v == std::vector<double>{1, 2, 3});
    auto l = parse_scan("R-scan", "0.1:10:3:log");
    CHECK(l[1] == Catch::Approx(1.0).epsilon(1e-14));
    CHECK(l.back() == 10.0);
    CHECK_THROWS_AS(parse_scan("R-scan", "3:1:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scan("R-scan", "1:3:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scan("R-scan", "0:3:4:log"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scan("R-scan", "1:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scan("R-scan", "1:3:4:lin"), std::invalid_argument);
}

TEST_CASE("theta subcommand emits one row with the three functions", "[cli]") {
    auto const r = invoke("theta", {{"R", "1"}, {"x", "0.5"}});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("theta1_re,theta1_im,theta3_re") != std::string::npos);
    auto const tp = ThetaParams::from_modulus(1);
    CHECK(r.out.find(format_double(theta1(cplx(0.5, 0), tp).real())) != std::string::npos);
}

TEST_CASE("exit codes", "[cli]") {
    CHECK(invoke("theta", {{"R", "0.01"}}).code == invalid_arguments);
    CHECK(invoke("theta", {{"bogus", "1"}}).code == invalid_arguments);
    CHECK(invoke("theta", {{"R", "abc"}}).code == invalid_arguments);
    CHECK(invoke("density", {{"R", "1"}, {"R-scan", "1:2:2"}}).code == invalid_arguments);
    CHECK(invoke("nosuch", {}).code == invalid_arguments);
    // An unreachable tolerance turns the identity check into a violation.
    auto const v = invoke("lemma421", {{"R", "1"}, {"p", "0.7"}, {"tol", "1e-30"}});
    CHECK(v.code == identity_violated);
    CHECK(v.err.find("R = 1") != std::string::npos);
    CHECK(invoke("lemma411", {{"R", "1"}, {"x0", "4"}}).code == invalid_arguments);
}

TEST_CASE("verify lemmas suite passes", "[cli][verify]") {
    auto const r = invoke("verify", {{"suite", "lemmas"}, {"tol", "1e-8"}});
    CHECK(r.code == 0);
    CHECK(r.out.find(",fail\n") == std::string::npos);
    CHECK(r.out.find(",info\n") != std::string::npos);
}

TEST_CASE("positivity scan reports the sufficient condition", "[cli]") {
    auto const r = invoke("positivity", {{"R-scan", "0.05:5:50"}});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.rfind("slope inequality", 0) == 0) ++rows;
    }
    CHECK(rows == 50);
    CHECK(r.out.find("large-R") != std::string::npos);
}

TEST_CASE("output is deterministic and JSON is well formed", "[cli]") {
    auto const a = invoke("spectrum", {{"parity", "even"}}, OutputFormat::json);
    auto const b = invoke("spectrum", {{"parity", "even"}}, OutputFormat::json);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    auto const j = nlohmann::json::parse(a.out);
    CHECK(j["command"] == "spectrum");
    CHECK(j["rows"].size() == 3);
    for (auto const& row : j["rows"]) CHECK(row.size() == j["columns"].size());
    auto const c = invoke("probe-qr", {{"R", "1"}});
    CHECK(c.out.find("open-question") != std::string::npos);
}

TEST_CASE("every subcommand runs with defaults", "[cli]") {
    for (auto const& cmd : subcommands()) {
        if (cmd == "verify") continue;
        INFO(cmd);
        CHECK(invoke(cmd, {}).code == 0);
    }
}

TEST_CASE("tables format doubles without locale", "[cli][table]") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(-2.5e-300) == "-2.5e-300");
    CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
    Table t;
    t.command = "x";
    t.columns = {"a", "b"};
    t.add_row({std::string("has,comma"), 1.0});
    std::ostringstream os;
    write_csv(t, os);
    CHECK(os.str() == "a,b\n\"has,comma\",1\n");
    CHECK_THROWS(t.add_row({1.0}));
}
