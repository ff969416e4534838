#include "doctest.h"

#include <json.hpp>

#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"
#include "quartic/report.hpp"

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"quartic"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    int code = quartic::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("report formatting helpers") {
    CHECK(quartic::format_double(0.5) == "0.5");
    CHECK(quartic::format_double(-3.0) == "-3");
    CHECK(quartic::format_double(1e-10) == "1e-10");
    CHECK(quartic::current_timestamp_utc().size() == 20);
}

TEST_CASE("quartic subcommand") {
    SUBCASE("closed form with an exact value") {
        auto r = run_cli({"quartic", "--a", "1", "--m", "1"});
        CHECK(r.code == 0);
        CHECK(contains(r.out, "exact: 5/32·π"));
        CHECK(contains(r.out, "value: 0.490873852123405"));
        CHECK(contains(r.out, "coefficients: 3/2 1\n"));
    }

    SUBCASE("report carries the m = 5 coefficient row") {
        auto r = run_cli({"quartic", "--a", "1/2", "--m", "5", "--format", "json",
                          "--no-timestamp"});
        CHECK(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["coefficients"] ==
              std::vector<std::string>{"4389/256", "8589/128", "7161/64", "777/8", "693/16",
                                       "63/8"});
    }

    SUBCASE("all routes agree") {
        auto r = run_cli({"quartic", "--a", "3/2", "--m", "2", "--method", "all"});
        CHECK(r.code == 0);
        CHECK(contains(r.out, "checks: 3/3 passed"));
        CHECK(contains(r.out, "[PASS] hypergeometric-agrees-with-closed"));
        CHECK(contains(r.out, "[PASS] landen-agrees-with-closed"));
        CHECK(contains(r.out, "[PASS] quadrature-agrees-with-closed"));
    }

    SUBCASE("json output") {
        auto r = run_cli({"quartic", "--a", "1", "--m", "1", "--format", "json", "--no-timestamp"});
        CHECK(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["schemaVersion"] == 1);
        CHECK(j["command"] == "quartic");
        CHECK(j["inputs"]["a"] == "1");
        CHECK(j["inputs"]["m"] == "1");
        CHECK(j["valueExact"] == "5/32·π");
        CHECK(j["value"].get<double>() == doctest::Approx(0.4908738521234052).epsilon(1e-15));
        CHECK_FALSE(j.contains("timestamp"));
    }

    SUBCASE("timestamp appears unless suppressed") {
        auto r = run_cli({"quartic", "--a", "1", "--m", "0", "--format", "json"});
        auto j = nlohmann::json::parse(r.out);
        REQUIRE(j.contains("timestamp"));
        CHECK(j["timestamp"].get<std::string>().size() == 20);
    }

    SUBCASE("domain error exits with 2") {
        auto r = run_cli({"quartic", "--a", "-1", "--m", "0"});
        CHECK(r.code == 2);
        CHECK(contains(r.err, "error:"));
    }
}

TEST_CASE("table subcommand") {
    SUBCASE("text rows") {
        auto r = run_cli({"table", "--m", "2"});
        CHECK(r.code == 0);
        CHECK(contains(r.out, "m 0: 1\n"));
        CHECK(contains(r.out, "m 1: 3/2 1\n"));
        CHECK(contains(r.out, "m 2: 21/8 15/4 3/2\n"));
    }

    SUBCASE("csv golden bytes") {
        auto r = run_cli({"table", "--m", "1", "--format", "csv", "--no-timestamp"});
        CHECK(r.code == 0);
        CHECK(r.out == "m,d_0,d_1\r\n0,1,\r\n1,3/2,1\r\n");
        auto again = run_cli({"table", "--m", "1", "--format", "csv", "--no-timestamp"});
        CHECK(again.out == r.out);
    }

    SUBCASE("decimal rendering") {
        auto r = run_cli({"table", "--m", "1", "--float"});
        CHECK(contains(r.out, "m 1: 1.5 1\n"));
    }
}

TEST_CASE("landen subcommand") {
    SUBCASE("quadratic iteration") {
        auto r = run_cli({"landen", "quadratic", "1", "1", "1", "--format", "json",
                          "--no-timestamp"});
        CHECK(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["value"].get<double>() == doctest::Approx(3.6275987284684357).epsilon(1e-12));
        CHECK(j["metrics"]["iterations"] == 3);
        double order = j["metrics"]["estimated-order"].get<double>();
        CHECK(order > 2.7);
        CHECK(order < 3.3);
        CHECK(j["checks"][0]["name"] == "converged");
        CHECK(j["allPassed"] == true);
        CHECK(j["trace"].size() == 4);
    }

    SUBCASE("agm and elliptic") {
        auto r = run_cli({"landen", "agm", "2", "2"});
        CHECK(r.code == 0);
        CHECK(contains(r.out, "value: 2\n"));
        CHECK(contains(r.out, "iterations: 0\n"));
        auto e = run_cli({"landen", "elliptic", "1", "1"});
        CHECK(contains(e.out, "value: 1.570796326794"));
    }

    SUBCASE("agm iteration history") {
        auto r = run_cli({"landen", "agm", "1", "2", "--format", "json", "--no-timestamp"});
        CHECK(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["value"].get<double>() == doctest::Approx(1.4567910310469068).epsilon(1e-14));
        CHECK(j["metrics"]["iterations"] == 4);
        double order = j["metrics"]["estimated-order"].get<double>();
        CHECK(order > 1.8);
        CHECK(order < 2.2);
        CHECK(j["checks"][0]["name"] == "converged");
    }

    SUBCASE("sextic with the printed d update warns") {
        auto r = run_cli({"landen", "sextic", "4", "5", "1", "1", "1", "--printed-d-map"});
        CHECK(r.code == 0);
        CHECK(contains(r.out, "warning:"));
        auto good = run_cli({"landen", "sextic", "4", "5", "1", "1", "1"});
        CHECK(good.code == 0);
        CHECK_FALSE(contains(good.out, "warning:"));
    }

    SUBCASE("wrong parameter count") {
        auto r = run_cli({"landen", "quadratic", "1", "1"});
        CHECK(r.code == 2);
        CHECK(contains(r.err, "expected 3 parameters"));
    }

    SUBCASE("indefinite quadratic state") {
        auto r = run_cli({"landen", "quadratic", "1", "4", "1"});
        CHECK(r.code == 2);
    }
}

TEST_CASE("transform subcommand") {
    SUBCASE("quartic integrand path") {
        auto r = run_cli({"transform", "--a", "1", "--m", "1", "--format", "json",
                          "--no-timestamp"});
        CHECK(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["function"]["numerator"] == nlohmann::json({"1/8", "0", "1/2"}));
        CHECK(j["function"]["denominator"] == nlohmann::json({"1", "0", "2", "0", "1"}));
        CHECK(j["checks"][0]["name"] == "matches-closed-form");
        CHECK(j["allPassed"] == true);
    }

    SUBCASE("explicit coefficients") {
        auto r = run_cli({"transform", "--num", "1", "--den", "1,0,1"});
        CHECK(r.code == 0);
        CHECK(contains(r.out, "g(y) = "));
    }

    SUBCASE("general map accepts skew integrands") {
        auto skew = run_cli({"transform", "--num", "1", "--den", "1,1,1"});
        CHECK(skew.code == 2);
        auto ok = run_cli({"transform", "--num", "1", "--den", "1,1,1", "--general"});
        CHECK(ok.code == 0);
    }

    SUBCASE("argument validation") {
        CHECK(run_cli({"transform"}).code == 2);
        CHECK(run_cli({"transform", "--a", "1"}).code == 2);
        CHECK(run_cli({"transform", "--num", "1", "--den", "1,,1"}).code == 2);
    }
}

TEST_CASE("verify subcommand") {
    auto r = run_cli({"verify", "landen-symbolic"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "[PASS]"));
    CHECK_FALSE(contains(r.out, "[FAIL]"));
    CHECK(run_cli({"verify", "unknown"}).code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"table", "--m", "1", "--format", "xml"}).code == 2);
    CHECK(run_cli({"table"}).code == 2);
}
