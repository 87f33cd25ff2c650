#include <doctest.h>

#include <set>

#include "convfib/render.hpp"
#include "convfib/verify.hpp"

using namespace convfib;

namespace {

const std::set<std::string> kExpectedChecks = {
    "binet",         "charpoly_shift", "conv_brute",     "cor8",        "cor9",           "degree_parity",
    "eq14",          "eq15",           "five_way",       "fib_combinatorial", "gf_fib",   "hess_cofactor",
    "lucas_relation", "quad_pow",      "ring_axioms",    "series_laws", "specialization", "thm4_1",
    "thm4_3",        "thm5",           "thm6",           "thm7"};

nlohmann::json without_timing(nlohmann::json j) {
    for (auto& r : j["results"]) r.erase("elapsed_ms");
    return j;
}

}  // namespace

TEST_CASE("run_suite passes at small bounds") {
    const SuiteReport report = run_suite(3, 10, 0);
    CHECK(report.all_passed);
    CHECK(report.bounds.hess_cap == 10);
    std::set<std::string> ids;
    for (const auto& r : report.results) {
        CHECK_MESSAGE(r.passed, r.check_id, ": ", r.counterexample.value_or(""));
        CHECK_FALSE(r.counterexample.has_value());
        ids.insert(r.check_id);
    }
    CHECK(ids == kExpectedChecks);
    CHECK(report.results.size() == kExpectedChecks.size());
    CHECK(std::is_sorted(report.results.begin(), report.results.end(),
                         [](const auto& a, const auto& b) { return a.check_id < b.check_id; }));
}

TEST_CASE("run_suite with minimal bounds") {
    const SuiteReport report = run_suite(1, 2, 0);
    CHECK(report.all_passed);
    CHECK(report.results.size() == kExpectedChecks.size());
    CHECK(report.bounds.hess_cap == 2);
}

TEST_CASE("run_suite rejects invalid bounds") {
    CHECK_THROWS_AS(run_suite(0, 10, 0), std::invalid_argument);
    CHECK_THROWS_AS(run_suite(2, 1, 0), std::invalid_argument);
}

TEST_CASE("run_suite is deterministic and order-independent") {
    const auto a = without_timing(to_json(run_suite(2, 8, 42)));
    const auto b = without_timing(to_json(run_suite(2, 8, 42, {std::nullopt, false})));
    CHECK(a == b);
}

TEST_CASE("a corrupted check is reported with a counterexample") {
    for (const std::string id : {"thm5", "eq15", "thm6", "binet", "charpoly_shift"}) {
        const SuiteReport report = run_suite(2, 6, 0, {id, true});
        CHECK_FALSE(report.all_passed);
        for (const auto& r : report.results) {
            if (r.check_id == id) {
                CHECK_FALSE(r.passed);
                REQUIRE(r.counterexample.has_value());
                CHECK(r.counterexample->find("lhs = ") != std::string::npos);
                CHECK(r.counterexample->find("rhs = ") != std::string::npos);
            } else {
                CHECK(r.passed);
            }
        }
    }
    const CheckResult thm5 = checks::thm5(2, 3, {true});
    REQUIRE(thm5.counterexample.has_value());
    // first instance in lexicographic order, lhs perturbed by one
    CHECK(*thm5.counterexample == "r=1 j=0: lhs = 2; rhs = 1");
}

TEST_CASE("empty ranges are marked as skipped") {
    const CheckResult r = checks::thm7(0);
    CHECK(r.passed);
    CHECK(r.params.at("skipped") == 1);
    CHECK(r.params.at("instances") == 0);
}

TEST_CASE("report JSON shape") {
    const auto j = to_json(run_suite(1, 3, 5, {"thm4_1", true}));
    CHECK(j["all_passed"] == false);
    CHECK(j["bounds"]["r_max"] == 1);
    CHECK(j["bounds"]["n_max"] == 3);
    CHECK(j["bounds"]["seed"] == 5);
    for (const auto& r : j["results"]) {
        CHECK(r["check_id"].is_string());
        CHECK(r["params"].is_object());
        CHECK(r["passed"].is_boolean());
        CHECK(r["elapsed_ms"].is_number_integer());
        CHECK(r.contains("counterexample") == !r["passed"].get<bool>());
    }
}

TEST_CASE("emit_table1") {
    const auto t = emit_table1({1, 2, 3}, 8);
    REQUIRE(t.size() == 9);
    CHECK(to_text(t[0][2]) == "0");
    CHECK(to_text(t[5][1]) == "5h^4 + 12h^2 + 3");
    CHECK(to_text(t[8][2]) == "36h^7 + 168h^5 + 210h^3 + 60h");

    const auto small = emit_table1({1}, 1);
    REQUIRE(small.size() == 2);
    CHECK(to_text(small[0][0]) == "0");
    CHECK(to_text(small[1][0]) == "1");

    const auto r2 = emit_table1({2}, 4);
    const std::vector<long> at_one{0, 1, 2, 5, 10};
    for (std::size_t n = 0; n < 5; ++n) CHECK(evaluate(r2[n][0], 1) == at_one[n]);

    CHECK_THROWS_AS(emit_table1({0}, 3), std::invalid_argument);
}
