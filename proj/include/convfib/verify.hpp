#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "convfib/polynomial.hpp"

namespace convfib {

struct CheckResult {
    std::string check_id;
    /// Bounds actually run, plus "instances" (comparisons made) and
    /// "skipped" = 1 when the bounds left nothing to compare.
    std::map<std::string, std::int64_t> params;
    bool passed = true;
    /// First failing instance (loops run in lexicographic parameter order).
    std::optional<std::string> counterexample;
    std::int64_t elapsed_ms = 0;
};

struct SuiteBounds {
    std::int64_t r_max = 5;
    std::int64_t n_max = 30;
    /// Cap for the Hessenberg enumeration checks: min(n_max, 12).
    std::int64_t hess_cap = 12;
    std::uint64_t seed = 0;
};

struct SuiteReport {
    SuiteBounds bounds;
    std::vector<CheckResult> results;  // sorted by check_id
    bool all_passed = true;
};

/// Test hook: perturb the left-hand side of the first comparison of a check
/// so the harness itself can be shown to report failures.
struct CheckOptions {
    bool corrupt_first = false;
};

struct SuiteOptions {
    std::optional<std::string> corrupt_check;
    bool parallel = true;
};

/// Every identity check, each runnable on its own with explicit bounds.
namespace checks {

// poly_core / series, driven by `seed`
CheckResult ring_axioms(std::uint64_t seed, int cases, const CheckOptions& = {});
CheckResult quad_pow(std::uint64_t seed, int cases, const CheckOptions& = {});
CheckResult series_laws(std::uint64_t seed, int cases, const CheckOptions& = {});
CheckResult gf_fib(std::int64_t n_terms, const CheckOptions& = {});

// sequences
CheckResult binet(std::int64_t n_max, const CheckOptions& = {});
CheckResult lucas_relation(std::int64_t n_max, const CheckOptions& = {});
CheckResult fib_combinatorial(std::int64_t n_max, const CheckOptions& = {});
CheckResult five_way(std::int64_t r_max, std::int64_t j_max, std::int64_t hess_cap, const CheckOptions& = {});
CheckResult conv_brute(std::int64_t r_max, std::int64_t m_max, const CheckOptions& = {});
CheckResult thm4_1(std::int64_t r_max, const CheckOptions& = {});
CheckResult thm4_3(std::int64_t r_max, std::int64_t n_max, const CheckOptions& = {});
CheckResult thm5(std::int64_t r_max, std::int64_t j_max, const CheckOptions& = {});
CheckResult degree_parity(std::int64_t r_max, std::int64_t j_max, const CheckOptions& = {});
CheckResult specialization(std::int64_t n_max, const CheckOptions& = {});

// hessenberg
CheckResult eq14(std::int64_t n_max, const CheckOptions& = {});
CheckResult eq15(std::int64_t n_max, const CheckOptions& = {});
CheckResult thm6(std::uint64_t seed, int instances, const CheckOptions& = {});
CheckResult hess_cofactor(std::uint64_t seed, const CheckOptions& = {});
CheckResult thm7(std::int64_t n_max, const CheckOptions& = {});
CheckResult cor8(std::int64_t n_max, const CheckOptions& = {});
CheckResult cor9(std::int64_t n_max, const CheckOptions& = {});
CheckResult charpoly_shift(std::int64_t n_max, const CheckOptions& = {});

}  // namespace checks

/// Runs every check. Never stops early; failures are reported, not thrown.
/// Deterministic for fixed arguments apart from elapsed_ms.
SuiteReport run_suite(std::int64_t r_max, std::int64_t n_max, std::uint64_t seed, const SuiteOptions& options = {});

nlohmann::json to_json(const CheckResult& result);
nlohmann::json to_json(const SuiteReport& report);

/// Rows n = 0..n_max of F^(r)_{h,n}, one column per entry of r_list.
std::vector<std::vector<Poly>> emit_table1(const std::vector<std::int64_t>& r_list, std::int64_t n_max);

}  // namespace convfib
