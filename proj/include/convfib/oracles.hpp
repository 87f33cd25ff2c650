#pragma once

// Brute-force reference computations. Nothing here calls into the series,
// sequences or hessenberg code paths; only Poly/BigInt arithmetic is shared.

#include <cstdint>
#include <vector>

#include "convfib/polynomial.hpp"

namespace convfib::oracle {

using DenseMatrix = std::vector<std::vector<Poly>>;

/// Laplace expansion along the first row. Exponential; keep n small.
Poly cofactor_det(const DenseMatrix& m);

/// a_{n+1} of a_{k+1} = sum_{i<=k} weights[i][k] a_i (0-based weights,
/// only i <= k is read), starting from a_1.
BigInt hessenberg_recurrence(const std::vector<std::vector<long>>& weights, const BigInt& a1);

/// F_{h,0..count-1} by a plain loop.
std::vector<Poly> fib_table(std::size_t count);

/// sum over all (j_1..j_r) >= 0 with sum m of F_{h,j_1+1} ... F_{h,j_r+1},
/// by explicit enumeration of compositions.
Poly composition_sum(std::int64_t r, std::int64_t m);

/// x_0 = 0, x_1 = 1, x_{n+1} = k x_n + x_{n-1}, for n < count.
std::vector<BigInt> integer_fibonacci(long k, std::size_t count);

/// Self-convolution c_m = sum_i a_i a_{m-i}.
std::vector<BigInt> self_convolution(const std::vector<BigInt>& a);

}  // namespace convfib::oracle
