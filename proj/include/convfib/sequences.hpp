#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "convfib/polynomial.hpp"
#include "convfib/quad_ext.hpp"

namespace convfib {

/// F_{h,n}: F_0 = 0, F_1 = 1, F_{n+1} = h F_n + F_{n-1}. Memoized; safe to
/// call from several threads.
Poly fib(std::int64_t n);

/// L_{h,n}: L_0 = 2, L_1 = h, same recurrence. Memoized like fib().
Poly lucas(std::int64_t n);

/// F_{h,n} = sum_i C(n-1-i, i) h^(n-1-2i), n >= 1.
Poly fib_combinatorial(std::int64_t n);

/// ((h+s)^n - (h-s)^n, (h+s)^n + (h-s)^n).
///
/// With r1 = (h+s)/2 and r2 = (h-s)/2 these are 2^n (r1^n - r2^n) and
/// 2^n (r1^n + r2^n), so the Binet forms read
///   first  == 2^n * s * F_{h,n}
///   second == 2^n * L_{h,n}
/// without any denominators.
std::pair<QuadExt, QuadExt> binet_scaled(std::int64_t n);

/// F^(r)_{h,j+1} from the double-binomial closed form
///   sum_{l=0}^{floor(j/2)} C(j+r-l-1, j-l) C(j-l, l) h^(j-2l).
Poly convolved_gould(std::int64_t r, std::int64_t j);

/// F^(r)_{h,n} with the F^(r)_0 = 0 convention; n >= 0.
Poly convolved(std::int64_t r, std::int64_t n);

/// [F^(r)_{h,1}, ..., F^(r)_{h,m+1}] as the r-fold self-convolution of
/// (F_{h,1}, F_{h,2}, ...), built by r-1 pairwise prefix convolutions.
std::vector<Poly> convolved_conv_prefix(std::int64_t r, std::int64_t m);

/// Entry m of convolved_conv_prefix, i.e. F^(r)_{h,m+1}.
Poly convolved_conv(std::int64_t r, std::int64_t m);

/// [F^(r)_{h,0}, ..., F^(r)_{h,n}] from
///   F^(q)_n = F^(q-1)_n + h F^(q)_{n-1} + F^(q)_{n-2},  n >= 2,
/// with F^(q)_0 = 0, F^(q)_1 = 1 and the r = 0 row equal to [n == 1].
std::vector<Poly> convolved_rec_prefix(std::int64_t r, std::int64_t n);

/// Entry n of convolved_rec_prefix.
Poly convolved_rec(std::int64_t r, std::int64_t n);

/// Both sides of n F^(r)_{n+1} = r (h F^(r+1)_n + 2 F^(r+1)_{n-1}), n >= 1.
std::pair<Poly, Poly> theorem4_3_sides(std::int64_t r, std::int64_t n);
bool check_theorem4_3(std::int64_t r, std::int64_t n);

/// The decomposition of F^(r)_{h,j+1} into plain Lucas and Fibonacci
/// polynomials, with both sides multiplied by (h^2+4)^(r-1):
///   lhs = F^(r)_{h,j+1} (h^2+4)^(r-1)
///   rhs = sum_{l<r, r+l even} C(r+l-1,l) C(r-l+j-1,j) (h^2+4)^(r-1-(r+l)/2)   L_{h,r+j-l}
///       + sum_{l<r, r+l odd}  C(r+l-1,l) C(r-l+j-1,j) (h^2+4)^(r-1-(r+l-1)/2) F_{h,r+j-l}
std::pair<Poly, Poly> theorem5_sides(std::int64_t r, std::int64_t j);

}  // namespace convfib
