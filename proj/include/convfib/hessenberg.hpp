#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "convfib/polynomial.hpp"

namespace convfib {

/// Polynomial in t whose coefficients are polynomials in h.
using TPoly = Polynomial<Poly>;

class IndexOutOfRange : public std::out_of_range {
   public:
    using std::out_of_range::out_of_range;
};

/// Square upper-Hessenberg matrix over a commutative ring: entry (i, j) is
/// zero whenever i > j + 1 (0-based here). The shape is checked on
/// construction and cannot be broken afterwards.
template <class Ring>
class HessMatrix {
   public:
    /// Row-major entries, n*n of them.
    HessMatrix(std::size_t n, std::vector<Ring> entries) : n_(n), entries_(std::move(entries)) {
        if (entries_.size() != n_ * n_) throw std::invalid_argument("HessMatrix: expected n*n entries");
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j + 1 < i; ++j)
                if (!RingTraits<Ring>::is_zero(entries_[i * n_ + j]))
                    throw std::invalid_argument("HessMatrix: nonzero entry below the subdiagonal at (" +
                                                std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
    }

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] const Ring& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    /// The principal submatrix keeping the listed rows/columns, in order.
    /// Keeping an increasing subset preserves the Hessenberg shape.
    [[nodiscard]] HessMatrix principal_submatrix(const std::vector<std::size_t>& keep) const {
        std::vector<Ring> sub;
        sub.reserve(keep.size() * keep.size());
        for (std::size_t i : keep)
            for (std::size_t j : keep) sub.push_back((*this)(i, j));
        return HessMatrix(keep.size(), std::move(sub));
    }

   private:
    std::size_t n_;
    std::vector<Ring> entries_;
};

/// Determinant by expansion along the last column of each leading block:
///   D_0 = 1,
///   D_k = sum_{i=1..k} (-1)^(k-i) a_{i,k} (a_{i+1,i} ... a_{k,k-1}) D_{i-1}.
/// O(n^2) ring multiplications. The empty matrix has determinant 1.
template <class Ring>
Ring hess_det(const HessMatrix<Ring>& a) {
    using Traits = RingTraits<Ring>;
    const std::size_t n = a.size();
    std::vector<Ring> minors;
    minors.reserve(n + 1);
    minors.push_back(Traits::one());
    for (std::size_t k = 1; k <= n; ++k) {
        Ring acc = Traits::zero();
        Ring chain = Traits::one();  // product of subdiagonal entries rows i+1..k, with sign
        for (std::size_t i = k; i >= 1; --i) {
            if (i < k) {
                // extend the chain by a_{i+1,i} and flip the sign
                chain = chain * a(i, i - 1);
                chain = -chain;
                if (Traits::is_zero(chain)) break;
            }
            const Ring& entry = a(i - 1, k - 1);
            if (!Traits::is_zero(entry) && !Traits::is_zero(minors[i - 1])) acc += entry * chain * minors[i - 1];
        }
        minors.push_back(std::move(acc));
    }
    return minors.back();
}

/// The n x n tridiagonal matrix with h on the diagonal, 1 above and -1 below.
HessMatrix<Poly> build_fib_matrix(std::int64_t n);

/// Determinant of build_fib_matrix(n) with the rows and columns in `deleted`
/// (1-based, strictly increasing) removed.
Poly principal_minor(std::int64_t n, const std::vector<std::int64_t>& deleted);

/// Product form F_{h,i1} F_{h,i2-i1} ... F_{h,n-il+1} of the same minor.
Poly principal_minor_product(std::int64_t n, const std::vector<std::int64_t>& deleted);

/// Sum of all principal minors of order n - l of build_fib_matrix(n), by
/// enumerating every size-l deletion set. 0 <= l <= n-1.
Poly sum_principal_minors(std::int64_t n, std::int64_t l);

/// det(t I - build_fib_matrix(n)), monic of degree n.
TPoly char_poly(std::int64_t n);

/// sum_{i=0}^{floor((n-l)/2)} C(n-i, i) C(n-2i, l) h^(n-2i-l), 0 <= l <= n.
Poly corollary9(std::int64_t n, std::int64_t l);

/// (char_poly(n), sum_i C(n-i, i) (t-h)^(n-2i)).
std::pair<TPoly, TPoly> classical_fib_shift_identity(std::int64_t n);

}  // namespace convfib
