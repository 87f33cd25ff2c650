#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "convfib/polynomial.hpp"

namespace convfib {

class OrderMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class NotInvertible : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Power series in t with Poly coefficients, truncated at a fixed order N:
/// exactly the coefficients of t^0 .. t^(N-1) are stored, zeros included.
/// Binary arithmetic requires equal orders.
class Series {
   public:
    explicit Series(std::size_t order);
    /// Takes the first `order` entries of `coeffs`, padding with zeros.
    Series(std::size_t order, std::vector<Poly> coeffs);

    static Series unit(std::size_t order) { return Series(order, {Poly(1)}); }

    [[nodiscard]] std::size_t order() const noexcept { return coeffs_.size(); }
    [[nodiscard]] const Poly& operator[](std::size_t i) const { return coeffs_.at(i); }
    [[nodiscard]] const std::vector<Poly>& coefficients() const noexcept { return coeffs_; }

    Series& operator+=(const Series& rhs);
    Series& operator-=(const Series& rhs);
    friend Series operator+(Series lhs, const Series& rhs) { return lhs += rhs; }
    friend Series operator-(Series lhs, const Series& rhs) { return lhs -= rhs; }
    friend Series operator*(const Series& a, const Series& b);
    friend bool operator==(const Series&, const Series&) = default;

   private:
    std::vector<Poly> coeffs_;
};

/// Multiplicative inverse; the constant term must be 1 or -1.
Series inverse(const Series& a);

/// a^k; negative k goes through inverse().
Series pow(const Series& a, std::int64_t k);

/// Term-wise d/dt at the same order: coefficient j is (j+1)*a[j+1], and the
/// top coefficient is zero because a[order] is not known.
Series derivative(const Series& a);

/// The series 1 - h*t - t^2 at the given order.
Series fibonacci_denominator(std::size_t order);

/// [F^(r)_{h,1}, ..., F^(r)_{h,n_terms}] read off (1 - h*t - t^2)^(-r).
std::vector<Poly> gf_convolved(std::int64_t r, std::size_t n_terms);

}  // namespace convfib
