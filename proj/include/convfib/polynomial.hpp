#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "convfib/bigint.hpp"

namespace convfib {

/// Dense univariate polynomial over a commutative ring `Coeff`.
///
/// Coefficients are stored low-to-high and kept normalized: the top stored
/// coefficient is nonzero, and the zero polynomial stores nothing. The zero
/// polynomial has no degree (`degree()` returns `std::nullopt`).
template <class Coeff>
class Polynomial {
    using Traits = RingTraits<Coeff>;

   public:
    using coefficient_type = Coeff;

    Polynomial() = default;
    Polynomial(Coeff constant) {
        if (!Traits::is_zero(constant)) coeffs_.push_back(std::move(constant));
    }
    template <std::integral I>
    Polynomial(I constant) : Polynomial(Coeff(static_cast<long>(constant))) {}

    explicit Polynomial(std::vector<Coeff> low_to_high) : coeffs_(std::move(low_to_high)) { normalize(); }

    /// Small-integer literal helper, low degree first: from({1, 0, 1}) is h^2 + 1.
    static Polynomial from(std::initializer_list<long> low_to_high) {
        std::vector<Coeff> c;
        c.reserve(low_to_high.size());
        for (long v : low_to_high) c.emplace_back(v);
        return Polynomial(std::move(c));
    }

    static Polynomial monomial(Coeff c, std::size_t degree) {
        if (Traits::is_zero(c)) return {};
        std::vector<Coeff> v(degree + 1, Traits::zero());
        v.back() = std::move(c);
        Polynomial p;
        p.coeffs_ = std::move(v);
        return p;
    }

    /// The indeterminate itself.
    static Polynomial variable() { return monomial(Traits::one(), 1); }

    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    [[nodiscard]] std::optional<std::size_t> degree() const noexcept {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }
    /// Number of stored coefficients (degree + 1, or 0 for the zero polynomial).
    [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }
    [[nodiscard]] std::span<const Coeff> coefficients() const noexcept { return coeffs_; }

    [[nodiscard]] Coeff coefficient(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Traits::zero();
    }
    [[nodiscard]] const Coeff& leading() const {
        if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
        return coeffs_.back();
    }

    Polynomial& operator+=(const Polynomial& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Traits::zero());
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        normalize();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Traits::zero());
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
        normalize();
        return *this;
    }
    Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

    /// Multiply every coefficient by a ring element.
    Polynomial& scale(const Coeff& c) {
        for (auto& v : coeffs_) v *= c;
        normalize();
        return *this;
    }

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator-(Polynomial p) {
        for (auto& v : p.coeffs_) v = -v;
        return p;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, Traits::zero());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            const Coeff& ai = a.coeffs_[i];
            if (Traits::is_zero(ai)) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                const Coeff& bj = b.coeffs_[j];
                if (Traits::is_zero(bj)) continue;
                if constexpr (std::is_same_v<Coeff, BigInt>) {
                    mpz_addmul(out[i + j].get_mpz_t(), ai.get_mpz_t(), bj.get_mpz_t());
                } else {
                    out[i + j] += ai * bj;
                }
            }
        }
        return Polynomial(std::move(out));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

   private:
    void normalize() {
        while (!coeffs_.empty() && Traits::is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<Coeff> coeffs_;
};

template <class C>
struct RingTraits<Polynomial<C>> {
    static Polynomial<C> zero() { return {}; }
    static Polynomial<C> one() { return Polynomial<C>(RingTraits<C>::one()); }
    static bool is_zero(const Polynomial<C>& p) { return p.is_zero(); }
};

/// p^k by repeated squaring; p^0 = 1 for every p, including 0.
template <class C>
Polynomial<C> pow(Polynomial<C> base, std::uint64_t k) {
    Polynomial<C> result = RingTraits<Polynomial<C>>::one();
    while (k > 0) {
        if (k & 1U) result *= base;
        k >>= 1U;
        if (k > 0) base *= base;
    }
    return result;
}

/// Polynomial in the formal symbol h with arbitrary-precision integer coefficients.
using Poly = Polynomial<BigInt>;

class NotDivisible : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// p(q): substitute h -> q (Horner over the polynomial ring).
Poly compose(const Poly& p, const Poly& q);

/// p(x) for an integer x.
BigInt evaluate(const Poly& p, const BigInt& x);

/// Formal derivative d/dh.
Poly derivative(const Poly& p);

/// The exact quotient d with p = q * d. Throws NotDivisible if q does not
/// divide p over the integers, std::domain_error if q is zero.
Poly exact_div(const Poly& p, const Poly& q);

}  // namespace convfib
