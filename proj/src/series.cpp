#include "convfib/series.hpp"

#include <string>

namespace convfib {

namespace {

void require_same_order(const Series& a, const Series& b) {
    if (a.order() != b.order())
        throw OrderMismatch("series orders differ: " + std::to_string(a.order()) + " vs " + std::to_string(b.order()));
}

}  // namespace

Series::Series(std::size_t order) : coeffs_(order) {
    if (order == 0) throw std::invalid_argument("series order must be positive");
}

Series::Series(std::size_t order, std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) {
    if (order == 0) throw std::invalid_argument("series order must be positive");
    coeffs_.resize(order);
}

Series& Series::operator+=(const Series& rhs) {
    require_same_order(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

Series& Series::operator-=(const Series& rhs) {
    require_same_order(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    require_same_order(a, b);
    const std::size_t n = a.order();
    Series out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

Series inverse(const Series& a) {
    const Poly& a0 = a[0];
    int unit = 0;
    if (a0 == Poly(1)) unit = 1;
    else if (a0 == Poly(-1)) unit = -1;
    else throw NotInvertible("series constant term is not a unit of Z[h]");

    const std::size_t n = a.order();
    std::vector<Poly> b(n);
    b[0] = Poly(unit);
    for (std::size_t m = 1; m < n; ++m) {
        Poly acc;
        for (std::size_t k = 1; k <= m; ++k) {
            if (a[k].is_zero() || b[m - k].is_zero()) continue;
            acc += a[k] * b[m - k];
        }
        // b_m = -a0^{-1} * acc, and a0^{-1} = a0 for a0 = +-1
        b[m] = unit == 1 ? -acc : acc;
    }
    return Series(n, std::move(b));
}

Series pow(const Series& a, std::int64_t k) {
    Series base = k < 0 ? inverse(a) : a;
    auto e = static_cast<std::uint64_t>(k < 0 ? -k : k);
    Series result = Series::unit(a.order());
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

Series derivative(const Series& a) {
    const std::size_t n = a.order();
    std::vector<Poly> out(n);
    for (std::size_t j = 0; j + 1 < n; ++j) out[j] = a[j + 1] * Poly(static_cast<long>(j + 1));
    return Series(n, std::move(out));
}

Series fibonacci_denominator(std::size_t order) {
    return Series(order, {Poly(1), Poly::from({0, -1}), Poly(-1)});
}

std::vector<Poly> gf_convolved(std::int64_t r, std::size_t n_terms) {
    if (r < 1) throw std::invalid_argument("gf_convolved: r must be >= 1");
    if (n_terms < 1) throw std::invalid_argument("gf_convolved: n_terms must be >= 1");
    return pow(fibonacci_denominator(n_terms), -r).coefficients();
}

}  // namespace convfib
