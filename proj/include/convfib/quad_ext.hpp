#pragma once

#include <cstdint>

#include "convfib/polynomial.hpp"

namespace convfib {

/// Element a + b*s of Z[h][s] / (s^2 - (h^2 + 4)).
///
/// s stands for sqrt(h^2 + 4), so the characteristic roots of
/// v^2 = h*v + 1 are (h + s)/2 and (h - s)/2. Products are reduced on the
/// spot; no power of s above one is ever stored.
struct QuadExt {
    Poly a;
    Poly b;

    /// s^2 = h^2 + 4.
    static const Poly& discriminant();
    static QuadExt sqrt_disc() { return {Poly{}, Poly(1)}; }

    QuadExt& operator+=(const QuadExt& rhs) {
        a += rhs.a;
        b += rhs.b;
        return *this;
    }
    QuadExt& operator-=(const QuadExt& rhs) {
        a -= rhs.a;
        b -= rhs.b;
        return *this;
    }
    friend QuadExt operator+(QuadExt lhs, const QuadExt& rhs) { return lhs += rhs; }
    friend QuadExt operator-(QuadExt lhs, const QuadExt& rhs) { return lhs -= rhs; }
    friend QuadExt operator*(const QuadExt& u, const QuadExt& v);
    friend bool operator==(const QuadExt&, const QuadExt&) = default;
};

QuadExt pow(QuadExt base, std::uint64_t k);

}  // namespace convfib
