#pragma once

#include <cstdint>

#include <gmpxx.h>

namespace convfib {

using BigInt = mpz_class;

/// Zero/one/zero-test for the coefficient rings used by Polynomial.
template <class T>
struct RingTraits;

template <>
struct RingTraits<BigInt> {
    static BigInt zero() { return BigInt(0); }
    static BigInt one() { return BigInt(1); }
    static bool is_zero(const BigInt& v) { return sgn(v) == 0; }
};

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

}  // namespace convfib
