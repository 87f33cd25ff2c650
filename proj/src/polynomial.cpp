#include "convfib/polynomial.hpp"

namespace convfib {

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw std::invalid_argument("binomial: negative upper index");
    if (k < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Poly compose(const Poly& p, const Poly& q) {
    auto c = p.coefficients();
    Poly acc;
    for (std::size_t i = c.size(); i-- > 0;) {
        acc *= q;
        acc += Poly(c[i]);
    }
    return acc;
}

BigInt evaluate(const Poly& p, const BigInt& x) {
    auto c = p.coefficients();
    BigInt acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        acc *= x;
        acc += c[i];
    }
    return acc;
}

Poly derivative(const Poly& p) {
    auto c = p.coefficients();
    if (c.size() <= 1) return {};
    std::vector<BigInt> out(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * static_cast<unsigned long>(i);
    return Poly(std::move(out));
}

Poly exact_div(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw std::domain_error("exact_div: division by the zero polynomial");
    if (p.is_zero()) return {};
    const std::size_t dp = *p.degree();
    const std::size_t dq = *q.degree();
    if (dp < dq) throw NotDivisible("exact_div: divisor degree exceeds dividend degree");

    auto qc = q.coefficients();
    const BigInt& lead = qc.back();
    std::vector<BigInt> rem(p.coefficients().begin(), p.coefficients().end());
    std::vector<BigInt> quot(dp - dq + 1);

    for (std::size_t k = dp - dq + 1; k-- > 0;) {
        BigInt& top = rem[k + dq];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw NotDivisible("exact_div: inexact coefficient division");
        mpz_divexact(quot[k].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        for (std::size_t i = 0; i <= dq; ++i) mpz_submul(rem[k + i].get_mpz_t(), quot[k].get_mpz_t(), qc[i].get_mpz_t());
    }
    for (std::size_t i = 0; i < dq; ++i)
        if (sgn(rem[i]) != 0) throw NotDivisible("exact_div: nonzero remainder");
    return Poly(std::move(quot));
}

}  // namespace convfib
