#include "convfib/oracles.hpp"

#include <functional>
#include <stdexcept>

namespace convfib::oracle {

Poly cofactor_det(const DenseMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return Poly(1);
    if (n == 1) return m[0][0];
    Poly total;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        DenseMatrix minor(n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (j != c) minor[i - 1].push_back(m[i][j]);
        Poly term = m[0][c] * cofactor_det(minor);
        if (c % 2 == 0) total += term;
        else total -= term;
    }
    return total;
}

BigInt hessenberg_recurrence(const std::vector<std::vector<long>>& weights, const BigInt& a1) {
    const std::size_t n = weights.size();
    std::vector<BigInt> a{a1};
    for (std::size_t k = 0; k < n; ++k) {
        BigInt next = 0;
        for (std::size_t i = 0; i <= k; ++i) next += weights[i][k] * a[i];
        a.push_back(next);
    }
    return a.back();
}

std::vector<Poly> fib_table(std::size_t count) {
    std::vector<Poly> f;
    const Poly h = Poly::variable();
    for (std::size_t i = 0; i < count; ++i) {
        if (i == 0) f.emplace_back();
        else if (i == 1) f.emplace_back(1);
        else f.push_back(h * f[i - 1] + f[i - 2]);
    }
    return f;
}

Poly composition_sum(std::int64_t r, std::int64_t m) {
    if (r < 1 || m < 0) throw std::invalid_argument("composition_sum: need r >= 1, m >= 0");
    const auto f = fib_table(static_cast<std::size_t>(m) + 2);
    Poly total;
    std::vector<std::int64_t> parts(static_cast<std::size_t>(r));
    std::function<void(std::size_t, std::int64_t)> walk = [&](std::size_t slot, std::int64_t left) {
        if (slot + 1 == parts.size()) {
            parts[slot] = left;
            Poly prod(1);
            for (auto j : parts) prod *= f[static_cast<std::size_t>(j + 1)];
            total += prod;
            return;
        }
        for (std::int64_t j = 0; j <= left; ++j) {
            parts[slot] = j;
            walk(slot + 1, left - j);
        }
    };
    walk(0, m);
    return total;
}

std::vector<BigInt> integer_fibonacci(long k, std::size_t count) {
    std::vector<BigInt> x;
    for (std::size_t i = 0; i < count; ++i) {
        if (i == 0) x.emplace_back(0);
        else if (i == 1) x.emplace_back(1);
        else x.push_back(k * x[i - 1] + x[i - 2]);
    }
    return x;
}

std::vector<BigInt> self_convolution(const std::vector<BigInt>& a) {
    std::vector<BigInt> c(a.size());
    for (std::size_t m = 0; m < a.size(); ++m)
        for (std::size_t i = 0; i <= m; ++i) c[m] += a[i] * a[m - i];
    return c;
}

}  // namespace convfib::oracle
