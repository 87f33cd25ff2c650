#include "convfib/sequences.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace convfib {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

/// Grow-only table for a sequence obeying x_{n+1} = h x_n + x_{n-1}.
class RecurrenceMemo {
   public:
    RecurrenceMemo(Poly x0, Poly x1) : values_{std::move(x0), std::move(x1)} {}

    Poly get(std::size_t n) {
        std::lock_guard lock(mutex_);
        const Poly h = Poly::variable();
        while (values_.size() <= n) {
            const std::size_t k = values_.size();
            values_.push_back(h * values_[k - 1] + values_[k - 2]);
        }
        return values_[n];
    }

   private:
    std::mutex mutex_;
    std::vector<Poly> values_;
};

RecurrenceMemo& fib_memo() {
    static RecurrenceMemo memo(Poly{}, Poly(1));
    return memo;
}

RecurrenceMemo& lucas_memo() {
    static RecurrenceMemo memo(Poly(2), Poly::variable());
    return memo;
}

}  // namespace

Poly fib(std::int64_t n) {
    require(n >= 0, "fib: n must be >= 0");
    return fib_memo().get(static_cast<std::size_t>(n));
}

Poly lucas(std::int64_t n) {
    require(n >= 0, "lucas: n must be >= 0");
    return lucas_memo().get(static_cast<std::size_t>(n));
}

Poly fib_combinatorial(std::int64_t n) {
    require(n >= 1, "fib_combinatorial: n must be >= 1");
    std::vector<BigInt> c(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i <= (n - 1) / 2; ++i) c[static_cast<std::size_t>(n - 1 - 2 * i)] = binomial(n - 1 - i, i);
    return Poly(std::move(c));
}

std::pair<QuadExt, QuadExt> binet_scaled(std::int64_t n) {
    require(n >= 0, "binet_scaled: n must be >= 0");
    const Poly h = Poly::variable();
    const QuadExt plus = pow(QuadExt{h, Poly(1)}, static_cast<std::uint64_t>(n));
    const QuadExt minus = pow(QuadExt{h, Poly(-1)}, static_cast<std::uint64_t>(n));
    return {plus - minus, plus + minus};
}

Poly convolved_gould(std::int64_t r, std::int64_t j) {
    require(r >= 1, "convolved_gould: r must be >= 1");
    require(j >= 0, "convolved_gould: j must be >= 0");
    std::vector<BigInt> c(static_cast<std::size_t>(j + 1));
    for (std::int64_t l = 0; l <= j / 2; ++l)
        c[static_cast<std::size_t>(j - 2 * l)] = binomial(j + r - l - 1, j - l) * binomial(j - l, l);
    return Poly(std::move(c));
}

Poly convolved(std::int64_t r, std::int64_t n) {
    require(n >= 0, "convolved: n must be >= 0");
    return n == 0 ? Poly{} : convolved_gould(r, n - 1);
}

std::vector<Poly> convolved_conv_prefix(std::int64_t r, std::int64_t m) {
    require(r >= 1, "convolved_conv: r must be >= 1");
    require(m >= 0, "convolved_conv: m must be >= 0");
    const auto len = static_cast<std::size_t>(m + 1);

    std::vector<Poly> base(len);
    for (std::size_t i = 0; i < len; ++i) base[i] = fib(static_cast<std::int64_t>(i) + 1);

    std::vector<Poly> acc = base;
    for (std::int64_t step = 1; step < r; ++step) {
        std::vector<Poly> next(len);
        for (std::size_t k = 0; k < len; ++k)
            for (std::size_t i = 0; i <= k; ++i) next[k] += acc[i] * base[k - i];
        acc = std::move(next);
    }
    return acc;
}

Poly convolved_conv(std::int64_t r, std::int64_t m) { return convolved_conv_prefix(r, m).back(); }

std::vector<Poly> convolved_rec_prefix(std::int64_t r, std::int64_t n) {
    require(r >= 1, "convolved_rec: r must be >= 1");
    require(n >= 0, "convolved_rec: n must be >= 0");
    const auto len = static_cast<std::size_t>(n + 1);
    const Poly h = Poly::variable();

    std::vector<Poly> prev(len);  // r = 0: the convolution unit
    if (len > 1) prev[1] = Poly(1);

    for (std::int64_t q = 1; q <= r; ++q) {
        std::vector<Poly> row(len);
        if (len > 1) row[1] = Poly(1);
        for (std::size_t k = 2; k < len; ++k) row[k] = prev[k] + h * row[k - 1] + row[k - 2];
        prev = std::move(row);
    }
    return prev;
}

Poly convolved_rec(std::int64_t r, std::int64_t n) { return convolved_rec_prefix(r, n).back(); }

std::pair<Poly, Poly> theorem4_3_sides(std::int64_t r, std::int64_t n) {
    require(r >= 1, "theorem4_3: r must be >= 1");
    require(n >= 1, "theorem4_3: n must be >= 1");
    const Poly h = Poly::variable();
    Poly lhs = Poly(static_cast<long>(n)) * convolved(r, n + 1);
    Poly rhs = Poly(static_cast<long>(r)) * (h * convolved(r + 1, n) + Poly(2) * convolved(r + 1, n - 1));
    return {std::move(lhs), std::move(rhs)};
}

bool check_theorem4_3(std::int64_t r, std::int64_t n) {
    auto [lhs, rhs] = theorem4_3_sides(r, n);
    return lhs == rhs;
}

std::pair<Poly, Poly> theorem5_sides(std::int64_t r, std::int64_t j) {
    require(r >= 1, "theorem5: r must be >= 1");
    require(j >= 0, "theorem5: j must be >= 0");
    const Poly& disc = QuadExt::discriminant();

    Poly lhs = convolved_gould(r, j) * pow(disc, static_cast<std::uint64_t>(r - 1));
    Poly rhs;
    for (std::int64_t l = 0; l <= r - 1; ++l) {
        const BigInt weight = binomial(r + l - 1, l) * binomial(r - l + j - 1, j);
        const std::int64_t index = r + j - l;
        const bool even = (r + l) % 2 == 0;
        // cleared exponent: r-1 minus the denominator exponent
        const std::int64_t exponent = r - 1 - (even ? (r + l) / 2 : (r + l - 1) / 2);
        if (exponent < 0) throw std::logic_error("theorem5: negative cleared exponent");
        Poly term = even ? lucas(index) : fib(index);
        term.scale(weight);
        rhs += term * pow(disc, static_cast<std::uint64_t>(exponent));
    }
    return {std::move(lhs), std::move(rhs)};
}

}  // namespace convfib
