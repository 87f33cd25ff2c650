#include <doctest.h>

#include <random>

#include "convfib/hessenberg.hpp"
#include "convfib/oracles.hpp"
#include "convfib/sequences.hpp"

using namespace convfib;

namespace {

const Poly h = Poly::variable();
const TPoly t = TPoly::variable();
const TPoly t_minus_h(std::vector<Poly>{-h, Poly(1)});

oracle::DenseMatrix dense(const HessMatrix<Poly>& m) {
    oracle::DenseMatrix d(m.size(), std::vector<Poly>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) d[i][j] = m(i, j);
    return d;
}

}  // namespace

TEST_CASE("build_fib_matrix") {
    const auto m1 = build_fib_matrix(1);
    CHECK(m1.size() == 1);
    CHECK(m1(0, 0) == h);

    const auto m2 = build_fib_matrix(2);
    CHECK(m2(0, 0) == h);
    CHECK(m2(0, 1) == Poly(1));
    CHECK(m2(1, 0) == Poly(-1));
    CHECK(m2(1, 1) == h);

    const auto m3 = build_fib_matrix(3);
    CHECK(m3(0, 2).is_zero());
    CHECK(m3(2, 0).is_zero());
    CHECK(m3(2, 1) == Poly(-1));
    CHECK(m3(1, 2) == Poly(1));
}

TEST_CASE("HessMatrix rejects entries below the subdiagonal") {
    std::vector<Poly> e(9);
    e[2 * 3 + 0] = Poly(1);
    CHECK_THROWS_AS(HessMatrix<Poly>(3, e), std::invalid_argument);
    CHECK_THROWS_AS(HessMatrix<Poly>(3, std::vector<Poly>(8)), std::invalid_argument);
}

TEST_CASE("hess_det") {
    CHECK(hess_det(build_fib_matrix(2)) == Poly::from({1, 0, 1}));
    CHECK(hess_det(build_fib_matrix(1)) == h);
    for (std::int64_t n = 1; n <= 40; ++n) REQUIRE(hess_det(build_fib_matrix(n)) == fib(n + 1));
    CHECK(hess_det(HessMatrix<Poly>(0, {})) == Poly(1));
}

TEST_CASE("hess_det matches cofactor expansion") {
    for (std::int64_t n = 1; n <= 5; ++n) {
        const auto m = build_fib_matrix(n);
        REQUIRE(hess_det(m) == oracle::cofactor_det(dense(m)));
    }
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> c(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + trial % 5;
        std::vector<Poly> e(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i <= j + 1) e[i * n + j] = Poly::from({c(rng), c(rng), c(rng)});
        const HessMatrix<Poly> m(n, std::move(e));
        REQUIRE(hess_det(m) == oracle::cofactor_det(dense(m)));
    }
}

TEST_CASE("Theorem 6 against the weighted recurrence") {
    std::mt19937_64 rng(2013);
    std::uniform_int_distribution<long> c(-2, 2);
    auto instance = [&](std::size_t n, const BigInt& a1) {
        std::vector<std::vector<long>> w(n, std::vector<long>(n, 0));
        std::vector<BigInt> e(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) e[i * n + j] = w[i][j] = c(rng);
        for (std::size_t i = 0; i + 1 < n; ++i) e[(i + 1) * n + i] = -1;
        return std::pair{BigInt(a1 * hess_det(HessMatrix<BigInt>(n, std::move(e)))), oracle::hessenberg_recurrence(w, a1)};
    };
    {
        auto [det, a5] = instance(4, 1);
        CHECK(det == a5);
    }
    for (int trial = 0; trial < 200; ++trial) {
        auto [det, a] = instance(1 + trial % 6, 1);
        REQUIRE(det == a);
    }
    auto [det3, a3] = instance(5, 3);
    CHECK(det3 == a3);
}

TEST_CASE("principal_minor") {
    CHECK(principal_minor(4, {2}) == Poly::from({0, 1, 0, 1}));
    CHECK(principal_minor(3, {1}) == Poly::from({1, 0, 1}));
    CHECK(principal_minor(3, {1, 2, 3}) == Poly(1));
    CHECK(principal_minor(3, {}) == fib(4));
    CHECK_THROWS_AS(principal_minor(3, {4}), IndexOutOfRange);
    CHECK_THROWS_AS(principal_minor(3, {0}), IndexOutOfRange);
    CHECK_THROWS_AS(principal_minor(3, {2, 2}), IndexOutOfRange);
    CHECK_THROWS_AS(principal_minor(3, {3, 1}), IndexOutOfRange);
}

TEST_CASE("principal minors factor into Fibonacci products") {
    for (std::int64_t n = 1; n <= 8; ++n)
        for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
            std::vector<std::int64_t> del;
            for (std::int64_t i = 0; i < n; ++i)
                if (mask & (1U << i)) del.push_back(i + 1);
            REQUIRE(principal_minor(n, del) == principal_minor_product(n, del));
        }
}

TEST_CASE("sum_principal_minors") {
    CHECK(sum_principal_minors(3, 1) == Poly::from({2, 0, 3}));
    CHECK(sum_principal_minors(2, 0) == Poly::from({1, 0, 1}));
    CHECK(sum_principal_minors(4, 3) == Poly::from({0, 4}));
    for (std::int64_t n = 1; n <= 9; ++n)
        for (std::int64_t l = 0; l < n; ++l) REQUIRE(sum_principal_minors(n, l) == convolved_gould(l + 1, n - l));
    CHECK_THROWS_AS(sum_principal_minors(3, 3), std::invalid_argument);
}

TEST_CASE("char_poly") {
    CHECK(char_poly(1) == t_minus_h);
    const TPoly p2 = char_poly(2);
    CHECK(p2 == TPoly(std::vector<Poly>{Poly::from({1, 0, 1}), Poly::from({0, -2}), Poly(1)}));
    // |t^0| = F^(1)_3, |t^1| = F^(2)_2, t^2 = F^(3)_1
    CHECK(p2.coefficient(0) == convolved(1, 3));
    CHECK(-p2.coefficient(1) == convolved(2, 2));
    CHECK(p2.coefficient(2) == convolved(3, 1));

    for (std::int64_t n = 1; n <= 10; ++n) {
        const TPoly p = char_poly(n);
        REQUIRE(p.degree() == std::optional<std::size_t>(static_cast<std::size_t>(n)));
        REQUIRE(p.leading() == Poly(1));
        for (std::int64_t l = 0; l <= n; ++l) {
            const Poly expected = (n - l) % 2 == 0 ? convolved(l + 1, n - l + 1) : -convolved(l + 1, n - l + 1);
            REQUIRE(p.coefficient(static_cast<std::size_t>(l)) == expected);
        }
    }
}

TEST_CASE("corollary9") {
    CHECK(corollary9(2, 1) == Poly::from({0, 2}));
    CHECK(corollary9(5, 0) == Poly::from({0, 3, 0, 4, 0, 1}));
    CHECK(corollary9(4, 2) == Poly::from({3, 0, 6}));
    for (std::int64_t n = 0; n <= 20; ++n)
        for (std::int64_t l = 0; l <= n; ++l) REQUIRE(corollary9(n, l) == convolved_gould(l + 1, n - l));
    CHECK_THROWS_AS(corollary9(2, 3), std::invalid_argument);
}

TEST_CASE("classical_fib_shift_identity") {
    {
        auto [p, q] = classical_fib_shift_identity(1);
        CHECK(p == t_minus_h);
        CHECK(q == t_minus_h);
    }
    {
        auto [p, q] = classical_fib_shift_identity(2);
        const TPoly expected = t_minus_h * t_minus_h + TPoly(1);
        CHECK(p == expected);
        CHECK(q == expected);
    }
    {
        auto [p, q] = classical_fib_shift_identity(3);
        const TPoly expected = pow(t_minus_h, 3) + TPoly(2) * t_minus_h;
        CHECK(p == expected);
        CHECK(q == expected);
    }
    for (std::int64_t n = 1; n <= 12; ++n) {
        auto [p, q] = classical_fib_shift_identity(n);
        REQUIRE(p == q);
    }
    CHECK(t * t == TPoly::monomial(Poly(1), 2));
}
