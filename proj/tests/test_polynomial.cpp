#include <doctest.h>

#include <random>

#include "convfib/polynomial.hpp"

using namespace convfib;

namespace {

const Poly h = Poly::variable();

Poly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> deg(0, 12);
    std::uniform_int_distribution<long> coeff(-1'000'000, 1'000'000);
    std::vector<BigInt> c(deg(rng) + 1);
    for (auto& v : c) v = coeff(rng);
    return Poly(std::move(c));
}

bool normalized(const Poly& p) { return p.is_zero() || sgn(p.leading()) != 0; }

}  // namespace

TEST_CASE("poly_add") {
    CHECK(Poly::from({1, 0, 1}) + Poly::from({0, 2}) == Poly::from({1, 2, 1}));
    CHECK(Poly::from({3, 1}) + Poly{} == Poly::from({3, 1}));
    const Poly cancelled = h + (-h);
    CHECK(cancelled.is_zero());
    CHECK(cancelled.coefficients().empty());
    CHECK_FALSE(cancelled.degree().has_value());
}

TEST_CASE("poly_mul") {
    CHECK(h * Poly::from({1, 0, 1}) == Poly::from({0, 1, 0, 1}));
    CHECK(Poly::from({1, 1}) * Poly::from({-1, 1}) == Poly::from({-1, 0, 1}));
    // F_2 * F_3, the minor of F_4 with row/column 2 deleted
    CHECK(h * Poly::from({1, 0, 1}) == Poly::from({0, 1, 0, 1}));
    const Poly p = Poly::from({1, 2, 3});
    const Poly q = Poly::from({-4, 0, 0, 5});
    CHECK((p * q).degree() == std::optional<std::size_t>(5));
    CHECK((p * Poly{}).is_zero());
}

TEST_CASE("poly_pow") {
    const Poly disc = Poly::from({4, 0, 1});
    CHECK(pow(disc, 1) == disc);
    CHECK(pow(disc, 2) == Poly::from({16, 0, 8, 0, 1}));
    CHECK(pow(Poly{}, 0) == Poly(1));
    CHECK(pow(Poly{}, 3).is_zero());
}

TEST_CASE("poly_compose") {
    CHECK(compose(Poly::from({1, 0, 1}), Poly(1)) == Poly(2));
    // F_{h,4} at h = 2 is the Pell number 12
    CHECK(compose(Poly::from({0, 2, 0, 1}), Poly(2)) == Poly(12));
    CHECK(compose(h, Poly::from({3, 0, 1})) == Poly::from({3, 0, 1}));
    CHECK(compose(Poly{}, h).is_zero());
}

TEST_CASE("poly_eval_int") {
    CHECK(evaluate(Poly::from({1, 0, 3, 0, 1}), 1) == 5);
    CHECK(evaluate(Poly::from({7, 4, 2}), 0) == 7);
    CHECK(evaluate(Poly::from({0, 2}), 3) == 6);
    CHECK(evaluate(Poly{}, 9) == 0);
}

TEST_CASE("poly_derivative") {
    CHECK(derivative(Poly::from({0, 2, 0, 1})) == Poly::from({2, 0, 3}));
    CHECK(derivative(Poly(7)).is_zero());
    CHECK(derivative(Poly::from({4, 0, 1})) == Poly::from({0, 2}));
}

TEST_CASE("poly_exact_div") {
    CHECK(exact_div(Poly::from({0, 1, 0, 1}), Poly::from({1, 0, 1})) == h);
    CHECK(exact_div(Poly::from({4, 0, 1}), Poly::from({4, 0, 1})) == Poly(1));
    CHECK_THROWS_AS(exact_div(Poly::from({1, 0, 1}), h), NotDivisible);
    CHECK_THROWS_AS(exact_div(Poly::from({1, 1}), Poly(2)), NotDivisible);
    CHECK_THROWS_AS(exact_div(h, Poly::from({1, 0, 1})), NotDivisible);
    CHECK_THROWS_AS(exact_div(h, Poly{}), std::domain_error);
    CHECK(exact_div(Poly{}, h).is_zero());
}

TEST_CASE("binom_big") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(100, 50) == BigInt("100891344545564193334812497256"));
    for (std::int64_t n = 1; n <= 60; ++n)
        for (std::int64_t k = 0; k <= n; ++k) REQUIRE(binomial(n, k) == binomial(n - 1, k) + binomial(n - 1, k - 1));
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(20131020);
    for (int i = 0; i < 1000; ++i) {
        const Poly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        REQUIRE((p + q) + r == p + (q + r));
        REQUIRE(p + q == q + p);
        REQUIRE((p * q) * r == p * (q * r));
        REQUIRE(p * q == q * p);
        REQUIRE(p * (q + r) == p * q + p * r);
        REQUIRE(p + Poly{} == p);
        REQUIRE(p * Poly(1) == p);
        REQUIRE(normalized(p - q));
        REQUIRE(normalized(p * q));
        if (!q.is_zero()) REQUIRE(exact_div(p * q, q) == p);
        REQUIRE(compose(p, h) == p);
    }
}

TEST_CASE("coefficients never overflow") {
    const Poly big = pow(Poly::from({1, 1}), 200);
    CHECK(big.coefficient(100) == binomial(200, 100));
    CHECK(big.coefficient(100).get_str().size() > 20);
}
