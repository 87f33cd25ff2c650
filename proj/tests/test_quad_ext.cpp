#include <doctest.h>

#include <random>

#include "convfib/quad_ext.hpp"

using namespace convfib;

namespace {
const Poly h = Poly::variable();
}

TEST_CASE("quad_mul") {
    const QuadExt s = QuadExt::sqrt_disc();
    CHECK(s * s == QuadExt{Poly::from({4, 0, 1}), Poly{}});

    // (h+s)(h-s) = -4, i.e. 4 r1 r2 = -4
    const QuadExt two_r1{h, Poly(1)};
    const QuadExt two_r2{h, Poly(-1)};
    CHECK(two_r1 * two_r2 == QuadExt{Poly(-4), Poly{}});
    // and their sum is 2h = 2 (r1 + r2)
    CHECK(two_r1 + two_r2 == QuadExt{Poly::from({0, 2}), Poly{}});

    // (h+s)^2 = h^2 + 2hs + h^2 + 4
    CHECK(two_r1 * two_r1 == QuadExt{Poly::from({4, 0, 2}), Poly::from({0, 2})});
}

TEST_CASE("quad_pow") {
    const QuadExt u{h, Poly(1)};
    CHECK(pow(u, 0) == QuadExt{Poly(1), Poly{}});
    CHECK(pow(u, 1) == u);
    CHECK(pow(u, 2) == u * u);

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> c(-5, 5);
    std::uniform_int_distribution<int> e(0, 6);
    for (int i = 0; i < 200; ++i) {
        const QuadExt v{Poly::from({c(rng), c(rng), c(rng)}), Poly::from({c(rng), c(rng)})};
        const int a = e(rng), b = e(rng);
        REQUIRE(pow(v, a + b) == pow(v, a) * pow(v, b));
        REQUIRE(v * u == u * v);
    }
}
