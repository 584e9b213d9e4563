#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sppc/rng.hpp"

using namespace sppc;

TEST_CASE("inverse normal cdf hits known quantiles") {
    CHECK(rng::inverse_normal_cdf(0.5) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(rng::inverse_normal_cdf(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-12));
    CHECK(rng::inverse_normal_cdf(0.84134474606854293) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rng::inverse_normal_cdf(0.025) == doctest::Approx(-1.959963984540054).epsilon(1e-12));
}

TEST_CASE("inverse normal cdf round-trips through the normal cdf") {
    const double us[] = {1e-300, 1e-30, 1e-12, 1e-6, 0.01, 0.3,  0.5,
                         0.7,    0.99,  1.0 - 1e-6, 1.0 - 1e-12};
    for (double u : us) {
        const double x = rng::inverse_normal_cdf(u);
        const double back = rng::normal_cdf(x);
        CHECK(std::abs(back - u) <= 1e-12 * std::max(1.0, std::abs(u)) + 1e-15);
    }
    CHECK_THROWS_AS(rng::inverse_normal_cdf(0.0), NumericalError);
    CHECK_THROWS_AS(rng::inverse_normal_cdf(1.0), NumericalError);
}

TEST_CASE("counter draws are deterministic and keyed") {
    const auto a = rng::uniform_pair(42, 0, 7, 3);
    const auto b = rng::uniform_pair(42, 0, 7, 3);
    CHECK(a == b);
    CHECK(rng::uniform_pair(42, 0, 7, 4) != a);
    CHECK(rng::uniform_pair(42, 0, 8, 3) != a);
    CHECK(rng::uniform_pair(42, 1, 7, 3) != a);
    CHECK(rng::uniform_pair(43, 0, 7, 3) != a);
    CHECK(a[0] > 0.0);
    CHECK(a[0] < 1.0);
}

TEST_CASE("normal sequence reproduces the pair lanes") {
    rng::NormalSequence seq(9, 2, 11);
    const auto p0 = rng::normal_pair(9, 2, 11, 0);
    const auto p1 = rng::normal_pair(9, 2, 11, 1);
    CHECK(seq.next() == p0[0]);
    CHECK(seq.next() == p0[1]);
    CHECK(seq.next() == p1[0]);
    CHECK(seq.next() == p1[1]);
}

TEST_CASE("sample moments look standard normal") {
    const std::size_t n = 400000;
    double sum = 0.0, sum2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto z = rng::normal_pair(123, 0, i, 0);
        sum += z[0] + z[1];
        sum2 += z[0] * z[0] + z[1] * z[1];
    }
    const double mean = sum / (2.0 * n);
    const double var = sum2 / (2.0 * n) - mean * mean;
    CHECK(std::abs(mean) < 4.0 / std::sqrt(2.0 * n));
    CHECK(std::abs(var - 1.0) < 4.0 * std::sqrt(2.0 / (2.0 * n)));
}
