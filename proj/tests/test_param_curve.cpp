#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sppc/errors.hpp"
#include "sppc/param_curve.hpp"

using namespace sppc;

TEST_CASE("constant curve evaluates and integrates") {
    ParamCurve c(0.03);
    CHECK(c(0.0) == 0.03);
    CHECK(c(7.5) == 0.03);
    CHECK(c.integral(0.0, 2.0) == doctest::Approx(0.06).epsilon(1e-15));
    CHECK(c.integral(1.0, 1.0) == 0.0);
}

TEST_CASE("piecewise values follow right-open intervals") {
    ParamCurve c({0.0, 1.0, 2.5}, {0.01, 0.02, 0.04});
    CHECK(c(0.0) == 0.01);
    CHECK(c(0.999) == 0.01);
    CHECK(c(1.0) == 0.02);
    CHECK(c(2.5) == 0.04);
    CHECK(c(10.0) == 0.04);
}

TEST_CASE("integral is the exact sum of value times overlap") {
    ParamCurve c({0.0, 1.0, 2.5}, {0.01, 0.02, 0.04});
    CHECK(c.integral(0.0, 3.0) == doctest::Approx(0.01 + 1.5 * 0.02 + 0.5 * 0.04).epsilon(1e-15));
    CHECK(c.integral(0.5, 1.5) == doctest::Approx(0.5 * 0.01 + 0.5 * 0.02).epsilon(1e-15));
}

TEST_CASE("integral is additive over adjacent windows") {
    ParamCurve c({0.0, 0.7, 1.9, 3.1}, {1.0, -2.0, 0.5, 3.0});
    const double pts[] = {0.0, 0.3, 0.7, 1.0, 1.9, 2.0, 3.1, 4.0};
    for (double s : pts)
        for (double t : pts)
            for (double u : pts) {
                if (!(s <= t && t <= u)) continue;
                CHECK(c.integral(s, t) + c.integral(t, u) == doctest::Approx(c.integral(s, u)).epsilon(1e-15));
            }
}

TEST_CASE("construction validates inputs") {
    CHECK_THROWS_AS(ParamCurve({0.0, 1.0}, {1.0}), ValidationError);
    CHECK_THROWS_AS(ParamCurve({0.5, 1.0}, {1.0, 2.0}), ValidationError);
    CHECK_THROWS_AS(ParamCurve({0.0, 1.0, 1.0}, {1.0, 2.0, 3.0}), ValidationError);
    CHECK_THROWS_AS(ParamCurve({0.0}, {1.0 / 0.0}), ValidationError);
    ParamCurve ok({0.0, 2.0}, {1.0, 2.0});
    CHECK_THROWS_AS(ok(-0.1), ValidationError);
    CHECK_THROWS_AS(ok.integral(1.0, 0.5), ValidationError);
}

TEST_CASE("scaling multiplies values only") {
    ParamCurve c({0.0, 1.0}, {0.1, 0.2});
    ParamCurve s = c.scaled(3.0);
    CHECK(s(0.5) == doctest::Approx(0.3));
    CHECK(s(1.5) == doctest::Approx(0.6));
    CHECK(s.breakpoints() == c.breakpoints());
    CHECK(ParamCurve(0.0).is_zero());
    CHECK(!c.is_zero());
}
