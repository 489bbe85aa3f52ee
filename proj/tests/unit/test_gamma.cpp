#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <numbers>

#include "viscobessel/specfun/gamma.hpp"

using namespace viscobessel;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("gamma at known points") {
    CHECK(specfun::gamma_fn(1.0) == 1.0);
    CHECK_THAT(specfun::gamma_fn(0.5), WithinRel(1.7724538509055160, 1e-14));
    // Gamma(7/2) = (5/2)(3/2)(1/2) sqrt(pi)
    CHECK_THAT(specfun::gamma_fn(3.5), WithinRel(3.3233509704478426, 1e-13));
    CHECK_THAT(specfun::gamma_fn(3.5), WithinRel(2.5 * 1.5 * 0.5 * std::sqrt(std::numbers::pi), 1e-13));
}

TEST_CASE("gamma matches the C library over a wide range") {
    for (double x = 0.01; x < 170.0; x *= 1.07) {
        INFO("x = " << x);
        CHECK_THAT(specfun::gamma_fn(x), WithinRel(std::tgamma(x), 1e-12));
        CHECK_THAT(specfun::log_gamma(x), WithinAbs(std::lgamma(x), 1e-12 * std::max(1.0, std::fabs(std::lgamma(x)))));
    }
}

TEST_CASE("gamma satisfies the recurrence") {
    for (double x = 0.1; x < 30.0; x += 0.37) {
        CHECK_THAT(specfun::gamma_fn(x + 1.0), WithinRel(x * specfun::gamma_fn(x), 1e-12));
    }
}

TEST_CASE("gamma rejects non-positive and non-finite input") {
    CHECK_THROWS_AS(specfun::gamma_fn(0.0), domain_error);
    CHECK_THROWS_AS(specfun::gamma_fn(-1.5), domain_error);
    CHECK_THROWS_AS(specfun::gamma_fn(std::numeric_limits<double>::quiet_NaN()), domain_error);
    CHECK_THROWS_AS(specfun::gamma_fn(std::numeric_limits<double>::infinity()), domain_error);
    CHECK_THROWS_AS(specfun::log_gamma(0.0), domain_error);
}
