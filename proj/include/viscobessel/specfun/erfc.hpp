#pragma once

// Complementary error function and its scaled form erfcx(x) = e^{x^2} erfc(x).
//
// |x| < 0.5: erf by its positive Maclaurin-type series
//            erf(x) = 2/sqrt(pi) e^{-x^2} sum_n 2^n x^{2n+1} / (2n+1)!!
// x >= 0.5:  erfcx by the Laplace continued fraction
//            sqrt(pi) erfcx(x) = 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
//            (about 730 terms at x = 0.5, 30 at x = 3).
// Negative arguments use erfc(-x) = 2 - erfc(x).

#include <cmath>
#include <numbers>

#include "viscobessel/error.hpp"

namespace viscobessel::specfun {

inline constexpr double erfc_series_limit = 0.5;

namespace detail {

inline double erf_series(double x) {
    const double x2 = x * x;
    double term = x;
    double sum = x;
    for (int n = 1; n < 200; ++n) {
        term *= 2.0 * x2 / (2.0 * n + 1.0);
        sum += term;
        if (term < 1e-17 * sum) {
            break;
        }
    }
    return 2.0 / std::sqrt(std::numbers::pi) * std::exp(-x2) * sum;
}

inline double erfcx_continued_fraction(double x) {
    const double tiny = 1e-300;
    double f = x;
    double c = f;
    double d = 0.0;
    for (int k = 1; k < 20000; ++k) {
        const double a = 0.5 * k;
        d = x + a * d;
        if (d == 0.0) d = tiny;
        c = x + a / c;
        if (c == 0.0) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) {
            break;
        }
    }
    return 1.0 / (f * std::sqrt(std::numbers::pi));
}

}  // namespace detail

/// Scaled complementary error function e^{x^2} erfc(x).
inline double erfcx(double x) {
    if (std::isnan(x)) {
        throw domain_error("erfcx: argument is NaN");
    }
    if (x < 0.0) {
        return 2.0 * std::exp(x * x) - erfcx(-x);
    }
    if (x < erfc_series_limit) {
        return std::exp(x * x) * (1.0 - detail::erf_series(x));
    }
    if (std::isinf(x)) {
        return 0.0;
    }
    return detail::erfcx_continued_fraction(x);
}

inline double erfc(double x) {
    if (std::isnan(x)) {
        throw domain_error("erfc: argument is NaN");
    }
    if (x < 0.0) {
        return 2.0 - erfc(-x);
    }
    if (x < erfc_series_limit) {
        return 1.0 - detail::erf_series(x);
    }
    if (x > 27.3) {
        return 0.0;  // below the smallest subnormal
    }
    return std::exp(-x * x) * detail::erfcx_continued_fraction(x);
}

}  // namespace viscobessel::specfun
