#pragma once

#include <cmath>

#include "viscobessel/error.hpp"
#include "viscobessel/specfun/erfc.hpp"
#include "viscobessel/specfun/gamma.hpp"

namespace viscobessel::specfun {

/// E_{1/2}(z) on the non-positive real axis, through E_{1/2}(-x) = erfcx(x).
/// The value lies in (0, 1] and decreases strictly with |z|.
inline double mittag_leffler_half(double z) {
    if (std::isnan(z) || z > 0.0) {
        throw domain_error("mittag_leffler_half: defined here for z <= 0 only");
    }
    return erfcx(-z);
}

/// Truncated power series sum_{n < n_terms} z^n / Gamma(alpha n + 1), |z| <= 2.
inline double mittag_leffler_series(double alpha, double z, int n_terms) {
    if (!(alpha > 0.0)) {
        throw domain_error("mittag_leffler_series: alpha must be positive");
    }
    if (!(std::fabs(z) <= 2.0)) {
        throw domain_error("mittag_leffler_series: |z| must not exceed 2");
    }
    if (n_terms < 1) {
        throw domain_error("mittag_leffler_series: need at least one term");
    }
    double sum = 0.0;
    double power = 1.0;
    for (int n = 0; n < n_terms; ++n) {
        sum += power / gamma_fn(alpha * n + 1.0);
        power *= z;
    }
    return sum;
}

}  // namespace viscobessel::specfun
