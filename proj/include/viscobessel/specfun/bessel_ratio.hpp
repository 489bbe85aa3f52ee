#pragma once

// Overflow-free ratios of modified Bessel functions of contiguous order.
//
//   ratio_up(mu, z) = I_{mu+1}(z) / I_mu(z),   mu > -1
//
// evaluated by the Gauss continued fraction
//
//   I_{mu+1}/I_mu = z / (2(mu+1) + z^2 / (2(mu+2) + z^2 / (2(mu+3) + ...)))
//
// with the modified Lentz algorithm, in whatever precision T carries
// (double, long double, float128, or std::complex of those). For Re z >= 40
// the ratio of large-argument expansions is used instead; there the
// recessive e^{-z} branch is below 1e-34 relative, and the fraction would
// otherwise need O(|z|) terms.

#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <type_traits>

#include "viscobessel/error.hpp"
#include "viscobessel/specfun/bessel.hpp"

namespace viscobessel::specfun {

inline constexpr double bessel_ratio_asymptotic_real_part = 40.0;
inline constexpr int bessel_ratio_max_terms = 400000;

namespace detail {

template <class T>
struct real_of {
    using type = T;
};
template <class T>
struct real_of<std::complex<T>> {
    using type = T;
};
template <class T>
using real_of_t = typename real_of<T>::type;

template <class T>
real_of_t<T> real_part(const T& z) {
    if constexpr (std::is_same_v<T, real_of_t<T>>) {
        return z;
    } else {
        return z.real();
    }
}

template <class T>
T ratio_up_continued_fraction(real_of_t<T> mu, const T& z) {
    using Real = real_of_t<T>;
    using std::abs;
    const Real eps = std::numeric_limits<Real>::epsilon();
    const Real tiny = std::numeric_limits<Real>::min() * Real(1e10);
    const T z2 = z * z;

    T f = T(Real(2) * (mu + Real(1)));
    T c = f;
    T d = T(0);
    for (int k = 2; k < bessel_ratio_max_terms; ++k) {
        const T b = T(Real(2) * (mu + Real(k)));
        d = b + z2 * d;
        if (abs(d) < tiny) d = T(tiny);
        c = b + z2 / c;
        if (abs(c) < tiny) c = T(tiny);
        d = T(1) / d;
        const T delta = c * d;
        f *= delta;
        if (abs(delta - T(1)) < eps) {
            return z / f;
        }
    }
    throw computation_error("bessel_i_ratio: continued fraction did not converge");
}

}  // namespace detail

/// I_{mu+1}(z) / I_mu(z) for mu > -1, z != 0 in the closed right half plane
/// or on a Laplace inversion contour (principal square roots of such s).
template <class T>
T bessel_i_ratio_up(detail::real_of_t<T> mu, const T& z) {
    using Real = detail::real_of_t<T>;
    if (!(mu > Real(-1))) {
        throw domain_error("bessel_i_ratio: order must satisfy mu > -1");
    }
    if (z == T(0)) {
        throw domain_error("bessel_i_ratio: argument must be non-zero");
    }
    if (detail::real_part(z) >= Real(bessel_ratio_asymptotic_real_part)) {
        return detail::bessel_i_large_sum(mu + Real(1), z) / detail::bessel_i_large_sum(mu, z);
    }
    return detail::ratio_up_continued_fraction(mu, z);
}

/// I_{nu_num}(x) / I_{nu_den}(x) for |nu_num - nu_den| = 1 and x > 0.
inline double bessel_i_ratio(double nu_num, double nu_den, double x) {
    if (!std::isfinite(x) || !(x > 0.0)) {
        throw domain_error("bessel_i_ratio: argument must be finite and positive");
    }
    if (nu_num == nu_den + 1.0) {
        return bessel_i_ratio_up(nu_den, x);
    }
    if (nu_den == nu_num + 1.0) {
        return 1.0 / bessel_i_ratio_up(nu_num, x);
    }
    throw domain_error("bessel_i_ratio: orders must differ by exactly one");
}

}  // namespace viscobessel::specfun
