#pragma once

// Closed-form material functions of the fractional Maxwell model of order 1/2,
//
//   sigma + a1 D^{1/2} sigma = b1 D^{1/2} eps      (Caputo derivatives)
//
// and of the one-parameter Maxwell-like family
//
//   [1 + D^{1/2} / (2(nu+1))] sigma = D^{1/2} eps / (2(nu+1)),
//
// which is the same law with a1 = b1 = 1/(2(nu+1)).

#include <cmath>
#include <complex>
#include <numbers>

#include "viscobessel/error.hpp"
#include "viscobessel/models/params.hpp"
#include "viscobessel/specfun/erfc.hpp"
#include "viscobessel/specfun/gamma.hpp"
#include "viscobessel/specfun/mittag_leffler.hpp"

namespace viscobessel::models {

namespace detail {

inline void require_time(double t, const char* who) {
    if (!std::isfinite(t) || t < 0.0) {
        throw domain_error(std::string(who) + ": t must be finite and non-negative");
    }
}

inline void require_positive_time(double t, const char* who) {
    if (!std::isfinite(t) || !(t > 0.0)) {
        throw domain_error(std::string(who) + ": t must be positive");
    }
}

template <class Real>
void require_nonzero(const std::complex<Real>& s, const char* who) {
    if (s == std::complex<Real>(0)) {
        throw domain_error(std::string(who) + ": s must be non-zero");
    }
}

// erfcx(x) - 1 + 2x/sqrt(pi) = sum_{n>=2} (-x)^n / Gamma(n/2 + 1); the
// series avoids the cancellation of the closed form for small x.
inline double erfcx_remainder2(double x) {
    if (x >= 0.5) {
        return specfun::erfcx(x) - 1.0 + 2.0 * x / std::sqrt(std::numbers::pi);
    }
    double sum = 0.0;
    double power = x * x;
    for (int n = 2; n < 60; ++n) {
        const double term = power / specfun::gamma_fn(0.5 * n + 1.0);
        sum += (n % 2 == 0) ? term : -term;
        if (term < 1e-18 * std::fabs(sum)) {
            break;
        }
        power *= x;
    }
    return sum;
}

}  // namespace detail

/// J_M(t) = (a1/b1) (1 + 2 t^{1/2} / (a1 sqrt(pi))).
inline double fmax_J_time(double a1, double b1, double t) {
    detail::require_time(t, "fmax_J_time");
    return a1 / b1 * (1.0 + 2.0 * std::sqrt(t) / (a1 * std::sqrt(std::numbers::pi)));
}

/// G_M(t) = (b1/a1) E_{1/2}(-t^{1/2}/a1).
inline double fmax_G_time(double a1, double b1, double t) {
    detail::require_time(t, "fmax_G_time");
    return b1 / a1 * specfun::mittag_leffler_half(-std::sqrt(t) / a1);
}

/// s J~_M(s) = (1 + a1 s^{1/2}) / (b1 s^{1/2}).
template <class Real>
std::complex<Real> fmax_J_laplace(Real a1, Real b1, const std::complex<Real>& s) {
    detail::require_nonzero(s, "fmax_J_laplace");
    const std::complex<Real> root = std::sqrt(s);
    return (Real(1) + a1 * root) / (b1 * root);
}

/// s G~_M(s) = b1 s^{1/2} / (1 + a1 s^{1/2}).
template <class Real>
std::complex<Real> fmax_G_laplace(Real a1, Real b1, const std::complex<Real>& s) {
    detail::require_nonzero(s, "fmax_G_laplace");
    const std::complex<Real> root = std::sqrt(s);
    return b1 * root / (Real(1) + a1 * root);
}

// The Maxwell-like family is the fractional Maxwell model with
// a1 = b1 = 1/(2(nu+1)); it is evaluated through that code path so the two
// agree bit for bit.

inline double asym_coefficient(double nu) { return 1.0 / (2.0 * (nu + 1.0)); }

/// J_as(t; nu) = 1 + 4(nu+1) t^{1/2} / sqrt(pi).
inline double asym_J_time(double nu, double t) {
    detail::require_time(t, "asym_J_time");
    return fmax_J_time(asym_coefficient(nu), asym_coefficient(nu), t);
}

/// G_as(t; nu) = E_{1/2}(-2(nu+1) t^{1/2}).
inline double asym_G_time(double nu, double t) {
    detail::require_time(t, "asym_G_time");
    return fmax_G_time(asym_coefficient(nu), asym_coefficient(nu), t);
}

/// s J~_as(s; nu) = (2(nu+1) + s^{1/2}) / s^{1/2}.
template <class Real>
std::complex<Real> asym_J_laplace(Real nu, const std::complex<Real>& s) {
    detail::require_nonzero(s, "asym_J_laplace");
    const Real k = Real(1) / (Real(2) * (nu + Real(1)));
    return fmax_J_laplace(k, k, s);
}

/// s G~_as(s; nu) = s^{1/2} / (2(nu+1) + s^{1/2}).
template <class Real>
std::complex<Real> asym_G_laplace(Real nu, const std::complex<Real>& s) {
    detail::require_nonzero(s, "asym_G_laplace");
    const Real k = Real(1) / (Real(2) * (nu + Real(1)));
    return fmax_G_laplace(k, k, s);
}

/// Fractional Maxwell model of order 1/2 with coefficients a1, b1.
class FractionalMaxwell {
public:
    FractionalMaxwell(double a1, double b1) : params_(ModelParams::fmax(a1, b1)) {}

    const ModelParams& params() const noexcept { return params_; }
    double a1() const noexcept { return params_.a1; }
    double b1() const noexcept { return params_.b1; }

    double glass_compliance() const noexcept { return a1() / b1(); }
    double glass_modulus() const noexcept { return b1() / a1(); }
    /// J(t) = J_g + c sqrt(t) exactly, G(t) = G_g + c' sqrt(t) + d' t + O(t^{3/2}).
    double creep_sqrt_coefficient() const noexcept { return 2.0 / (b1() * std::sqrt(std::numbers::pi)); }
    double relaxation_sqrt_coefficient() const noexcept {
        return -2.0 * b1() / (a1() * a1() * std::sqrt(std::numbers::pi));
    }
    double creep_linear_coefficient() const noexcept { return 0.0; }
    double relaxation_linear_coefficient() const noexcept { return b1() / (a1() * a1() * a1()); }

    double creep(double t) const { return fmax_J_time(a1(), b1(), t); }
    double relaxation(double t) const { return fmax_G_time(a1(), b1(), t); }

    /// Psi(t) = J'(t) / J_g = 1 / (a1 sqrt(pi t)).
    double memory_psi(double t) const {
        detail::require_positive_time(t, "memory_psi");
        return 1.0 / (a1() * std::sqrt(std::numbers::pi * t));
    }
    /// Phi(t) = -G'(t) / G_g = c (1/sqrt(pi t) - c erfcx(c sqrt t)), c = 1/a1.
    double memory_phi(double t) const {
        detail::require_positive_time(t, "memory_phi");
        const double c = 1.0 / a1();
        return c * (1.0 / std::sqrt(std::numbers::pi * t) - c * specfun::erfcx(c * std::sqrt(t)));
    }

    /// int_0^t J.
    double creep_integral(double t) const {
        detail::require_time(t, "creep_integral");
        return a1() / b1() * (t + 4.0 / (3.0 * a1() * std::sqrt(std::numbers::pi)) * t * std::sqrt(t));
    }
    /// int_0^t G = a1 b1 (erfcx(x) - 1 + 2x/sqrt(pi)), x = sqrt(t)/a1.
    double relaxation_integral(double t) const {
        detail::require_time(t, "relaxation_integral");
        return a1() * b1() * detail::erfcx_remainder2(std::sqrt(t) / a1());
    }

    template <class Real>
    std::complex<Real> creep_laplace(const std::complex<Real>& s) const {
        return fmax_J_laplace(Real(a1()), Real(b1()), s);
    }
    template <class Real>
    std::complex<Real> relaxation_laplace(const std::complex<Real>& s) const {
        return fmax_G_laplace(Real(a1()), Real(b1()), s);
    }

private:
    ModelParams params_;
};

/// The one-parameter fractional Maxwell-like family with unit glass constants.
class MaxwellLike {
public:
    explicit MaxwellLike(double nu)
        : params_(ModelParams::asymptotic(nu)), fmax_(asym_coefficient(nu), asym_coefficient(nu)) {}

    const ModelParams& params() const noexcept { return params_; }
    double nu() const noexcept { return params_.nu; }
    /// Coefficient 1/(2(nu+1)) in front of both fractional derivatives.
    double coefficient() const noexcept { return fmax_.a1(); }
    /// The equivalent fractional Maxwell model.
    const FractionalMaxwell& as_fmax() const noexcept { return fmax_; }

    double glass_compliance() const noexcept { return 1.0; }
    double glass_modulus() const noexcept { return 1.0; }
    double creep_sqrt_coefficient() const noexcept { return fmax_.creep_sqrt_coefficient(); }
    double relaxation_sqrt_coefficient() const noexcept { return fmax_.relaxation_sqrt_coefficient(); }
    double creep_linear_coefficient() const noexcept { return fmax_.creep_linear_coefficient(); }
    double relaxation_linear_coefficient() const noexcept { return fmax_.relaxation_linear_coefficient(); }

    double creep(double t) const { return asym_J_time(nu(), t); }
    double relaxation(double t) const { return asym_G_time(nu(), t); }
    double memory_psi(double t) const { return fmax_.memory_psi(t); }
    double memory_phi(double t) const { return fmax_.memory_phi(t); }
    double creep_integral(double t) const { return fmax_.creep_integral(t); }
    double relaxation_integral(double t) const { return fmax_.relaxation_integral(t); }

    template <class Real>
    std::complex<Real> creep_laplace(const std::complex<Real>& s) const {
        return asym_J_laplace(Real(nu()), s);
    }
    template <class Real>
    std::complex<Real> relaxation_laplace(const std::complex<Real>& s) const {
        return asym_G_laplace(Real(nu()), s);
    }

private:
    ModelParams params_;
    FractionalMaxwell fmax_;
};

}  // namespace viscobessel::models
