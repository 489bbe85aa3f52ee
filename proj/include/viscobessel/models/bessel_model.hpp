#pragma once

// Bessel models of order nu > -1:
//
//   s J~(s; nu) = 1 + 2(nu+1)/sqrt(s) * I_{nu+1}(sqrt s) / I_{nu+2}(sqrt s)
//   s G~(s; nu) = 1 - 2(nu+1)/sqrt(s) * I_{nu+1}(sqrt s) / I_nu(sqrt s)
//
// with time-domain generalized Dirichlet series over Bessel zeros
//
//   J(t; nu) = 2(nu+2)/(nu+3) + 4(nu+1)(nu+2) t - 4(nu+1) sum_n exp(-j^2 t)/j^2,  j = j_{nu+2,n}
//   G(t; nu) = 4(nu+1) sum_n exp(-j^2 t)/j^2,                                   j = j_{nu,n}
//
// The series converge slowly as t -> 0 and are refused below t_floor.

#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>
#include <numbers>
#include <string>

#include "viscobessel/error.hpp"
#include "viscobessel/models/params.hpp"
#include "viscobessel/specfun/bessel_ratio.hpp"
#include "viscobessel/specfun/zero_cache.hpp"
#include "viscobessel/specfun/zeros.hpp"

namespace viscobessel::models {

/// Result of a truncated sum_n exp(-j_n^2 t) / j_n^{2p}.
struct DirichletSum {
    double value = 0.0;
    std::size_t terms = 0;
    double tail_bound = 0.0;
};

/// Sums exp(-j_n^2 t) / j_n^{2p} for p in {0, 1, 2} until the tail, scaled
/// by `prefactor`, is below policy.tol. Tail bounds after N terms:
///   p = 1, 2:  exp(-j_N^2 t) * sum_{all n} j_n^{-2p}          (Rayleigh sums)
///   p = 0:     exp(-j_N^2 t) * q / (1 - q),  q = exp(-2 j_N d t)
/// where d is a lower bound on the zero spacing.
inline DirichletSum dirichlet_sum(const specfun::ZeroTable& table, double t, int power, double prefactor,
                                  const TruncationPolicy& policy) {
    double spacing = std::numbers::pi - 0.25;
    for (std::size_t i = 1; i < table.size(); ++i) {
        spacing = std::min(spacing, table[i] - table[i - 1]);
    }
    const double full_sum = power == 1 ? table.rayleigh_sum() : table.rayleigh_sum4();
    DirichletSum result;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const double j = table[i];
        const double j2 = j * j;
        const double decay = std::exp(-j2 * t);
        double weight = 1.0;
        if (power == 1) weight = 1.0 / j2;
        if (power == 2) weight = 1.0 / (j2 * j2);
        result.value += decay * weight;
        result.terms = i + 1;
        double tail;
        if (power == 0) {
            const double q = std::exp(-2.0 * j * spacing * t);
            tail = decay * q / (1.0 - q);
        } else {
            tail = decay * full_sum;
        }
        result.tail_bound = std::fabs(prefactor) * tail;
        if (result.terms >= policy.n_min && result.tail_bound <= policy.tol) {
            return result;
        }
    }
    throw computation_error("Dirichlet series: zero table of order " + specfun::format_double(table.order()) +
                            " exhausted after " + std::to_string(table.size()) + " terms at t = " +
                            specfun::format_double(t));
}

class BesselModel {
public:
    explicit BesselModel(double nu, TruncationPolicy policy = {},
                         specfun::ZeroCache& cache = specfun::ZeroCache::global())
        : params_(ModelParams::bessel(nu)), policy_(policy) {
        policy_.validate();
        zeros_relaxation_ = cache.get(nu, policy_.n_max);
        zeros_creep_ = cache.get(nu + 2.0, policy_.n_max);
    }

    const ModelParams& params() const noexcept { return params_; }
    double nu() const noexcept { return params_.nu; }
    const TruncationPolicy& policy() const noexcept { return policy_; }
    /// Zeros j_{nu,n} (relaxation series) and j_{nu+2,n} (creep series).
    const specfun::ZeroTable& relaxation_zeros() const noexcept { return *zeros_relaxation_; }
    const specfun::ZeroTable& creep_zeros() const noexcept { return *zeros_creep_; }

    double glass_compliance() const noexcept { return 1.0; }
    double glass_modulus() const noexcept { return 1.0; }
    /// Short-time terms follow from s J~ ~ 1 + 2(nu+1) s^{-1/2} + (nu+1)(2nu+3)/s
    /// and s G~ ~ 1 - 2(nu+1) s^{-1/2} + (nu+1)(2nu+1)/s.
    double creep_sqrt_coefficient() const noexcept { return 4.0 * (nu() + 1.0) / std::sqrt(std::numbers::pi); }
    double relaxation_sqrt_coefficient() const noexcept { return -creep_sqrt_coefficient(); }
    double creep_linear_coefficient() const noexcept { return (nu() + 1.0) * (2.0 * nu() + 3.0); }
    double relaxation_linear_coefficient() const noexcept { return (nu() + 1.0) * (2.0 * nu() + 1.0); }

    double creep(double t) const {
        require_series_time(t, "bessel_J_time");
        const double a = nu() + 1.0;
        const double b = nu() + 2.0;
        const auto sum = dirichlet_sum(creep_zeros(), t, 1, 4.0 * a, policy_);
        return 2.0 * b / (nu() + 3.0) + 4.0 * a * b * t - 4.0 * a * sum.value;
    }

    double relaxation(double t) const {
        require_series_time(t, "bessel_G_time");
        const double a = nu() + 1.0;
        return 4.0 * a * dirichlet_sum(relaxation_zeros(), t, 1, 4.0 * a, policy_).value;
    }

    /// Psi(t) = 4(nu+1)(nu+2) + 4(nu+1) sum exp(-j_{nu+2,n}^2 t).
    double memory_psi(double t) const {
        require_series_time(t, "memory_psi");
        const double a = nu() + 1.0;
        return 4.0 * a * (nu() + 2.0) + 4.0 * a * dirichlet_sum(creep_zeros(), t, 0, 4.0 * a, policy_).value;
    }

    /// Phi(t) = 4(nu+1) sum exp(-j_{nu,n}^2 t).
    double memory_phi(double t) const {
        require_series_time(t, "memory_phi");
        const double a = nu() + 1.0;
        return 4.0 * a * dirichlet_sum(relaxation_zeros(), t, 0, 4.0 * a, policy_).value;
    }

    /// int_0^t J = 2(nu+2)/(nu+3) t + 2(nu+1)(nu+2) t^2 - 4(nu+1) sum (1 - exp(-j^2 t))/j^4.
    double creep_integral(double t) const {
        if (t == 0.0) return 0.0;
        require_series_time(t, "creep_integral");
        const double a = nu() + 1.0;
        const double b = nu() + 2.0;
        const auto sum = dirichlet_sum(creep_zeros(), t, 2, 4.0 * a, policy_);
        return 2.0 * b / (nu() + 3.0) * t + 2.0 * a * b * t * t -
               4.0 * a * (creep_zeros().rayleigh_sum4() - sum.value);
    }

    /// int_0^t G = 4(nu+1) sum (1 - exp(-j^2 t))/j^4, tending to 1/(4(nu+1)(nu+2)).
    double relaxation_integral(double t) const {
        if (t == 0.0) return 0.0;
        require_series_time(t, "relaxation_integral");
        const double a = nu() + 1.0;
        const auto sum = dirichlet_sum(relaxation_zeros(), t, 2, 4.0 * a, policy_);
        return 4.0 * a * (relaxation_zeros().rayleigh_sum4() - sum.value);
    }

    template <class Real>
    std::complex<Real> creep_laplace(const std::complex<Real>& s) const {
        return bessel_J_laplace(Real(nu()), s);
    }
    template <class Real>
    std::complex<Real> relaxation_laplace(const std::complex<Real>& s) const {
        return bessel_G_laplace(Real(nu()), s);
    }

    /// s J~(s; nu); principal branch of sqrt(s).
    template <class Real>
    static std::complex<Real> bessel_J_laplace(Real nu, const std::complex<Real>& s) {
        if (s == std::complex<Real>(0)) {
            throw domain_error("bessel_J_laplace: s must be non-zero");
        }
        const std::complex<Real> root = std::sqrt(s);
        // I_{nu+1}/I_{nu+2} = 1 / ratio_up(nu+1)
        const std::complex<Real> up = specfun::bessel_i_ratio_up(nu + Real(1), root);
        return Real(1) + Real(2) * (nu + Real(1)) / (root * up);
    }

    /// s G~(s; nu); principal branch of sqrt(s).
    template <class Real>
    static std::complex<Real> bessel_G_laplace(Real nu, const std::complex<Real>& s) {
        if (s == std::complex<Real>(0)) {
            throw domain_error("bessel_G_laplace: s must be non-zero");
        }
        const std::complex<Real> root = std::sqrt(s);
        const std::complex<Real> up = specfun::bessel_i_ratio_up(nu, root);
        return Real(1) - Real(2) * (nu + Real(1)) / root * up;
    }

private:
    void require_series_time(double t, const char* who) const {
        if (!std::isfinite(t) || t < 0.0) {
            throw domain_error(std::string(who) + ": t must be finite and non-negative");
        }
        if (t < policy_.t_floor) {
            throw refusal_error(std::string(who) + ": t = " + specfun::format_double(t) +
                                " is below the series floor " + specfun::format_double(policy_.t_floor) +
                                "; use the Laplace-domain route");
        }
    }

    ModelParams params_;
    TruncationPolicy policy_;
    std::shared_ptr<const specfun::ZeroTable> zeros_relaxation_;
    std::shared_ptr<const specfun::ZeroTable> zeros_creep_;
};

template <class Real>
std::complex<Real> bessel_J_laplace(Real nu, const std::complex<Real>& s) {
    return BesselModel::bessel_J_laplace(nu, s);
}

template <class Real>
std::complex<Real> bessel_G_laplace(Real nu, const std::complex<Real>& s) {
    return BesselModel::bessel_G_laplace(nu, s);
}

}  // namespace viscobessel::models
