#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "viscobessel/error.hpp"
#include "viscobessel/specfun/bessel.hpp"

namespace viscobessel::specfun {

/// Absolute accuracy every computed zero is refined to.
inline constexpr double zero_accuracy = 1e-10;

/// The first N positive zeros j_{nu,1} < ... < j_{nu,N} of J_nu. Immutable.
class ZeroTable {
public:
    ZeroTable(double order, std::vector<double> zeros) : order_(order), zeros_(std::move(zeros)) {
        if (!(order > -1.0)) {
            throw domain_error("ZeroTable: order must satisfy nu > -1");
        }
        if (zeros_.empty() || !(zeros_.front() > 0.0)) {
            throw computation_error("ZeroTable: zeros must be positive and non-empty");
        }
        for (std::size_t i = 1; i < zeros_.size(); ++i) {
            if (!(zeros_[i] > zeros_[i - 1])) {
                throw computation_error("ZeroTable: zeros not strictly increasing at index " +
                                        std::to_string(i + 1));
            }
        }
    }

    double order() const noexcept { return order_; }
    std::size_t size() const noexcept { return zeros_.size(); }
    std::span<const double> zeros() const noexcept { return zeros_; }
    /// 0-based access; zero(n) is the 1-based j_{nu,n}.
    double operator[](std::size_t i) const { return zeros_[i]; }
    double zero(std::size_t n) const { return zeros_.at(n - 1); }

    /// sum_{n>=1} 1/j_{nu,n}^2 = 1/(4(nu+1)).
    double rayleigh_sum() const noexcept { return 1.0 / (4.0 * (order_ + 1.0)); }
    /// sum_{n>=1} 1/j_{nu,n}^4 = 1/(16(nu+1)^2(nu+2)).
    double rayleigh_sum4() const noexcept {
        return 1.0 / (16.0 * (order_ + 1.0) * (order_ + 1.0) * (order_ + 2.0));
    }
    double partial_rayleigh_sum(std::size_t count) const {
        double sum = 0.0;
        for (std::size_t i = 0; i < count && i < zeros_.size(); ++i) {
            sum += 1.0 / (zeros_[i] * zeros_[i]);
        }
        return sum;
    }

    friend bool operator==(const ZeroTable&, const ZeroTable&) = default;

private:
    double order_;
    std::vector<double> zeros_;
};

/// McMahon's large-n estimate beta - (4 nu^2 - 1) / (8 beta), beta = (n + nu/2 - 1/4) pi.
inline double mcmahon_guess(double nu, std::size_t n) {
    const double beta = (static_cast<double>(n) + nu / 2.0 - 0.25) * std::numbers::pi;
    return beta - (4.0 * nu * nu - 1.0) / (8.0 * beta);
}

namespace detail {

// Locates [a, b] with a sign change of J_nu, scanning upward from `start`.
// Consecutive zeros are at least ~2.8 apart for nu > -1, so a 0.25 step
// cannot straddle two of them.
inline std::pair<double, double> bracket_next_zero(double nu, double start, double step, std::size_t index) {
    double a = start;
    double fa = bessel_j(nu, a);
    for (int i = 0; i < 100000; ++i) {
        const double b = a + step;
        const double fb = bessel_j(nu, b);
        if (fb == 0.0 || (fa < 0.0) != (fb < 0.0)) {
            return {a, b};
        }
        a = b;
        fa = fb;
    }
    throw computation_error("bessel_j_zeros: no sign change found for zero " + std::to_string(index));
}

// Newton from the McMahon guess, confined to the bracket; any step that
// leaves the bracket is replaced by bisection.
inline double refine_zero(double nu, double a, double b, double guess, std::size_t index) {
    double fa = bessel_j(nu, a);
    double x = (guess > a && guess < b) ? guess : 0.5 * (a + b);
    for (int iter = 0; iter < 200; ++iter) {
        const double fx = bessel_j(nu, x);
        if (fx == 0.0) {
            return x;
        }
        if ((fx < 0.0) == (fa < 0.0)) {
            a = x;
            fa = fx;
        } else {
            b = x;
        }
        const double dfx = bessel_j_derivative(nu, x);
        double next = x - fx / dfx;
        if (!std::isfinite(next) || !(next > a && next < b)) {
            next = 0.5 * (a + b);
        }
        const double change = std::fabs(next - x);
        x = next;
        if (change < 1e-14 * x || (b - a) < 1e-14 * x) {
            return x;
        }
    }
    throw computation_error("bessel_j_zeros: Newton/bisection failed to converge for zero " +
                            std::to_string(index));
}

}  // namespace detail

/// First n_max positive zeros of J_nu, each accurate to zero_accuracy.
inline ZeroTable bessel_j_zeros(double nu, std::size_t n_max) {
    if (!std::isfinite(nu) || !(nu > -1.0)) {
        throw domain_error("bessel_j_zeros: order must satisfy nu > -1");
    }
    if (n_max < 1) {
        throw domain_error("bessel_j_zeros: n_max must be at least 1");
    }
    std::vector<double> zeros;
    zeros.reserve(n_max);
    double start = 1e-3;
    double step = 0.1;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto [a, b] = detail::bracket_next_zero(nu, start, step, n);
        const double root = detail::refine_zero(nu, a, b, mcmahon_guess(nu, n), n);
        zeros.push_back(root);
        start = root + 0.5;
        step = 0.25;
    }
    return ZeroTable(nu, std::move(zeros));
}

}  // namespace viscobessel::specfun
