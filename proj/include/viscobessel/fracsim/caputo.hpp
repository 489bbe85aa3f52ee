#pragma once

// L1 discretization of the Caputo derivative of order 1/2 on a uniform grid:
//
//   D^{1/2} f(t_k) ~ dt^{-1/2} / Gamma(3/2) * sum_{j=0}^{k-1} w_j (f_{k-j} - f_{k-j-1}),
//   w_j = (j+1)^{1/2} - j^{1/2}.
//
// Only increments enter, so f(0) drops out as the Caputo definition requires.

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "viscobessel/error.hpp"

namespace viscobessel::fracsim {

/// w_0..w_{n-1}.
inline std::vector<double> l1_weights(std::size_t n) {
    std::vector<double> w(n);
    for (std::size_t j = 0; j < n; ++j) {
        w[j] = std::sqrt(static_cast<double>(j + 1)) - std::sqrt(static_cast<double>(j));
    }
    return w;
}

/// dt^{-1/2} / Gamma(3/2).
inline double l1_scale(double dt) { return 2.0 / (std::sqrt(std::numbers::pi) * std::sqrt(dt)); }

namespace detail {

// sum_{j=first}^{k-1} w_j (f_{k-j} - f_{k-j-1})
inline double l1_history(std::span<const double> f, std::span<const double> w, std::size_t k, std::size_t first) {
    double sum = 0.0;
    for (std::size_t j = first; j < k; ++j) {
        sum += w[j] * (f[k - j] - f[k - j - 1]);
    }
    return sum;
}

}  // namespace detail

/// L1 approximation of the Caputo half derivative at every grid point (0 at t_0).
inline std::vector<double> caputo_half(std::span<const double> samples, double dt) {
    if (samples.size() < 2) {
        throw domain_error("caputo_half: need at least two samples");
    }
    if (!(dt > 0.0)) {
        throw domain_error("caputo_half: dt must be positive");
    }
    const auto w = l1_weights(samples.size());
    const double scale = l1_scale(dt);
    std::vector<double> out(samples.size(), 0.0);
    for (std::size_t k = 1; k < samples.size(); ++k) {
        out[k] = scale * detail::l1_history(samples, w, k, 0);
    }
    return out;
}

}  // namespace viscobessel::fracsim
