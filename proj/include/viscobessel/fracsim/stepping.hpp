#pragma once

// Time stepping of the fractional Maxwell law of order 1/2
//
//   sigma + a1 D^{1/2} sigma = b1 D^{1/2} eps
//
// with both half derivatives in L1 form. The Maxwell-like family is the
// case a1 = b1 = 1/(2(nu+1)). Initial values follow the glass response,
// sigma_0 = G_g eps_0 and eps_0 = J_g sigma_0 with G_g = b1/a1 = 1/J_g, so
// no initial-condition terms enter the law itself.
//
// Strain-driven: the L1 sum is implicit in sigma_k only through w_0, giving
//   sigma_k (1 + a1 C) = a1 C (sigma_{k-1} - H_sigma) + b1 C D_eps.
// Stress-driven: D^{1/2} eps = (sigma + a1 D^{1/2} sigma) / b1, and the L1
// operator is inverted step by step, the discrete counterpart of a half
// integral.

#include <span>
#include <vector>

#include "viscobessel/error.hpp"
#include "viscobessel/fracsim/caputo.hpp"
#include "viscobessel/fracsim/load_history.hpp"

namespace viscobessel::fracsim {

inline ResponseHistory simulate_fmax(double a1, double b1, const LoadHistory& load) {
    if (!(a1 > 0.0) || !(b1 > 0.0)) {
        throw domain_error("simulate_fmax: a1 and b1 must be positive");
    }
    load.validate();
    const double scale = l1_scale(load.dt);
    const std::size_t n = load.size();
    const auto w = l1_weights(n);
    const std::span<const double> input = load.samples;

    ResponseHistory out{conjugate(load.kind), load.dt, std::vector<double>(n, 0.0)};
    auto& y = out.values;

    if (load.kind == LoadKind::strain) {
        y[0] = b1 / a1 * input[0];
        const double ac = a1 * scale;
        for (std::size_t m = 1; m < n; ++m) {
            const double driving = detail::l1_history(input, w, m, 0);
            const double memory = detail::l1_history(y, w, m, 1);
            y[m] = (ac * (y[m - 1] - memory) + b1 * scale * driving) / (1.0 + ac);
        }
    } else {
        y[0] = a1 / b1 * input[0];
        for (std::size_t m = 1; m < n; ++m) {
            const double target = (input[m] + a1 * scale * detail::l1_history(input, w, m, 0)) / b1;
            const double memory = detail::l1_history(y, w, m, 1);
            y[m] = y[m - 1] + target / scale - memory;
        }
    }
    return out;
}

/// Steps [1 + D^{1/2}/(2(nu+1))] sigma = D^{1/2} eps / (2(nu+1)).
inline ResponseHistory simulate_asymptotic(double nu, const LoadHistory& load) {
    if (!(nu > -1.0)) {
        throw domain_error("simulate_asymptotic: nu must be > -1");
    }
    const double k = 1.0 / (2.0 * (nu + 1.0));
    return simulate_fmax(k, k, load);
}

}  // namespace viscobessel::fracsim
