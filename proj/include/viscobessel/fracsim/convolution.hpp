#pragma once

// Hereditary-integral response
//
//   eps(t)   = J_g sigma(t) + (J' * sigma)(t)
//   sigma(t) = G_g eps(t)   + (G' * eps)(t)
//
// by product integration: the load is taken piecewise linear on the grid and
// the kernel is integrated exactly through the antiderivatives A = int J,
// B = int G. After integrating by parts,
//
//   eps_k = J(t_k) sigma_0 + sum_{m<k} (sigma_{m+1} - sigma_m)/dt * (A_{k-m} - A_{k-m-1}),
//
// which is exact for steps and ramps and second order for smooth loads, even
// though J' itself is singular like t^{-1/2} at the origin.

#include <vector>

#include "viscobessel/error.hpp"
#include "viscobessel/fracsim/load_history.hpp"
#include "viscobessel/models/material_model.hpp"
#include "viscobessel/specfun/zero_cache.hpp"

namespace viscobessel::fracsim {

inline ResponseHistory convolve_response(const models::MaterialModel& model, const LoadHistory& load) {
    load.validate();
    const double floor = models::time_floor(model);
    if (load.dt < floor) {
        throw refusal_error("convolve_response: dt = " + specfun::format_double(load.dt) +
                            " puts kernel samples below the series floor " + specfun::format_double(floor));
    }
    const bool creep_branch = load.kind == LoadKind::stress;
    const std::size_t n = load.size();

    // kernel values and antiderivatives on the grid; index 0 is the glass value
    std::vector<double> kernel(n);
    std::vector<double> integral(n);
    std::visit(
        [&](const auto& m) {
            kernel[0] = creep_branch ? m.glass_compliance() : m.glass_modulus();
            integral[0] = 0.0;
            for (std::size_t i = 1; i < n; ++i) {
                const double t = load.time(i);
                kernel[i] = creep_branch ? m.creep(t) : m.relaxation(t);
                integral[i] = creep_branch ? m.creep_integral(t) : m.relaxation_integral(t);
            }
        },
        model);

    std::vector<double> cell(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        cell[i] = integral[i + 1] - integral[i];
    }

    const auto& u = load.samples;
    ResponseHistory out{conjugate(load.kind), load.dt, std::vector<double>(n, 0.0)};
    for (std::size_t k = 0; k < n; ++k) {
        double sum = kernel[k] * u[0];
        for (std::size_t m = 0; m < k; ++m) {
            sum += (u[m + 1] - u[m]) / load.dt * cell[k - m - 1];
        }
        out.values[k] = sum;
    }
    return out;
}

}  // namespace viscobessel::fracsim
