#pragma once

// Check of (J * G)(t) = t, the time-domain form of s J~ . s G~ = 1.
//
// Trapezoidal rule on a uniform grid with the endpoint correction for the
// sqrt singularities of the integrand: near tau = 0, J(tau) G(t - tau) ~
// const + a sqrt(tau), and the trapezoidal rule then errs by
// zeta(-1/2) a h^{3/2} (generalized Euler-Maclaurin), likewise at tau = t.
// The coefficients a come from the short-time expansions
// J ~ J_g + c_J sqrt(t) + d_J t, G ~ G_g + c_G sqrt(t) + d_G t. The linear
// parts r of the integrand at both ends add the ordinary Euler-Maclaurin term
// (h^2/12)(r'(t) - r'(0)), with
//   r'(0) = d_J G(t) + J_g G'(t),   r'(t) = J'(t) G_g - J(t) d_G,
// leaving O(h^{5/2}).

#include <algorithm>
#include <cmath>
#include <vector>

#include "viscobessel/error.hpp"
#include "viscobessel/models/material_model.hpp"

namespace viscobessel::fracsim {

/// zeta(-1/2)
inline constexpr double zeta_minus_half = -0.20788622497735456602;

struct InterconversionReport {
    struct Row {
        double t;
        double convolution;
        double error;  // |(J * G)(t) - t|
        std::size_t intervals;
    };
    std::vector<Row> rows;
    double max_error = 0.0;
};

/// (J * G)(t) with at most `intervals` cells; Bessel models coarsen the grid
/// so that no interior node falls below t_floor.
inline InterconversionReport::Row convolve_creep_relaxation(const models::MaterialModel& model, double t,
                                                            std::size_t intervals = 2000) {
    if (!(t > 0.0)) {
        throw domain_error("interconversion: t must be positive");
    }
    const double floor = models::time_floor(model);
    if (floor > 0.0) {
        if (t < 2.0 * floor) {
            throw refusal_error("interconversion: t too small for the series floor");
        }
        intervals = std::min<std::size_t>(intervals, static_cast<std::size_t>(std::floor(t / floor)));
    }
    const double h = t / static_cast<double>(intervals);
    return std::visit(
        [&](const auto& m) {
            auto j_at = [&](std::size_t i) { return i == 0 ? m.glass_compliance() : m.creep(static_cast<double>(i) * h); };
            auto g_at = [&](std::size_t i) { return i == 0 ? m.glass_modulus() : m.relaxation(static_cast<double>(i) * h); };
            std::vector<double> jv(intervals + 1);
            std::vector<double> gv(intervals + 1);
            for (std::size_t i = 0; i <= intervals; ++i) {
                jv[i] = j_at(i);
                gv[i] = g_at(i);
            }
            double sum = 0.5 * (jv[0] * gv[intervals] + jv[intervals] * gv[0]);
            for (std::size_t i = 1; i < intervals; ++i) {
                sum += jv[i] * gv[intervals - i];
            }
            double value = h * sum;
            const double left = m.creep_sqrt_coefficient() * gv[intervals];
            const double right = jv[intervals] * m.relaxation_sqrt_coefficient();
            value -= zeta_minus_half * (left + right) * h * std::sqrt(h);
            // J' = J_g psi, G' = -G_g phi
            const double dj = m.glass_compliance() * m.memory_psi(t);
            const double dg = -m.glass_modulus() * m.memory_phi(t);
            const double slope_left = m.creep_linear_coefficient() * gv[intervals] + m.glass_compliance() * dg;
            const double slope_right = dj * m.glass_modulus() - jv[intervals] * m.relaxation_linear_coefficient();
            value -= h * h / 12.0 * (slope_right - slope_left);
            return InterconversionReport::Row{t, value, std::fabs(value - t), intervals};
        },
        model);
}

inline InterconversionReport interconversion_check(const models::MaterialModel& model, const std::vector<double>& t_grid,
                                                   std::size_t intervals = 2000) {
    InterconversionReport report;
    for (double t : t_grid) {
        const auto row = convolve_creep_relaxation(model, t, intervals);
        report.max_error = std::max(report.max_error, row.error);
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace viscobessel::fracsim
