#pragma once

#include <cmath>
#include <vector>

#include "viscobessel/error.hpp"
#include "viscobessel/models/bessel_model.hpp"
#include "viscobessel/models/fractional_maxwell.hpp"

namespace viscobessel::models {

struct ShortTimeAgreement {
    struct Row {
        double t;
        double bessel;
        double asymptotic;
        double residual;         // |J_bessel - J_as|
        double scaled_residual;  // residual / sqrt(t)
    };
    std::vector<Row> rows;  // in the order of the input grid
    /// scaled_residual strictly decreases as t decreases.
    bool decreasing_towards_zero = false;
};

/// Compares the Bessel-model creep compliance with the Maxwell-like
/// asymptote on t_grid within [t_floor, 0.5]. Since J - J_as = O(t), the
/// residual over sqrt(t) must shrink as t -> 0+.
inline ShortTimeAgreement short_time_agreement(const BesselModel& model, const std::vector<double>& t_grid) {
    ShortTimeAgreement report;
    for (double t : t_grid) {
        if (t < model.policy().t_floor || t > 0.5) {
            throw domain_error("short_time_agreement: grid must lie within [t_floor, 0.5]");
        }
        const double bessel = model.creep(t);
        const double asymptotic = asym_J_time(model.nu(), t);
        const double residual = std::fabs(bessel - asymptotic);
        report.rows.push_back({t, bessel, asymptotic, residual, residual / std::sqrt(t)});
    }
    bool ok = report.rows.size() >= 2;
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        for (std::size_t k = 0; k < report.rows.size(); ++k) {
            if (report.rows[k].t < report.rows[i].t &&
                !(report.rows[k].scaled_residual < report.rows[i].scaled_residual)) {
                ok = false;
            }
        }
    }
    report.decreasing_towards_zero = ok;
    return report;
}

}  // namespace viscobessel::models
