#pragma once

// Verification suites behind `viscobessel verify --check <name>`.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "viscobessel/error.hpp"
#include "viscobessel/fracsim/interconversion.hpp"
#include "viscobessel/laplace/talbot.hpp"
#include "viscobessel/models/material_model.hpp"
#include "viscobessel/models/short_time.hpp"
#include "viscobessel/specfun/bessel.hpp"
#include "viscobessel/specfun/zero_cache.hpp"

namespace viscobessel::cli {

struct CheckResult {
    std::string check;
    models::ModelParams params;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::vector<std::string> lines;  // human-readable detail rows
};

inline std::vector<double> log_grid(double start, double end, std::size_t points) {
    std::vector<double> grid(points);
    for (std::size_t i = 0; i < points; ++i) {
        const double f = points == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(points - 1);
        grid[i] = start * std::pow(end / start, f);
    }
    grid.back() = end;
    return grid;
}

inline std::string row(std::initializer_list<std::string> cells) {
    std::ostringstream out;
    bool first = true;
    for (const auto& c : cells) {
        out << (first ? "" : "  ") << c;
        first = false;
    }
    return out.str();
}

inline std::string sci(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.3e", v);
    return buffer;
}

/// Reciprocity on s = 10^k, k = -2..4, and on fixed-Talbot nodes for t in {0.05, 1, 2}.
inline CheckResult check_reciprocity(const models::MaterialModel& model, double tolerance = 1e-10) {
    CheckResult result{"reciprocity", models::params_of(model), 0.0, tolerance, false, {}};
    std::vector<std::complex<double>> nodes;
    for (int k = -2; k <= 4; ++k) {
        nodes.emplace_back(std::pow(10.0, k), 0.0);
    }
    for (double t : {0.05, 1.0, 2.0}) {
        const int m = laplace::talbot_default_nodes;
        const double r = 2.0 * m / (5.0 * t);
        for (int k = 1; k < m; k += 7) {
            const double theta = k * std::numbers::pi / m;
            const double cot = std::cos(theta) / std::sin(theta);
            nodes.emplace_back(r * theta * cot, r * theta);
        }
    }
    for (const auto& s : nodes) {
        const double defect = models::reciprocity_defect<double>(model, s);
        result.max_error = std::max(result.max_error, defect);
        if (s.imag() == 0.0) {
            result.lines.push_back(row({"s=" + sci(s.real()), "|sJ*sG-1|=" + sci(defect)}));
        }
    }
    result.lines.push_back(row({"talbot nodes", std::to_string(nodes.size() - 7), "checked"}));
    result.pass = result.max_error <= tolerance;
    return result;
}

/// (J * G)(t) = t on 20 log-spaced t in [0.1, 2].
inline CheckResult check_interconversion(const models::MaterialModel& model, double tolerance = 1e-4) {
    CheckResult result{"interconversion", models::params_of(model), 0.0, tolerance, false, {}};
    const auto report = fracsim::interconversion_check(model, log_grid(0.1, 2.0, 20));
    for (const auto& r : report.rows) {
        result.lines.push_back(row({"t=" + sci(r.t), "(J*G)=" + specfun::format_double(r.convolution),
                                    "err=" + sci(r.error)}));
    }
    result.max_error = report.max_error;
    result.pass = result.max_error <= tolerance;
    return result;
}

/// Time-domain evaluators against fixed-Talbot inversion of the Laplace forms,
/// 20 log-spaced t in [0.05, 2], maximum relative gap over J and G.
inline CheckResult check_laplace_oracle(const models::MaterialModel& model, double tolerance = 1e-6) {
    using Q = laplace::oracle_real;
    CheckResult result{"laplace-oracle", models::params_of(model), 0.0, tolerance, false, {}};
    const auto creep_f = models::creep_transform<Q>(model);
    const auto relax_f = models::relaxation_transform<Q>(model);
    for (double t : log_grid(0.05, 2.0, 20)) {
        const double j = models::creep(model, t);
        const double g = models::relaxation(model, t);
        const double jt = static_cast<double>(laplace::invert_talbot(creep_f, Q(t)));
        const double gt = static_cast<double>(laplace::invert_talbot(relax_f, Q(t)));
        const double gap_j = std::fabs(j - jt) / std::fabs(jt);
        const double gap_g = std::fabs(g - gt) / std::fabs(gt);
        result.max_error = std::max({result.max_error, gap_j, gap_g});
        result.lines.push_back(row({"t=" + sci(t), "J=" + specfun::format_double(j), "rel=" + sci(gap_j),
                                    "G=" + specfun::format_double(g), "rel=" + sci(gap_g)}));
    }
    result.pass = result.max_error <= tolerance;
    return result;
}

/// Short-time agreement of the Bessel creep compliance with its Maxwell-like
/// asymptote. max_error is the largest ratio of consecutive scaled residuals
/// (smaller t over larger t); a strict decrease needs every ratio below 1.
inline CheckResult check_asymptotics(const models::MaterialModel& model) {
    const auto* bessel = std::get_if<models::BesselModel>(&model);
    if (!bessel) {
        throw domain_error("verify asymptotics: requires --family bessel");
    }
    CheckResult result{"asymptotics", bessel->params(), 0.0, 1.0, false, {}};
    const std::vector<double> grid{0.2, 0.1, 0.05, 0.02, 0.01};
    const auto report = models::short_time_agreement(*bessel, grid);
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto& r = report.rows[i];
        if (i > 0) {
            result.max_error = std::max(result.max_error, r.scaled_residual / report.rows[i - 1].scaled_residual);
        }
        result.lines.push_back(row({"t=" + sci(r.t), "|J-J_as|=" + sci(r.residual),
                                    "/sqrt(t)=" + sci(r.scaled_residual)}));
    }
    result.pass = report.decreasing_towards_zero && result.max_error < 1.0;
    return result;
}

/// Signs of the central-difference derivatives of orders 0..4 of a function.
inline std::vector<double> central_derivatives(const auto& f, double t, double h) {
    const double fm2 = f(t - 2 * h), fm1 = f(t - h), f0 = f(t), fp1 = f(t + h), fp2 = f(t + 2 * h);
    return {f0,
            (fp1 - fm1) / (2 * h),
            (fp1 - 2 * f0 + fm1) / (h * h),
            (fp2 - 2 * fp1 + 2 * fm1 - fm2) / (2 * h * h * h),
            (fp2 - 4 * fp1 + 6 * f0 - 4 * fm1 + fm2) / (h * h * h * h)};
}

/// Complete-monotonicity spot check of the relaxation memory Phi:
/// (-1)^k Phi^{(k)}(t) > 0 for k = 0..4 at t in {0.1, 0.5, 1, 2}.
/// max_error counts sign violations.
inline CheckResult check_complete_monotonicity(const models::MaterialModel& model) {
    CheckResult result{"cm", models::params_of(model), 0.0, 0.0, false, {}};
    // tail far below the finite-difference resolution so the truncation
    // index cannot jump between neighbouring stencil points
    models::MaterialModel strict = model;
    if (auto* b = std::get_if<models::BesselModel>(&strict)) {
        models::TruncationPolicy policy = b->policy();
        policy.tol = 1e-30;
        strict = models::BesselModel(b->nu(), policy);
    }
    auto phi = [&](double t) { return models::evaluate(strict, models::FunctionKind::relaxation_memory, t); };
    int violations = 0;
    for (double t : {0.1, 0.5, 1.0, 2.0}) {
        const auto d = central_derivatives(phi, t, t / 50.0);
        std::string signs;
        for (std::size_t k = 0; k < d.size(); ++k) {
            const double signed_value = (k % 2 == 0 ? 1.0 : -1.0) * d[k];
            const bool ok = signed_value > 0.0;
            violations += ok ? 0 : 1;
            signs += ok ? (k % 2 == 0 ? '+' : '-') : '!';
        }
        result.lines.push_back(row({"t=" + sci(t), "Phi=" + sci(d[0]), "signs(0..4)=" + signs}));
    }
    result.max_error = violations;
    result.pass = violations == 0;
    return result;
}

/// Rayleigh tail: sum_{n>N} 1/j_{nu,n}^2 < 1 / (pi^2 (N + nu/2 - 3/4)).
inline double rayleigh_tail_bound(double nu, std::size_t n) {
    return 1.0 / (std::numbers::pi * std::numbers::pi * (static_cast<double>(n) + nu / 2.0 - 0.75));
}

/// Zero table checks: |J_nu(j_n)| <= 1e-9, strict increase, spacing -> pi,
/// Rayleigh partial sum below 1/(4(nu+1)) by no more than the tail bound.
inline CheckResult check_zeros(const specfun::ZeroTable& table, double tolerance = 1e-9) {
    CheckResult result{"zeros", models::ModelParams{models::Family::bessel, table.order(), 1.0, 1.0}, 0.0, tolerance,
                       false, {}};
    bool ok = true;
    for (std::size_t i = 0; i < table.size(); ++i) {
        result.max_error = std::max(result.max_error, std::fabs(specfun::bessel_j(table.order(), table[i])));
        if (i > 0 && !(table[i] > table[i - 1])) ok = false;
        if (i + 1 >= 50 && i + 1 < table.size() && std::fabs(table[i + 1] - table[i] - std::numbers::pi) > 0.01) {
            ok = false;
        }
    }
    const double partial = table.partial_rayleigh_sum(table.size());
    const double gap = table.rayleigh_sum() - partial;
    const double bound = rayleigh_tail_bound(table.order(), table.size());
    const bool rayleigh_ok = gap > 0.0 && gap < bound;
    result.lines.push_back(row({"zeros=" + std::to_string(table.size()), "first=" + specfun::format_double(table[0]),
                                "last=" + specfun::format_double(table[table.size() - 1])}));
    result.lines.push_back(row({"max|J(j_n)|=" + sci(result.max_error)}));
    result.lines.push_back(row({"rayleigh: 1/(4(nu+1)) - partial =", sci(gap), "bound", sci(bound),
                                rayleigh_ok ? "ok" : "FAIL"}));
    result.pass = ok && rayleigh_ok && result.max_error <= tolerance;
    return result;
}

}  // namespace viscobessel::cli
