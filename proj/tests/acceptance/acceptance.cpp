// Runs the ten acceptance criteria at their stated tolerances; one PASS/FAIL
// line each, non-zero exit status if any fails.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "../unit/oracles.hpp"
#include "viscobessel/viscobessel.hpp"

#ifndef VISCOBESSEL_CLI
#error "VISCOBESSEL_CLI must name the command-line binary"
#endif

using namespace viscobessel;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [fail: " << what << "]";
        }
    }
};

std::string sci(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.3e", v);
    return buffer;
}

std::vector<double> log_points(double a, double b, std::size_t n) {
    std::vector<double> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(a * std::pow(b / a, static_cast<double>(i) / (n - 1)));
    return out;
}

const std::vector<double> orders = {-0.8, -0.5, 0.0, 0.5, 1.0};

std::vector<models::MaterialModel> all_families(double nu) {
    return {models::make_model(models::ModelParams::bessel(nu)), models::make_model(models::ModelParams::fmax(1.0, 1.0)),
            models::make_model(models::ModelParams::asymptotic(nu))};
}

std::string label(const models::MaterialModel& model) {
    const auto& p = models::params_of(model);
    std::ostringstream out;
    out << models::to_string(p.family);
    if (p.family == models::Family::fmax) {
        out << "(" << p.a1 << "," << p.b1 << ")";
    } else {
        out << "(nu=" << p.nu << ")";
    }
    return out.str();
}

// ---- 1 ----------------------------------------------------------------------
void zero_tables(Outcome& o) {
    double worst_j = 0.0, worst_gap = 0.0, worst_boost = 0.0;
    for (double nu : {-0.5, 0.0, 0.5, 1.0, 2.0, 3.0}) {
        const auto table = specfun::ZeroCache::global().get(nu, 200);
        o.require(table->size() == 200, "200 zeros");
        double partial = 0.0;
        for (std::size_t i = 0; i < table->size(); ++i) {
            const double z = (*table)[i];
            const double value = std::fabs(boost::math::cyl_bessel_j(nu, z));
            worst_j = std::max(worst_j, value);
            o.require(value <= 1e-9, "|J_nu(j)| at nu=" + std::to_string(nu));
            worst_boost = std::max(worst_boost, std::fabs(z - oracle::zero(nu, static_cast<int>(i) + 1)) / z);
            partial += 1.0 / (z * z);
        }
        const double target = 1.0 / (4.0 * (nu + 1.0));
        // sum_{n > N} j_n^-2 < 1 / (pi^2 (N + nu/2 - 3/4)) from j_n > (n + nu/2 - 1/4) pi
        const double tail = 1.0 / (std::numbers::pi * std::numbers::pi * (200.0 + nu / 2.0 - 0.75));
        const double gap = target - partial;
        worst_gap = std::max(worst_gap, gap / tail);
        o.require(gap >= 0.0 && gap <= tail, "Rayleigh tail at nu=" + std::to_string(nu));
    }
    o.detail << "max|J(j)|=" << sci(worst_j) << " max gap/bound=" << sci(worst_gap)
             << " max rel dev from Boost zeros=" << sci(worst_boost);
}

// ---- 2 ----------------------------------------------------------------------
void reciprocity(Outcome& o) {
    double worst = 0.0;
    for (double nu : orders) {
        for (const auto& model : all_families(nu)) {
            for (int k = -2; k <= 4; ++k) {
                const double defect = models::reciprocity_defect<double>(model, std::complex<double>(std::pow(10.0, k), 0.0));
                worst = std::max(worst, defect);
                o.require(defect <= 1e-10, label(model) + " s=1e" + std::to_string(k));
            }
        }
    }
    // independent check of the Bessel transforms against Boost I_nu
    double oracle_gap = 0.0;
    for (double nu : orders) {
        const auto model = models::make_model(models::ModelParams::bessel(nu));
        for (int k = -2; k <= 4; ++k) {
            const double s = std::pow(10.0, k);
            const double sj = models::creep_laplace<double>(model, {s, 0.0}).real();
            const double sg = models::relaxation_laplace<double>(model, {s, 0.0}).real();
            oracle_gap = std::max({oracle_gap, oracle::relative(sj, oracle::bessel_sJ(nu, s)),
                                   oracle::relative(sg, oracle::bessel_sG(nu, s))});
        }
    }
    o.require(oracle_gap <= 1e-10, "Bessel transforms vs Boost I_nu");
    o.detail << "max|sJ*sG-1|=" << sci(worst) << " transforms vs Boost I_nu rel=" << sci(oracle_gap);
}

// ---- 3 ----------------------------------------------------------------------
void laplace_oracle(Outcome& o) {
    using Q = laplace::oracle_real;
    double worst = 0.0, worst_series = 0.0;
    for (double nu : {-0.5, 0.0, 0.5, 1.0}) {
        const auto model = models::make_model(models::ModelParams::bessel(nu));
        const auto jf = models::creep_transform<Q>(model);
        const auto gf = models::relaxation_transform<Q>(model);
        for (double t : log_points(0.05, 2.0, 20)) {
            const double j = models::creep(model, t);
            const double g = models::relaxation(model, t);
            const double jt = static_cast<double>(laplace::invert_talbot(jf, Q(t)));
            const double gt = static_cast<double>(laplace::invert_talbot(gf, Q(t)));
            const double gap = std::max(oracle::relative(j, jt), oracle::relative(g, gt));
            worst = std::max(worst, gap);
            o.require(gap <= 1e-6, "nu=" + std::to_string(nu) + " t=" + std::to_string(t));
            worst_series = std::max({worst_series, oracle::relative(j, oracle::bessel_creep(nu, t)),
                                     oracle::relative(g, oracle::bessel_relaxation(nu, t))});
        }
    }
    o.detail << "max rel gap series vs Talbot=" << sci(worst)
             << " (series vs Boost-zero series=" << sci(worst_series) << ")";
}

// ---- 4 ----------------------------------------------------------------------
void glass_limits(Outcome& o) {
    double worst = 0.0;
    for (double nu : orders) {
        for (const auto& model : all_families(nu)) {
            const auto g = models::glass_limits_from_laplace(model);
            const double gap = std::max(std::fabs(g.compliance - 1.0), std::fabs(g.modulus - 1.0));
            worst = std::max(worst, gap);
            o.require(gap <= 1e-6, label(model));
        }
    }
    o.detail << "max|J_g-1|,|G_g-1|=" << sci(worst);
}

// ---- 5 ----------------------------------------------------------------------
void mittag_leffler(Outcome& o) {
    double worst_series = 0.0, worst_erfcx = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double z = -2.0 * i / 200.0;
        const double value = specfun::mittag_leffler_half(z);
        const double series = oracle::mittag_leffler(0.5, z, 60);
        worst_series = std::max(worst_series, std::fabs(value - series));
        worst_erfcx = std::max(worst_erfcx, std::fabs(value - oracle::erfcx(-z)));
    }
    o.require(worst_series <= 1e-10, "60-term series");
    o.require(worst_erfcx <= 1e-10, "erfcx route");
    const double at_minus_one = specfun::mittag_leffler_half(-1.0);
    const double expected = std::exp(1.0) * std::erfc(1.0);
    o.require(std::fabs(at_minus_one - expected) <= 1e-9, "E(-1)");
    o.require(std::fabs(at_minus_one - 0.42758357615) <= 1e-9, "E(-1) literal");
    o.detail << "max|E-series|=" << sci(worst_series) << " max|E-erfcx|=" << sci(worst_erfcx)
             << " E(-1)=" << specfun::format_double(at_minus_one);
}

// ---- 6 ----------------------------------------------------------------------
void point_values(Outcome& o) {
    const auto bessel = models::make_model(models::ModelParams::bessel(0.0));
    const double j2 = models::creep(bessel, 2.0);
    const double g2 = models::relaxation(bessel, 2.0);
    const double jas = models::asym_J_time(0.0, 1.0);
    // J(2; 0) = 4/3 + 16 - 4 sum e^{-2 j^2} / j^2 over j = j_{2,n}; G(2; 0) = 4 sum e^{-2 j^2} / j^2 over j = j_{0,n}
    double tail_j = 0.0, sum_g = 0.0;
    for (int n = 1; n <= 40; ++n) {
        const double a = oracle::zero(2.0, n), b = oracle::zero(0.0, n);
        tail_j += std::exp(-2.0 * a * a) / (a * a);
        sum_g += std::exp(-2.0 * b * b) / (b * b);
    }
    const double j_oracle = 4.0 / 3.0 + 16.0 - 4.0 * tail_j;
    const double g_oracle = 4.0 * sum_g;
    const double jas_oracle = 1.0 + 4.0 / std::sqrt(std::numbers::pi);
    o.require(std::fabs(j2 - 17.3333333) <= 1e-6, "J(2;0)");
    o.require(std::fabs(j2 - j_oracle) <= 1e-12, "J(2;0) vs oracle");
    o.require(std::fabs(g2 - 6.54e-6) <= 0.01 * 6.54e-6, "G(2;0) within 1% of 6.54e-6");
    o.require(std::fabs(g2 - g_oracle) <= 1e-12 * g_oracle + 1e-20, "G(2;0) vs oracle");
    // 3.2567583 is 1 + 4/sqrt(pi) rounded to 7 decimals; the 1e-9 tolerance applies to the derived value
    o.require(std::fabs(jas - jas_oracle) <= 1e-9, "J_as(1;0) vs 1 + 4/sqrt(pi)");
    o.require(std::fabs(jas - 3.2567583) <= 5e-8, "J_as(1;0) vs its 7-decimal rounding");
    o.detail << "J(2;0)=" << specfun::format_double(j2) << " G(2;0)=" << specfun::format_double(g2)
             << " (oracle " << specfun::format_double(g_oracle) << ", "
             << sci(100.0 * (g2 - 6.54e-6) / 6.54e-6) << "% from 6.54e-6) J_as(1;0)=" << specfun::format_double(jas);
}

// ---- 7 ----------------------------------------------------------------------
void short_time(Outcome& o) {
    const std::vector<double> grid = {0.2, 0.1, 0.05, 0.02, 0.01};
    for (double nu : {-0.5, 0.0, 1.0}) {
        const models::BesselModel model(nu);
        const auto report = models::short_time_agreement(model, grid);
        bool decreasing = true;
        for (std::size_t i = 1; i < report.rows.size(); ++i) {
            decreasing = decreasing && report.rows[i].scaled_residual < report.rows[i - 1].scaled_residual;
        }
        o.require(decreasing && report.decreasing_towards_zero, "nu=" + std::to_string(nu));
        o.detail << "nu=" << nu << ":";
        for (const auto& row : report.rows) o.detail << " " << sci(row.scaled_residual);
        o.detail << "; ";
    }
}

// ---- 8 ----------------------------------------------------------------------
void simulator(Outcome& o) {
    for (double nu : {-0.5, 0.0, 1.0}) {
        for (auto kind : {fracsim::LoadKind::strain, fracsim::LoadKind::stress}) {
            const double exact = kind == fracsim::LoadKind::strain ? oracle::erfcx(2.0 * (nu + 1.0))
                                                                   : 1.0 + 4.0 * (nu + 1.0) / std::sqrt(std::numbers::pi);
            std::vector<double> errors;
            for (double dt : {4e-3, 2e-3, 1e-3}) {
                const auto steps = static_cast<std::size_t>(std::llround(1.0 / dt));
                const auto r = fracsim::simulate_asymptotic(nu, fracsim::LoadHistory::unit_step(kind, dt, steps));
                errors.push_back(std::fabs(r.back() - exact));
            }
            const double p1 = std::log2(errors[0] / errors[1]);
            const double p2 = std::log2(errors[1] / errors[2]);
            const std::string tag = "nu=" + std::to_string(nu) + " " + std::string(fracsim::to_string(kind));
            o.require(p1 >= 1.0 && p2 >= 1.0, tag + " order");
            o.require(errors[2] <= 5e-3, tag + " final error");
            char orders_text[64];
            std::snprintf(orders_text, sizeof orders_text, "%.7f,%.7f", p1, p2);
            o.detail << (kind == fracsim::LoadKind::strain ? "G_as" : "J_as") << "(nu=" << nu << ") order "
                     << orders_text << " err " << sci(errors[2]) << "; ";
        }
    }
}

// ---- 9 ----------------------------------------------------------------------
void interconversion(Outcome& o) {
    const auto grid = log_points(0.1, 2.0, 20);
    double worst = 0.0;
    std::vector<std::pair<std::string, double>> per;
    for (double nu : orders) {
        for (const auto& model : all_families(nu)) {
            if (models::params_of(model).family == models::Family::fmax && nu != orders.front()) continue;
            const auto check = fracsim::interconversion_check(model, grid);
            worst = std::max(worst, check.max_error);
            per.emplace_back(label(model), check.max_error);
            o.require(check.max_error <= 1e-4, label(model));
        }
    }
    o.detail << "max|(J*G)(t)-t|=" << sci(worst) << " over";
    for (const auto& [name, e] : per) o.detail << " " << name;
}

// ---- 10 ---------------------------------------------------------------------
std::pair<int, std::string> run_cli(const std::string& args) {
    const std::string command = std::string(VISCOBESSEL_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    std::array<char, 4096> buffer{};
    std::size_t n = 0;
    while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    std::size_t column(const std::string& name) const {
        const auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) throw std::runtime_error("missing column " + name);
        return static_cast<std::size_t>(it - header.begin());
    }
    double at(const std::string& name, double t) const {
        for (const auto& row : rows) {
            if (std::fabs(row[0] - t) < 1e-12) return row[column(name)];
        }
        throw std::runtime_error("missing row t=" + std::to_string(t));
    }
};

Csv parse_csv(const std::string& text) {
    Csv csv;
    std::istringstream in(text);
    std::string line, field;
    bool first = true;
    while (std::getline(in, line)) {
        std::stringstream ss(line);
        std::vector<std::string> fields;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (first) {
            csv.header = fields;
            first = false;
        } else {
            std::vector<double> row;
            for (const auto& f : fields) row.push_back(std::stod(f));
            csv.rows.push_back(row);
        }
    }
    return csv;
}

void figures(Outcome& o) {
    for (int k = 1; k <= 4; ++k) {
        const auto [code, out] = run_cli("eval --figure " + std::to_string(k));
        o.require(code == 0, "figure " + std::to_string(k) + " exit code");
        const Csv csv = parse_csv(out);
        o.require(csv.header.size() >= 4 && csv.rows.size() == 201, "figure " + std::to_string(k) + " shape");
        const bool creep = k == 1 || k == 3;
        for (std::size_t c = 1; c < csv.header.size(); ++c) {
            bool monotone = true;
            for (std::size_t i = 1; i < csv.rows.size(); ++i) {
                const double step = csv.rows[i][c] - csv.rows[i - 1][c];
                monotone = monotone && (creep ? step >= 0.0 : step <= 0.0) && csv.rows[i][c] > 0.0;
                if (!creep) monotone = monotone && csv.rows[i][c] <= 1.0;
            }
            o.require(monotone, "figure " + std::to_string(k) + " column " + csv.header[c] + " monotonicity");
        }
        switch (k) {
            case 1: {
                const double v = csv.at("J_nu=0", 2.0);
                o.require(std::fabs(v - 17.3333333) <= 1e-6, "figure 1 J(2;0)");
                o.detail << "fig1 J(2;0)=" << specfun::format_double(v) << "; ";
                break;
            }
            case 2: {
                const double v = csv.at("G_nu=0", 2.0);
                o.require(std::fabs(v - 6.54e-6) <= 0.01 * 6.54e-6, "figure 2 G(2;0)");
                o.detail << "fig2 G(2;0)=" << specfun::format_double(v) << "; ";
                break;
            }
            case 3: {
                const double v = csv.at("J_as_nu=0", 1.0);
                o.require(std::fabs(v - (1.0 + 4.0 / std::sqrt(std::numbers::pi))) <= 1e-9, "figure 3 J_as(1;0)");
                o.require(std::fabs(csv.at("J_M", 1.0) - (1.0 + 2.0 / std::sqrt(std::numbers::pi))) <= 1e-12,
                          "figure 3 J_M(1)");
                o.detail << "fig3 J_as(1;0)=" << specfun::format_double(v) << "; ";
                break;
            }
            default: {
                const double v = csv.at("G_as_nu=0", 1.0);
                o.require(std::fabs(v - oracle::erfcx(2.0)) <= 1e-12, "figure 4 G_as(1;0)");
                o.require(std::fabs(csv.at("G_M", 1.0) - oracle::erfcx(1.0)) <= 1e-12, "figure 4 G_M(1)");
                o.detail << "fig4 G_as(1;0)=" << specfun::format_double(v) << "; ";
                break;
            }
        }
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
        {"zero-table oracle", zero_tables},
        {"reciprocity", reciprocity},
        {"series vs Laplace oracle", laplace_oracle},
        {"glass limits", glass_limits},
        {"Mittag-Leffler", mittag_leffler},
        {"derived point values", point_values},
        {"short-time agreement", short_time},
        {"simulator convergence", simulator},
        {"interconversion", interconversion},
        {"figure reproduction", figures},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(outcome);
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail << " [exception: " << e.what() << "]";
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += outcome.pass ? 0 : 1;
        std::printf("criterion %2zu %s  %s (%.1f s)  %s\n", i + 1, outcome.pass ? "PASS" : "FAIL",
                    criteria[i].first.c_str(), seconds, outcome.detail.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
