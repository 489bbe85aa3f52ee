#pragma once

// Curve presets reproducing the four material-function figures:
//   1: Bessel creep J(t; nu),       nu = -0.5, 0, 0.5, 1
//   2: Bessel relaxation G(t; nu),  nu = -0.5, 0, 0.5, 1
//   3: Maxwell-like creep J_as(t; nu), nu = -0.8, 0, 0.5, with J_M (a1 = b1 = 1)
//   4: Maxwell-like relaxation G_as(t; nu), same set, with G_M
// on t = 0.01 k, k = 0..200 (the Bessel figures replace t = 0 by t_floor).

#include <cstdio>
#include <string>
#include <vector>

#include "viscobessel/error.hpp"
#include "viscobessel/io/csv.hpp"
#include "viscobessel/models/material_model.hpp"

namespace viscobessel::cli {

inline std::string order_label(double nu) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%g", nu);
    return buffer;
}

struct FigureSpec {
    models::FunctionKind kind;
    std::vector<models::ModelParams> curves;
    std::vector<std::string> labels;
};

inline FigureSpec figure_spec(int figure) {
    using models::ModelParams;
    switch (figure) {
        case 1:
        case 2: {
            FigureSpec spec{figure == 1 ? models::FunctionKind::creep : models::FunctionKind::relaxation, {}, {}};
            for (double nu : {-0.5, 0.0, 0.5, 1.0}) {
                spec.curves.push_back(ModelParams::bessel(nu));
                spec.labels.push_back(std::string(figure == 1 ? "J" : "G") + "_nu=" + order_label(nu));
            }
            return spec;
        }
        case 3:
        case 4: {
            const char* fn = figure == 3 ? "J" : "G";
            FigureSpec spec{figure == 3 ? models::FunctionKind::creep : models::FunctionKind::relaxation, {}, {}};
            spec.curves.push_back(ModelParams::fmax(1.0, 1.0));
            spec.labels.push_back(std::string(fn) + "_M");
            for (double nu : {-0.8, 0.0, 0.5}) {
                spec.curves.push_back(ModelParams::asymptotic(nu));
                spec.labels.push_back(std::string(fn) + "_as_nu=" + order_label(nu));
            }
            return spec;
        }
        default: throw domain_error("figure must be 1, 2, 3 or 4");
    }
}

inline std::vector<double> figure_times(double first) {
    std::vector<double> t{first};
    for (int k = 1; k <= 200; ++k) {
        t.push_back(k / 100.0);
    }
    return t;
}

inline io::Table figure_table(int figure, const models::TruncationPolicy& policy, specfun::ZeroCache& cache) {
    const FigureSpec spec = figure_spec(figure);
    const double first = (figure <= 2) ? policy.t_floor : 0.0;
    const auto times = figure_times(first);
    io::Table table;
    table.header.push_back("t");
    table.header.insert(table.header.end(), spec.labels.begin(), spec.labels.end());
    table.rows.assign(times.size(), {});
    for (std::size_t i = 0; i < times.size(); ++i) {
        table.rows[i].push_back(times[i]);
    }
    for (const auto& params : spec.curves) {
        const auto model = models::make_model(params, policy, cache);
        for (std::size_t i = 0; i < times.size(); ++i) {
            table.rows[i].push_back(models::evaluate(model, spec.kind, times[i]));
        }
    }
    return table;
}

/// gnuplot script plotting every column of `csv_path` against t.
inline std::string gnuplot_script(const io::Table& table, const std::string& csv_path, const std::string& ylabel) {
    std::string script = "set datafile separator ','\nset key autotitle columnhead\nset xlabel 't'\nset ylabel '" +
                         ylabel + "'\nplot ";
    for (std::size_t c = 1; c < table.header.size(); ++c) {
        script += (c > 1 ? ", " : "") + std::string("'") + csv_path + "' using 1:" + std::to_string(c + 1) +
                  " with lines";
    }
    return script + "\n";
}

}  // namespace viscobessel::cli
