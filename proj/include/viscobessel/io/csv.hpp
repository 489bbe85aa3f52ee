#pragma once

// CSV files with a single header row and 17-significant-digit numbers.
//
//   load / response histories:  t,value
//   material curves:            t,<column>[,<column>...]

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "viscobessel/error.hpp"
#include "viscobessel/fracsim/load_history.hpp"
#include "viscobessel/models/material_model.hpp"
#include "viscobessel/specfun/zero_cache.hpp"

namespace viscobessel::io {

using specfun::format_double;

/// Relative tolerance on t_k = k dt when reading a uniform grid.
inline constexpr double grid_tolerance = 1e-9;

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

inline std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

inline Table read_table(std::istream& in) {
    Table table;
    std::string line;
    std::size_t line_number = 0;
    if (!std::getline(in, line)) {
        throw parse_error(1, "empty file, expected a header row");
    }
    ++line_number;
    for (auto field : split_fields(trim(line))) {
        table.header.emplace_back(trim(field));
    }
    while (std::getline(in, line)) {
        ++line_number;
        const auto content = trim(line);
        if (content.empty()) continue;
        const auto fields = split_fields(content);
        if (fields.size() != table.header.size()) {
            throw parse_error(line_number, "expected " + std::to_string(table.header.size()) + " fields, found " +
                                               std::to_string(fields.size()));
        }
        std::vector<double> row;
        row.reserve(fields.size());
        for (auto field : fields) {
            row.push_back(specfun::parse_double(trim(field), line_number));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

inline void write_table(std::ostream& out, const Table& table) {
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        out << (i ? "," : "") << table.header[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << format_double(row[i]);
        }
        out << '\n';
    }
}

/// Parses `t,value` into a load history; the grid must start at 0 and be uniform.
inline fracsim::LoadHistory read_load_history(std::istream& in, fracsim::LoadKind kind) {
    const Table table = read_table(in);
    if (table.header.size() != 2 || table.header[0] != "t" || table.header[1] != "value") {
        throw parse_error(1, "expected header 't,value'");
    }
    if (table.rows.size() < 2) {
        throw parse_error(table.rows.size() + 2, "need at least two samples");
    }
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        if (!std::isfinite(table.rows[i][0]) || !std::isfinite(table.rows[i][1])) {
            throw parse_error(i + 2, "non-finite value");
        }
    }
    if (table.rows[0][0] != 0.0) {
        throw refusal_error("load history must start at t = 0");
    }
    const double dt = table.rows[1][0];
    if (!(dt > 0.0)) {
        throw refusal_error("load history times must increase");
    }
    std::vector<double> samples;
    samples.reserve(table.rows.size());
    for (std::size_t k = 0; k < table.rows.size(); ++k) {
        const double expected = static_cast<double>(k) * dt;
        if (std::fabs(table.rows[k][0] - expected) > grid_tolerance * std::max(1.0, expected)) {
            throw refusal_error("non-uniform grid at data row " + std::to_string(k + 1) + " (t = " +
                                format_double(table.rows[k][0]) + ", expected " + format_double(expected) + ")");
        }
        samples.push_back(table.rows[k][1]);
    }
    return {kind, dt, std::move(samples)};
}

inline void write_history(std::ostream& out, double dt, const std::vector<double>& values) {
    out << "t,value\n";
    for (std::size_t k = 0; k < values.size(); ++k) {
        out << format_double(static_cast<double>(k) * dt) << ',' << format_double(values[k]) << '\n';
    }
}

inline void write_load_history(std::ostream& out, const fracsim::LoadHistory& load) {
    write_history(out, load.dt, load.samples);
}

inline void write_response_history(std::ostream& out, const fracsim::ResponseHistory& response) {
    write_history(out, response.dt, response.values);
}

inline void write_curve(std::ostream& out, const models::MaterialCurve& curve) {
    out << "t," << models::to_string(curve.kind) << '\n';
    for (const auto& sample : curve.samples) {
        out << format_double(sample.t) << ',' << format_double(sample.value) << '\n';
    }
}

/// Reads a two-column material curve written by write_curve.
inline models::MaterialCurve read_curve(std::istream& in, const models::ModelParams& params) {
    const Table table = read_table(in);
    if (table.header.size() != 2 || table.header[0] != "t") {
        throw parse_error(1, "expected header 't,<J|G|psi|phi>'");
    }
    const auto kind = models::parse_function_kind(table.header[1]);
    if (!kind) {
        throw parse_error(1, "unknown material function '" + table.header[1] + "'");
    }
    models::MaterialCurve curve{*kind, params, {}};
    for (const auto& row : table.rows) {
        curve.samples.push_back({row[0], row[1]});
    }
    return curve;
}

}  // namespace viscobessel::io
