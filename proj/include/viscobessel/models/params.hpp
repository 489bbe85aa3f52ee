#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "viscobessel/error.hpp"

namespace viscobessel::models {

enum class Family { bessel, fmax, asymptotic };

inline std::string_view to_string(Family family) {
    switch (family) {
        case Family::bessel: return "bessel";
        case Family::fmax: return "fmax";
        case Family::asymptotic: return "asymptotic";
    }
    return "unknown";
}

inline std::optional<Family> parse_family(std::string_view name) {
    if (name == "bessel") return Family::bessel;
    if (name == "fmax") return Family::fmax;
    if (name == "asymptotic") return Family::asymptotic;
    return std::nullopt;
}

/// Family tag plus its parameters. Times are non-dimensional with the
/// relaxation time tau = 1; for the fractional Maxwell model tau^{1/2} = b1/(2 mu)
/// and the shear parameter is mu = b1/(2 a1).
struct ModelParams {
    Family family = Family::asymptotic;
    double nu = 0.0;  // bessel, asymptotic
    double a1 = 1.0;  // fmax
    double b1 = 1.0;  // fmax

    static ModelParams bessel(double nu) { return checked({Family::bessel, nu, 1.0, 1.0}); }
    static ModelParams asymptotic(double nu) { return checked({Family::asymptotic, nu, 1.0, 1.0}); }
    static ModelParams fmax(double a1, double b1) { return checked({Family::fmax, 0.0, a1, b1}); }

    static ModelParams checked(ModelParams p) {
        if (p.family == Family::fmax) {
            if (!std::isfinite(p.a1) || !std::isfinite(p.b1) || !(p.a1 > 0.0) || !(p.b1 > 0.0)) {
                throw domain_error("fmax model requires a1 > 0 and b1 > 0");
            }
        } else if (!std::isfinite(p.nu) || !(p.nu > -1.0)) {
            throw domain_error(std::string(to_string(p.family)) + " model requires nu > -1");
        }
        return p;
    }

    friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// Truncation of the Dirichlet series. tol bounds the absolute tail;
/// series evaluation is refused below t_floor.
struct TruncationPolicy {
    double tol = 1e-10;
    std::size_t n_min = 8;
    std::size_t n_max = 200;
    double t_floor = 1e-3;

    void validate() const {
        if (!(tol > 0.0) || !(t_floor > 0.0) || n_min < 1 || n_min > n_max) {
            throw domain_error("TruncationPolicy: need tol > 0, t_floor > 0 and 1 <= n_min <= n_max");
        }
    }
};

enum class FunctionKind { creep, relaxation, creep_memory, relaxation_memory };

inline std::string_view to_string(FunctionKind kind) {
    switch (kind) {
        case FunctionKind::creep: return "J";
        case FunctionKind::relaxation: return "G";
        case FunctionKind::creep_memory: return "psi";
        case FunctionKind::relaxation_memory: return "phi";
    }
    return "?";
}

inline std::optional<FunctionKind> parse_function_kind(std::string_view name) {
    if (name == "J") return FunctionKind::creep;
    if (name == "G") return FunctionKind::relaxation;
    if (name == "psi" || name == "Psi") return FunctionKind::creep_memory;
    if (name == "phi" || name == "Phi") return FunctionKind::relaxation_memory;
    return std::nullopt;
}

}  // namespace viscobessel::models
