#pragma once

#include <complex>
#include <concepts>
#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include "viscobessel/error.hpp"
#include "viscobessel/laplace/laplace_function.hpp"
#include "viscobessel/models/bessel_model.hpp"
#include "viscobessel/models/fractional_maxwell.hpp"
#include "viscobessel/models/params.hpp"

namespace viscobessel::models {

/// What every model family exposes.
template <class M>
concept MaterialFunctions = requires(const M& m, double t, std::complex<double> s) {
    { m.params() } -> std::convertible_to<ModelParams>;
    { m.creep(t) } -> std::convertible_to<double>;
    { m.relaxation(t) } -> std::convertible_to<double>;
    { m.memory_psi(t) } -> std::convertible_to<double>;
    { m.memory_phi(t) } -> std::convertible_to<double>;
    { m.creep_integral(t) } -> std::convertible_to<double>;
    { m.relaxation_integral(t) } -> std::convertible_to<double>;
    { m.glass_compliance() } -> std::convertible_to<double>;
    { m.glass_modulus() } -> std::convertible_to<double>;
    { m.template creep_laplace<double>(s) } -> std::convertible_to<std::complex<double>>;
    { m.template relaxation_laplace<double>(s) } -> std::convertible_to<std::complex<double>>;
};

static_assert(MaterialFunctions<BesselModel>);
static_assert(MaterialFunctions<FractionalMaxwell>);
static_assert(MaterialFunctions<MaxwellLike>);

using MaterialModel = std::variant<BesselModel, FractionalMaxwell, MaxwellLike>;

inline MaterialModel make_model(const ModelParams& params, const TruncationPolicy& policy = {},
                                specfun::ZeroCache& cache = specfun::ZeroCache::global()) {
    const ModelParams p = ModelParams::checked(params);
    switch (p.family) {
        case Family::bessel: return BesselModel(p.nu, policy, cache);
        case Family::fmax: return FractionalMaxwell(p.a1, p.b1);
        case Family::asymptotic: return MaxwellLike(p.nu);
    }
    throw domain_error("make_model: unknown family");
}

inline const ModelParams& params_of(const MaterialModel& model) {
    return std::visit([](const auto& m) -> const ModelParams& { return m.params(); }, model);
}

/// Smallest time at which the model's time-domain evaluators answer.
inline double time_floor(const MaterialModel& model) {
    if (const auto* b = std::get_if<BesselModel>(&model)) {
        return b->policy().t_floor;
    }
    return 0.0;
}

inline double evaluate(const MaterialModel& model, FunctionKind kind, double t) {
    return std::visit(
        [&](const auto& m) {
            switch (kind) {
                case FunctionKind::creep: return m.creep(t);
                case FunctionKind::relaxation: return m.relaxation(t);
                case FunctionKind::creep_memory: return m.memory_psi(t);
                case FunctionKind::relaxation_memory: return m.memory_phi(t);
            }
            return 0.0;
        },
        model);
}

inline double creep(const MaterialModel& model, double t) { return evaluate(model, FunctionKind::creep, t); }
inline double relaxation(const MaterialModel& model, double t) {
    return evaluate(model, FunctionKind::relaxation, t);
}

template <class Real>
std::complex<Real> creep_laplace(const MaterialModel& model, const std::complex<Real>& s) {
    return std::visit([&](const auto& m) { return m.template creep_laplace<Real>(s); }, model);
}

template <class Real>
std::complex<Real> relaxation_laplace(const MaterialModel& model, const std::complex<Real>& s) {
    return std::visit([&](const auto& m) { return m.template relaxation_laplace<Real>(s); }, model);
}

/// J~(s) = (s J~)/s as an invertible transform.
template <class Real>
laplace::LaplaceFunction<Real> creep_transform(const MaterialModel& model) {
    return {[model](const std::complex<Real>& s) { return creep_laplace<Real>(model, s) / s; },
            std::string(to_string(params_of(model).family)) + " J~(s)"};
}

template <class Real>
laplace::LaplaceFunction<Real> relaxation_transform(const MaterialModel& model) {
    return {[model](const std::complex<Real>& s) { return relaxation_laplace<Real>(model, s) / s; },
            std::string(to_string(params_of(model).family)) + " G~(s)"};
}

/// |s J~(s) * s G~(s) - 1|.
template <class Real>
Real reciprocity_defect(const MaterialModel& model, const std::complex<Real>& s) {
    using std::abs;
    return abs(creep_laplace<Real>(model, s) * relaxation_laplace<Real>(model, s) - Real(1));
}

struct GlassLimits {
    double compliance = 0.0;  // J_g = lim_{s->inf} s J~(s)
    double modulus = 0.0;     // G_g = lim_{s->inf} s G~(s)
};

/// Glass constants from the Laplace domain at large real s (Tauberian limit).
/// The residual is O(s^{-1/2}); s = 1e16 leaves about 1e-8 relative.
inline GlassLimits glass_limits_from_laplace(const MaterialModel& model, double s = 1e16) {
    const std::complex<double> large(s, 0.0);
    return {creep_laplace<double>(model, large).real(), relaxation_laplace<double>(model, large).real()};
}

struct CurveSample {
    double t = 0.0;
    double value = 0.0;
};

struct MaterialCurve {
    FunctionKind kind = FunctionKind::creep;
    ModelParams params;
    std::vector<CurveSample> samples;
};

inline MaterialCurve evaluate_curve(const MaterialModel& model, FunctionKind kind, const std::vector<double>& times) {
    MaterialCurve curve{kind, params_of(model), {}};
    curve.samples.reserve(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (i > 0 && !(times[i] > times[i - 1])) {
            throw domain_error("evaluate_curve: times must be strictly increasing");
        }
        curve.samples.push_back({times[i], evaluate(model, kind, times[i])});
    }
    return curve;
}

/// J non-decreasing, G and the memory functions non-increasing, within slack.
inline bool satisfies_monotonicity(const MaterialCurve& curve, double slack = 1e-12) {
    for (std::size_t i = 1; i < curve.samples.size(); ++i) {
        const double step = curve.samples[i].value - curve.samples[i - 1].value;
        const double scale = slack * std::max(1.0, std::fabs(curve.samples[i - 1].value));
        if (curve.kind == FunctionKind::creep ? step < -scale : step > scale) {
            return false;
        }
    }
    return true;
}

}  // namespace viscobessel::models
