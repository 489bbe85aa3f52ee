#pragma once

#include <cmath>
#include <string_view>
#include <utility>
#include <vector>

#include "viscobessel/error.hpp"

namespace viscobessel::fracsim {

enum class LoadKind { stress, strain };

inline std::string_view to_string(LoadKind kind) { return kind == LoadKind::stress ? "stress" : "strain"; }

/// Uniformly sampled input history, samples[k] at t_k = k dt, k = 0..K.
/// A non-zero samples[0] is an instantaneous step at t = 0+.
struct LoadHistory {
    LoadKind kind = LoadKind::stress;
    double dt = 0.0;
    std::vector<double> samples;

    LoadHistory() = default;
    LoadHistory(LoadKind k, double step, std::vector<double> values) : kind(k), dt(step), samples(std::move(values)) {
        validate();
    }

    std::size_t size() const noexcept { return samples.size(); }
    double time(std::size_t k) const noexcept { return static_cast<double>(k) * dt; }

    void validate() const {
        if (!std::isfinite(dt) || !(dt > 0.0)) {
            throw domain_error("LoadHistory: dt must be positive");
        }
        if (samples.size() < 2) {
            throw domain_error("LoadHistory: need at least two samples");
        }
        for (double v : samples) {
            if (!std::isfinite(v)) {
                throw domain_error("LoadHistory: samples must be finite");
            }
        }
    }

    /// f(t_k) for k = 0..K.
    template <class F>
    static LoadHistory sampled(LoadKind kind, double dt, std::size_t steps, F&& f) {
        std::vector<double> values(steps + 1);
        for (std::size_t k = 0; k <= steps; ++k) {
            values[k] = f(static_cast<double>(k) * dt);
        }
        return {kind, dt, std::move(values)};
    }

    static LoadHistory unit_step(LoadKind kind, double dt, std::size_t steps) {
        return {kind, dt, std::vector<double>(steps + 1, 1.0)};
    }
};

/// Conjugate variable on the input grid (strain for a stress load and vice versa).
struct ResponseHistory {
    LoadKind kind = LoadKind::strain;
    double dt = 0.0;
    std::vector<double> values;

    std::size_t size() const noexcept { return values.size(); }
    double time(std::size_t k) const noexcept { return static_cast<double>(k) * dt; }
    double back() const { return values.back(); }
};

inline LoadKind conjugate(LoadKind kind) { return kind == LoadKind::stress ? LoadKind::strain : LoadKind::stress; }

}  // namespace viscobessel::fracsim
