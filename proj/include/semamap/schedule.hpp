#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "semamap/errors.hpp"

namespace semamap {

/// Stimulus presentation order during training.
enum class Presentation {
    Cyclic,        ///< step l presents stimulus ((l-1) mod K) + 1
    UniformRandom, ///< step l presents a seeded uniform draw
};

/**
 * @brief Decay schedules and bookkeeping for one training run.
 *
 * The learning rate is rho0 * beta^(l-1) and the neighborhood dispersion is
 * sigma0 * alpha^(l-1), for step index l = 1..steps. Defaults produce a
 * well-formed 20x20 map from the builtin stimuli; see README for how they
 * were calibrated.
 */
struct TrainingSchedule {
    double rho0 = 0.5;      ///< initial learning rate, in (0, 1]
    double beta = 0.9995;   ///< learning-rate decay per step, in (0, 1)
    double sigma0 = 10.0;   ///< initial neighborhood dispersion, grid-distance units
    double alpha = 0.9995;  ///< dispersion decay per step, in (0, 1)
    std::uint64_t steps = 10000;
    Presentation presentation = Presentation::UniformRandom;
    std::uint64_t seed = 0; ///< drives the presentation order draws

    friend bool operator==(const TrainingSchedule&, const TrainingSchedule&) = default;
};

inline void validate(const TrainingSchedule& s) {
    if (!(s.rho0 > 0.0 && s.rho0 <= 1.0)) {
        throw invalid_parameter_error("schedule: rho0 must be in (0, 1], got " + std::to_string(s.rho0));
    }
    if (!(s.beta > 0.0 && s.beta < 1.0)) {
        throw invalid_parameter_error("schedule: beta must be in (0, 1), got " + std::to_string(s.beta));
    }
    if (!(s.sigma0 > 0.0)) {
        throw invalid_parameter_error("schedule: sigma0 must be > 0, got " + std::to_string(s.sigma0));
    }
    if (!(s.alpha > 0.0 && s.alpha < 1.0)) {
        throw invalid_parameter_error("schedule: alpha must be in (0, 1), got " + std::to_string(s.alpha));
    }
    if (s.steps < 1) {
        throw invalid_parameter_error("schedule: steps must be >= 1");
    }
}

/// Learning rate at step l >= 1: rho0 * beta^(l-1). Strictly decreasing, in (0, rho0].
inline double learning_rate(std::uint64_t l, const TrainingSchedule& s) {
    if (l < 1) {
        throw invalid_step_error("learning_rate: step index must be >= 1, got " + std::to_string(l));
    }
    return s.rho0 * std::pow(s.beta, static_cast<double>(l - 1));
}

/// Neighborhood dispersion at step l >= 1: sigma0 * alpha^(l-1). Strictly decreasing, in (0, sigma0].
inline double sigma_at(std::uint64_t l, const TrainingSchedule& s) {
    if (l < 1) {
        throw invalid_step_error("sigma_at: step index must be >= 1, got " + std::to_string(l));
    }
    return s.sigma0 * std::pow(s.alpha, static_cast<double>(l - 1));
}

} // namespace semamap
