#pragma once

#include <variant>

namespace dto {

/// Linear ramp between the worst and best overall fitness:
/// T_k = F_min + (c_th * k / P) * (F* - F_min).
struct LinearRamp {
    double c_th = 0.98;
    int num_passes = 10;

    friend bool operator==(const LinearRamp&, const LinearRamp&) = default;
};

/// Next threshold equals the best fitness returned by the pass just completed.
struct BestFitnessSchedule {
    friend bool operator==(const BestFitnessSchedule&, const BestFitnessSchedule&) = default;
};

using ThresholdSchedule = std::variant<LinearRamp, BestFitnessSchedule>;

inline constexpr double kBestFitnessSentinel = -1e300;
inline constexpr double kWorstFitnessSentinel = 1e300;

struct ThresholdState {
    bool enabled = false;
    double t_current = 0.0;
    ThresholdSchedule schedule = LinearRamp{};
    double f_star = kBestFitnessSentinel;  // best overall fitness so far
    double f_min = kWorstFitnessSentinel;  // worst overall fitness so far

    /// Folds one optimizer return into the running best/worst.
    /// best uses >=, worst uses <=, so later ties win.
    void observe(double best_value, double worst_value) noexcept;
    bool has_observations() const noexcept;
};

/// U(z): 1 for z >= 0, else 0.
constexpr double unit_step(double z) noexcept { return z < 0.0 ? 0.0 : 1.0; }

/// g = (f - T) * U(f - T) + T when enabled, f otherwise.
double apply_threshold(double f_val, const ThresholdState& state) noexcept;

/// Threshold for the pass after pass k (k >= 1). Throws std::logic_error if
/// f_star or f_min have not been updated yet, std::invalid_argument if k < 1.
double update_threshold_linear(int k, const ThresholdState& state);
double update_threshold_linear(int k, double f_min, double f_star, const LinearRamp& ramp);

double update_threshold_best_fitness(double g_star_k) noexcept;

} // namespace dto
