#include "dto/threshold.hpp"

#include <stdexcept>

namespace dto {

void ThresholdState::observe(double best_value, double worst_value) noexcept {
    if (best_value >= f_star) f_star = best_value;
    if (worst_value <= f_min) f_min = worst_value;
}

bool ThresholdState::has_observations() const noexcept {
    return f_star != kBestFitnessSentinel && f_min != kWorstFitnessSentinel;
}

double apply_threshold(double f_val, const ThresholdState& state) noexcept {
    if (!state.enabled) return f_val;
    const double t = state.t_current;
    const double z = f_val - t;
    // U(z) selects f or T outright; the product form would round
    // (f - T) + T away from f in the last bit.
    return unit_step(z) != 0.0 ? f_val : t;
}

double update_threshold_linear(int k, double f_min, double f_star, const LinearRamp& ramp) {
    if (k < 1) throw std::invalid_argument("threshold update needs a completed pass index k >= 1");
    if (ramp.num_passes < 1) throw std::invalid_argument("linear ramp needs num_passes >= 1");
    const double fraction = ramp.c_th * static_cast<double>(k) / static_cast<double>(ramp.num_passes);
    return f_min + fraction * (f_star - f_min);
}

double update_threshold_linear(int k, const ThresholdState& state) {
    if (!state.has_observations()) {
        throw std::logic_error("threshold update before any pass reported best/worst fitness");
    }
    const auto* ramp = std::get_if<LinearRamp>(&state.schedule);
    if (ramp == nullptr) throw std::logic_error("threshold schedule is not a linear ramp");
    return update_threshold_linear(k, state.f_min, state.f_star, *ramp);
}

double update_threshold_best_fitness(double g_star_k) noexcept { return g_star_k; }

} // namespace dto
