#include "dto/qr_explorer.hpp"

#include "dto/threshold.hpp"

namespace dto {

std::vector<unsigned> first_primes(std::size_t n) {
    std::vector<unsigned> primes;
    primes.reserve(n);
    for (unsigned candidate = 2; primes.size() < n; ++candidate) {
        bool is_prime = true;
        for (const unsigned p : primes) {
            if (p * p > candidate) break;
            if (candidate % p == 0) {
                is_prime = false;
                break;
            }
        }
        if (is_prime) primes.push_back(candidate);
    }
    return primes;
}

double radical_inverse(std::uint64_t index, unsigned base) {
    const double inv_base = 1.0 / static_cast<double>(base);
    double scale = inv_base;
    double result = 0.0;
    while (index > 0) {
        result += static_cast<double>(index % base) * scale;
        index /= base;
        scale *= inv_base;
    }
    return result;
}

std::vector<double> low_discrepancy_point(std::uint64_t index, std::size_t n_dims) {
    const auto bases = first_primes(n_dims);
    std::vector<double> point(n_dims);
    for (std::size_t d = 0; d < n_dims; ++d) point[d] = radical_inverse(index, bases[d]);
    return point;
}

FloorStats sample_threshold_floor(Objective& objective, double threshold, std::uint64_t n_samples,
                                  double margin) {
    if (n_samples < 1) throw ConfigError("floor sampling needs at least one sample");
    const DecisionSpace& space = objective.space();
    const std::size_t nd = space.n_dims();
    const auto bases = first_primes(nd);

    ThresholdState state;
    state.enabled = true;
    state.t_current = threshold;

    std::vector<double> x(nd);
    std::uint64_t on_floor = 0;
    for (std::uint64_t s = 1; s <= n_samples; ++s) {
        for (std::size_t d = 0; d < nd; ++d) {
            x[d] = space.lower(d) + radical_inverse(s, bases[d]) * space.width(d);
        }
        const double g = apply_threshold(objective.evaluate(x), state);
        if (g - threshold <= margin) ++on_floor;
    }

    FloorStats stats;
    stats.n_samples = n_samples;
    stats.n_on_floor = on_floor;
    stats.p_above = 1.0 - static_cast<double>(on_floor) / static_cast<double>(n_samples);
    stats.threshold_used = threshold;
    stats.on_floor_margin = margin;
    return stats;
}

} // namespace dto
