#pragma once

#include "dto/cfo.hpp"
#include "dto/objective.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dto {

/// Outcome of sampling a thresholded landscape.
struct FloorStats {
    std::uint64_t n_samples = 0;
    std::uint64_t n_on_floor = 0;
    double p_above = 0.0;  // 1 - n_on_floor / n_samples
    double threshold_used = 0.0;
    double on_floor_margin = kFloorMargin;
};

/// First n primes, ascending.
std::vector<unsigned> first_primes(std::size_t n);

/// Van der Corput radical inverse of index in the given base.
double radical_inverse(std::uint64_t index, unsigned base);

/// Halton point in [0, 1)^n_dims; axis d uses the (d+1)-th prime as base.
std::vector<double> low_discrepancy_point(std::uint64_t index, std::size_t n_dims);

/// Maps Halton points 1..n_samples into the objective's space, evaluates
/// g = max(f, threshold) at each and counts samples with g - threshold <= margin
/// as lying on the floor. Evaluations go to `objective`'s own counter.
FloorStats sample_threshold_floor(Objective& objective, double threshold, std::uint64_t n_samples,
                                  double margin = kFloorMargin);

} // namespace dto
