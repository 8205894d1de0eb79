#pragma once

#include "dto/cfo.hpp"
#include "dto/objective.hpp"
#include "dto/threshold.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace dto {

enum class IpdMode { ProbeLine, Random };

struct DtoConfig {
    int num_passes = 6;
    ThresholdSchedule schedule = LinearRamp{0.6, 6};
    bool probe_doubling = true;
    IpdMode ipd = IpdMode::ProbeLine;
    std::vector<double> gamma_sweep = default_gamma_sweep();
    std::uint64_t seed = 1;  // Random IPD only
    // cfo.ipd is overwritten per invocation from ipd/gamma_sweep/seed; cfo.n_probes is N_p for pass 1.
    CfoParams cfo{};

    /// {0.0, 0.1, ..., 1.0}
    static std::vector<double> default_gamma_sweep();

    /// Throws ConfigError.
    void validate() const;
};

struct PassRecord {
    int pass_index = 0;
    std::optional<double> threshold;  // absent for pass 1
    double best_fitness_this_pass = 0.0;
    std::uint64_t cumulative_evals = 0;
    int n_probes = 0;
};

struct RunReport {
    std::vector<double> best_coords;
    double best_value = kBestFitnessSentinel;
    std::uint64_t total_evals = 0;
    std::vector<PassRecord> passes;
    double worst_value = kWorstFitnessSentinel;
};

/// Everything an observer may want from one inner-optimizer invocation.
struct InvocationInfo {
    int pass_index;
    int invocation;  // 0-based across the whole run
    const CfoParams& params;
    const ThresholdState& threshold;
    const CfoRun& run;
};

using InvocationObserver = std::function<void(const InvocationInfo&)>;

int double_probes(int n_probes);

/// Runs the pass loop. Pass 1 is unthresholded; after every pass the
/// threshold is recomputed from the configured schedule and, with
/// probe_doubling, the probe count doubles.
RunReport run_dto(const DtoConfig& config, Objective& objective,
                  const InvocationObserver& observer = {});

} // namespace dto
