#include "dto/driver.hpp"

#include <limits>

namespace dto {

std::vector<double> DtoConfig::default_gamma_sweep() {
    std::vector<double> sweep;
    for (int n = 0; n <= 10; ++n) sweep.push_back(static_cast<double>(n) / 10.0);
    return sweep;
}

void DtoConfig::validate() const {
    if (num_passes < 1) throw ConfigError("passes must be >= 1");
    if (const auto* ramp = std::get_if<LinearRamp>(&schedule)) {
        if (!(ramp->c_th > 0.0 && ramp->c_th <= 1.0)) throw ConfigError("c_th must lie in (0, 1]");
        if (ramp->num_passes < 1) throw ConfigError("linear ramp needs P >= 1");
    }
    if (ipd == IpdMode::ProbeLine) {
        if (gamma_sweep.empty()) throw ConfigError("probe line mode needs a non-empty gamma_sweep");
        for (const double g : gamma_sweep) {
            if (!(g >= 0.0 && g <= 1.0)) throw ConfigError("gamma values must lie in [0, 1]");
        }
    }
    cfo.validate();
    // Doubling must not overflow the probe count.
    if (probe_doubling && num_passes > 1) {
        long long np = cfo.n_probes;
        for (int k = 1; k < num_passes; ++k) {
            np *= 2;
            if (np > std::numeric_limits<int>::max() / 2) {
                throw ConfigError("probe doubling overflows the probe count");
            }
        }
    }
}

int double_probes(int n_probes) {
    if (n_probes < 1) throw ConfigError("probe count must be >= 1");
    return 2 * n_probes;
}

RunReport run_dto(const DtoConfig& config, Objective& objective, const InvocationObserver& observer) {
    config.validate();

    ThresholdState threshold;
    threshold.schedule = config.schedule;

    RunReport report;
    const std::uint64_t evals_before = objective.eval_count();
    CfoParams params = config.cfo;
    int invocation = 0;

    const std::vector<double> random_sweep{0.0};
    const std::vector<double>& sweep =
        config.ipd == IpdMode::ProbeLine ? config.gamma_sweep : random_sweep;

    for (int pass = 1; pass <= config.num_passes; ++pass) {
        PassRecord record;
        record.pass_index = pass;
        record.n_probes = params.n_probes;
        if (threshold.enabled) record.threshold = threshold.t_current;

        double pass_best = kBestFitnessSentinel;
        for (const double gamma : sweep) {
            if (config.ipd == IpdMode::ProbeLine) {
                params.ipd = ProbeLineIpd{gamma};
            } else {
                params.ipd = RandomIpd{derive_seed(config.seed, static_cast<std::uint64_t>(invocation))};
            }
            params.reposition_seed = derive_seed(config.seed ^ 0x5eedULL, static_cast<std::uint64_t>(invocation));

            const CfoRun run = run_cfo(params, objective, threshold);
            const OptResult& r = run.result;

            threshold.observe(r.best_value, r.worst_value);
            if (r.best_value >= report.best_value) {
                report.best_value = r.best_value;
                report.best_coords = r.best_coords;
            }
            if (r.worst_value <= report.worst_value) report.worst_value = r.worst_value;
            if (r.best_value >= pass_best) pass_best = r.best_value;

            if (observer) observer(InvocationInfo{pass, invocation, params, threshold, run});
            ++invocation;
        }

        record.best_fitness_this_pass = pass_best;
        record.cumulative_evals = objective.eval_count() - evals_before;
        report.passes.push_back(record);

        if (pass == config.num_passes) break;
        if (std::holds_alternative<LinearRamp>(threshold.schedule)) {
            threshold.t_current = update_threshold_linear(pass, threshold);
        } else {
            threshold.t_current = update_threshold_best_fitness(pass_best);
        }
        if (config.probe_doubling) params.n_probes = double_probes(params.n_probes);
        threshold.enabled = true;
    }

    report.total_evals = report.passes.back().cumulative_evals;
    return report;
}

} // namespace dto
