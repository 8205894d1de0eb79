#include "dto/cfo.hpp"

#include <cmath>
#include <string>

namespace dto {

void CfoParams::validate() const {
    if (n_probes < 1) throw ConfigError("CFO needs at least one probe");
    if (n_steps < 0) throw ConfigError("CFO step count must be non-negative");
    if (!std::isfinite(g_const) || !std::isfinite(delta_t) || !std::isfinite(alpha) ||
        !std::isfinite(beta)) {
        throw ConfigError("CFO constants must be finite");
    }
    if (!(frep_init >= 0.05 && frep_init <= 1.0)) {
        throw ConfigError("frep_init must lie in [0.05, 1]");
    }
    if (const auto* line = std::get_if<ProbeLineIpd>(&ipd)) {
        if (!(line->gamma >= 0.0 && line->gamma <= 1.0)) {
            throw ConfigError("probe line gamma must lie in [0, 1]");
        }
    }
}

SwarmHistory::SwarmHistory(int n_probes, std::size_t n_dims, int n_steps)
    : n_probes_(n_probes), n_dims_(n_dims), n_steps_(n_steps) {
    if (n_probes < 1 || n_dims < 1 || n_steps < 0) {
        throw ConfigError("swarm history needs n_probes >= 1, n_dims >= 1, n_steps >= 0");
    }
    const std::size_t steps = static_cast<std::size_t>(n_steps) + 1;
    positions_.assign(steps * n_probes * n_dims, 0.0);
    accelerations_.assign(steps * n_probes * n_dims, 0.0);
    fitness_.assign(steps * n_probes, 0.0);
}

void probe_line_ipd(double gamma, const DecisionSpace& space, SwarmHistory& history) {
    const std::size_t nd = space.n_dims();
    const int np = history.n_probes();
    for (int p = 0; p < np; ++p) {
        for (std::size_t i = 0; i < nd; ++i) {
            history.r(p, i, 0) = space.lower(i) + gamma * space.width(i);
        }
    }
    const int per_axis = np / static_cast<int>(nd);
    if (per_axis < 2) return;
    for (std::size_t i = 0; i < nd; ++i) {
        const double delta = space.width(i) / static_cast<double>(per_axis - 1);
        for (int k = 0; k < per_axis; ++k) {
            const int p = k + per_axis * static_cast<int>(i);
            history.r(p, i, 0) = space.lower(i) + static_cast<double>(k) * delta;
        }
    }
}

void random_ipd(Rng& rng, const DecisionSpace& space, SwarmHistory& history) {
    for (int p = 0; p < history.n_probes(); ++p) {
        for (std::size_t i = 0; i < space.n_dims(); ++i) {
            history.r(p, i, 0) = rng.uniform(space.lower(i), space.upper(i));
        }
    }
}

void step_positions(SwarmHistory& history, int j, double delta_t) {
    const double dt2 = delta_t * delta_t;
    for (int p = 0; p < history.n_probes(); ++p) {
        for (std::size_t i = 0; i < history.n_dims(); ++i) {
            history.r(p, i, j) = history.r(p, i, j - 1) + 0.5 * history.a(p, i, j - 1) * dt2;
        }
    }
}

void retrieve_errant(SwarmHistory& history, int j, double frep, const DecisionSpace& space) {
    for (int p = 0; p < history.n_probes(); ++p) {
        for (std::size_t i = 0; i < history.n_dims(); ++i) {
            double& x = history.r(p, i, j);
            const double prev = history.r(p, i, j - 1);
            if (x < space.lower(i)) x = space.lower(i) + frep * (prev - space.lower(i));
            if (x > space.upper(i)) x = space.upper(i) - frep * (space.upper(i) - prev);
        }
    }
}

void compute_accelerations(SwarmHistory& history, int j, const CfoParams& params) {
    const int np = history.n_probes();
    const std::size_t nd = history.n_dims();
    for (int p = 0; p < np; ++p) {
        for (std::size_t i = 0; i < nd; ++i) history.a(p, i, j) = 0.0;
        const auto rp = history.position(p, j);
        for (int k = 0; k < np; ++k) {
            if (k == p) continue;
            const double dm = history.m(k, j) - history.m(p, j);
            const double numerator = unit_step(dm) * dm;
            const double num_pow = std::pow(numerator, params.alpha);
            if (num_pow == 0.0) continue;
            const auto rk = history.position(k, j);
            double sum_sq = 0.0;
            for (std::size_t l = 0; l < nd; ++l) {
                const double d = rk[l] - rp[l];
                sum_sq += d * d;
            }
            const double denom = std::sqrt(sum_sq);
            if (denom == 0.0) continue;
            const double den_pow = std::pow(denom, params.beta);
            for (std::size_t i = 0; i < nd; ++i) {
                history.a(p, i, j) += params.g_const * (rk[i] - rp[i]) * num_pow / den_pow;
            }
        }
    }
}

double cycle_frep(double frep) noexcept {
    double next = frep + 0.05;
    const double lattice = std::round(next * 20.0);
    if (std::abs(next * 20.0 - lattice) < 1e-9) next = lattice / 20.0;
    return next > 1.0 ? 0.05 : next;
}

FitnessExtreme scan_best(const SwarmHistory& history, int up_to_step) {
    FitnessExtreme best{history.m(0, 0), 0, 0};
    for (int j = 0; j <= up_to_step; ++j) {
        for (int p = 0; p < history.n_probes(); ++p) {
            if (history.m(p, j) >= best.value) best = {history.m(p, j), p, j};
        }
    }
    return best;
}

FitnessExtreme scan_worst(const SwarmHistory& history, int up_to_step) {
    FitnessExtreme worst{history.m(0, 0), 0, 0};
    for (int j = 0; j <= up_to_step; ++j) {
        for (int p = 0; p < history.n_probes(); ++p) {
            if (history.m(p, j) <= worst.value) worst = {history.m(p, j), p, j};
        }
    }
    return worst;
}

int reposition_floor_probes(SwarmHistory& history, int p, int j, Objective& objective,
                            const ThresholdState& threshold, Rng& rng, double margin,
                            int max_iterations) {
    if (!threshold.enabled) return 0;
    const DecisionSpace& space = objective.space();
    int iterations = 0;
    while (history.m(p, j) - threshold.t_current < margin && iterations < max_iterations) {
        auto x = history.position(p, j);
        for (std::size_t i = 0; i < space.n_dims(); ++i) {
            x[i] = rng.uniform(space.lower(i), space.upper(i));
        }
        history.m(p, j) = apply_threshold(objective.evaluate(x), threshold);
        ++iterations;
    }
    return iterations;
}

CfoRun run_cfo(const CfoParams& params, Objective& objective, const ThresholdState& threshold) {
    params.validate();
    const DecisionSpace& space = objective.space();
    const int np = params.n_probes;
    const int nt = params.n_steps;
    SwarmHistory history(np, space.n_dims(), nt);

    const auto* random = std::get_if<RandomIpd>(&params.ipd);
    Rng rng(random ? random->seed : params.reposition_seed);
    const std::uint64_t evals_before = objective.eval_count();

    // (A1) initial probe distribution
    if (random) {
        random_ipd(rng, space, history);
    } else {
        probe_line_ipd(std::get<ProbeLineIpd>(params.ipd).gamma, space, history);
    }

    auto evaluate_step = [&](int j) {
        for (int p = 0; p < np; ++p) {
            history.m(p, j) = apply_threshold(objective.evaluate(history.position(p, j)), threshold);
            if (params.floor_repositioning) {
                reposition_floor_probes(history, p, j, objective, threshold, rng);
            }
        }
    };

    // (A2) initial fitnesses; (A3) accelerations at step 0 stay zero.
    evaluate_step(0);

    double frep = params.frep_init;
    for (int j = 1; j <= nt; ++j) {
        step_positions(history, j, params.delta_t);   // (B)
        retrieve_errant(history, j, frep, space);     // (C)
        evaluate_step(j);                             // (D)
        compute_accelerations(history, j, params);    // (E)
        frep = cycle_frep(frep);
    }

    const FitnessExtreme best = scan_best(history, nt);
    const FitnessExtreme worst = scan_worst(history, nt);

    OptResult result;
    const auto coords = history.position(best.probe, best.step);
    result.best_coords.assign(coords.begin(), coords.end());
    result.best_value = best.value;
    result.worst_value = worst.value;
    result.best_probe = best.probe;
    result.best_step = best.step;
    result.worst_probe = worst.probe;
    result.worst_step = worst.step;
    result.evals_used = objective.eval_count() - evals_before;
    return CfoRun{std::move(result), std::move(history)};
}

} // namespace dto
