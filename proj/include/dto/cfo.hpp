#pragma once

#include "dto/objective.hpp"
#include "dto/rng.hpp"
#include "dto/threshold.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace dto {

/// Probes on axis-parallel lines that cross at lower + gamma*(upper - lower).
struct ProbeLineIpd {
    double gamma = 0.5;
    friend bool operator==(const ProbeLineIpd&, const ProbeLineIpd&) = default;
};

/// Probes drawn uniformly in the decision space.
struct RandomIpd {
    std::uint64_t seed = 1;
    friend bool operator==(const RandomIpd&, const RandomIpd&) = default;
};

using InitialDistribution = std::variant<ProbeLineIpd, RandomIpd>;

inline constexpr double kFloorMargin = 0.005;
inline constexpr int kMaxRepositionIterations = 10000;

struct CfoParams {
    int n_probes = 4;
    int n_steps = 25;
    double g_const = 2.0;
    double delta_t = 1.0;
    double alpha = 2.0;
    double beta = 2.0;
    double frep_init = 0.5;
    InitialDistribution ipd = ProbeLineIpd{};
    bool floor_repositioning = false;
    // Stream for floor repositioning under a Probe Line IPD. Random IPD runs
    // draw repositioning coordinates from the IPD seed's stream instead.
    std::uint64_t reposition_seed = 0x5eed;

    /// Throws ConfigError on out-of-range values.
    void validate() const;
};

/// Position, acceleration and fitness of every probe at every time step 0..n_steps.
class SwarmHistory {
public:
    SwarmHistory(int n_probes, std::size_t n_dims, int n_steps);

    int n_probes() const noexcept { return n_probes_; }
    std::size_t n_dims() const noexcept { return n_dims_; }
    int n_steps() const noexcept { return n_steps_; }

    double& r(int p, std::size_t i, int j) { return positions_[index(p, i, j)]; }
    double r(int p, std::size_t i, int j) const { return positions_[index(p, i, j)]; }
    double& a(int p, std::size_t i, int j) { return accelerations_[index(p, i, j)]; }
    double a(int p, std::size_t i, int j) const { return accelerations_[index(p, i, j)]; }
    double& m(int p, int j) { return fitness_[static_cast<std::size_t>(j) * n_probes_ + p]; }
    double m(int p, int j) const { return fitness_[static_cast<std::size_t>(j) * n_probes_ + p]; }

    /// Coordinates of probe p at step j.
    std::span<double> position(int p, int j) { return {&positions_[index(p, 0, j)], n_dims_}; }
    std::span<const double> position(int p, int j) const {
        return {&positions_[index(p, 0, j)], n_dims_};
    }

private:
    std::size_t index(int p, std::size_t i, int j) const {
        return (static_cast<std::size_t>(j) * n_probes_ + p) * n_dims_ + i;
    }

    int n_probes_;
    std::size_t n_dims_;
    int n_steps_;
    std::vector<double> positions_;
    std::vector<double> accelerations_;
    std::vector<double> fitness_;
};

struct FitnessExtreme {
    double value = 0.0;
    int probe = 0;
    int step = 0;
};

struct OptResult {
    std::vector<double> best_coords;
    double best_value = 0.0;
    double worst_value = 0.0;
    int best_probe = 0;
    int best_step = 0;
    int worst_probe = 0;
    int worst_step = 0;
    std::uint64_t evals_used = 0;
};

struct CfoRun {
    OptResult result;
    SwarmHistory history;
};

/// Writes step-0 positions for a Probe Line IPD. With fewer than two probes
/// per axis every probe stays on the diagonal point.
void probe_line_ipd(double gamma, const DecisionSpace& space, SwarmHistory& history);

/// Writes step-0 positions uniformly in [lower, upper).
void random_ipd(Rng& rng, const DecisionSpace& space, SwarmHistory& history);

/// R(j) = R(j-1) + 0.5 * A(j-1) * dt^2.
void step_positions(SwarmHistory& history, int j, double delta_t);

/// Pulls coordinates that left the space back between the bound and the
/// previous position, a fraction frep of the way from the bound.
void retrieve_errant(SwarmHistory& history, int j, double frep, const DecisionSpace& space);

/// Gravitational acceleration of every probe toward fitter probes at step j.
/// Coincident pairs contribute nothing.
void compute_accelerations(SwarmHistory& history, int j, const CfoParams& params);

/// frep + 0.05, wrapping to 0.05 once past 1. Values on the 0.05 lattice stay
/// on it exactly.
double cycle_frep(double frep) noexcept;

/// Scans steps 0..up_to_step; later ties win.
FitnessExtreme scan_best(const SwarmHistory& history, int up_to_step);
FitnessExtreme scan_worst(const SwarmHistory& history, int up_to_step);

/// Redraws probe p at step j until it sits at least `margin` above the active
/// threshold or `max_iterations` redraws have been spent. Each redraw is one
/// objective evaluation. Returns the number of redraws taken; a no-op unless
/// the threshold is enabled.
int reposition_floor_probes(SwarmHistory& history, int p, int j, Objective& objective,
                            const ThresholdState& threshold, Rng& rng,
                            double margin = kFloorMargin,
                            int max_iterations = kMaxRepositionIterations);

/// One simplified, parameter-free CFO run on g = apply_threshold(f, threshold).
CfoRun run_cfo(const CfoParams& params, Objective& objective, const ThresholdState& threshold);

} // namespace dto
