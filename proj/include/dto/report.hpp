#pragma once

#include "dto/cfo.hpp"
#include "dto/driver.hpp"
#include "dto/objective.hpp"
#include "dto/qr_explorer.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace dto {

/// Shortest decimal string that parses back to exactly `value`. Locale-independent.
std::string format_shortest(double value);
/// printf "%.<decimals>f" in the C locale.
std::string format_fixed(double value, int decimals);

/// Human-readable run summary: best fitness, total calls, coordinates and a
/// "Pass# Threshold Best Fitness" table (3-decimal thresholds, 5-decimal fitnesses).
void write_summary(std::ostream& out, const RunReport& report);

/// Header `pass,threshold,best_fitness,cumulative_evals`, one row per pass;
/// the pass-1 threshold field is empty.
void write_passes_csv(std::ostream& out, const RunReport& report);

inline constexpr int kSurfaceGridPoints = 100;

/// 100 x 100 grid of "x1 x2 z" lines over a 2-D objective, blank line after
/// each constant-x1 scanline. z = max(f, T) when a threshold is given.
/// Throws ConfigError unless the objective is 2-D.
void write_surface(std::ostream& out, Objective& objective, std::optional<double> threshold,
                   int grid_points = kSurfaceGridPoints);

/// gnuplot command file rendering `data_file` as a surface.
void write_surface_plot_commands(std::ostream& out, const std::string& data_file,
                                 const std::string& title, const DecisionSpace& space);

/// Average distance of all probes to the step's best probe, normalized by
/// diag_length * (N_p - 1). One value per step 0..n_steps.
/// Throws ConfigError for a single-probe history.
std::vector<double> average_distance(const SwarmHistory& history, double diag_length);

/// Two columns per line: step and Davg.
void write_davg(std::ostream& out, const SwarmHistory& history, double diag_length);

/// `T,n_samples,n_on_floor,p_above`
std::string format_floor_stats(const FloorStats& stats);

} // namespace dto
