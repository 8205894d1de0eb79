#include "dto/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <system_error>

namespace dto {

std::string format_shortest(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    if (res.ec != std::errc{}) return "nan";
    return std::string(buf, res.ptr);
}

std::string format_fixed(double value, int decimals) {
    char buf[128];
    const int n = std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    return std::string(buf, n > 0 ? static_cast<std::size_t>(n) : 0);
}

void write_summary(std::ostream& out, const RunReport& report) {
    out << "RUN COMPLETED\n\n";
    out << "Best Fitness Over All Passes = " << format_shortest(report.best_value) << '\n';
    out << "using " << report.total_evals << " function calls at coordinates\n";
    for (std::size_t i = 0; i < report.best_coords.size(); ++i) {
        out << "x(" << i + 1 << ") = " << format_shortest(report.best_coords[i]) << '\n';
    }
    out << '\n';
    out << "Pass#      Threshold      Best Fitness\n";
    char line[160];
    for (const PassRecord& rec : report.passes) {
        if (!rec.threshold) {
            std::snprintf(line, sizeof line, " %2d          none          %11.5f\n", rec.pass_index,
                          rec.best_fitness_this_pass);
        } else {
            std::snprintf(line, sizeof line, " %2d          %9.3f          %11.5f\n", rec.pass_index,
                          *rec.threshold, rec.best_fitness_this_pass);
        }
        out << line;
    }
}

void write_passes_csv(std::ostream& out, const RunReport& report) {
    out << "pass,threshold,best_fitness,cumulative_evals\n";
    for (const PassRecord& rec : report.passes) {
        out << rec.pass_index << ',' << (rec.threshold ? format_shortest(*rec.threshold) : "")
            << ',' << format_shortest(rec.best_fitness_this_pass) << ',' << rec.cumulative_evals
            << '\n';
    }
}

void write_surface(std::ostream& out, Objective& objective, std::optional<double> threshold,
                   int grid_points) {
    const DecisionSpace& space = objective.space();
    if (space.n_dims() != 2) {
        throw ConfigError("surface output needs a 2-D objective, got n_dims = " +
                          std::to_string(space.n_dims()));
    }
    if (grid_points < 2) throw ConfigError("surface grid needs at least 2 points per axis");
    ThresholdState state;
    state.enabled = threshold.has_value();
    state.t_current = threshold.value_or(0.0);

    const double dx1 = space.width(0) / static_cast<double>(grid_points - 1);
    const double dx2 = space.width(1) / static_cast<double>(grid_points - 1);
    double x[2];
    for (int i = 0; i < grid_points; ++i) {
        x[0] = space.lower(0) + static_cast<double>(i) * dx1;
        for (int k = 0; k < grid_points; ++k) {
            x[1] = space.lower(1) + static_cast<double>(k) * dx2;
            const double z = apply_threshold(objective.evaluate(x), state);
            out << format_shortest(x[0]) << ' ' << format_shortest(x[1]) << ' '
                << format_shortest(z) << '\n';
        }
        out << '\n';
    }
}

void write_surface_plot_commands(std::ostream& out, const std::string& data_file,
                                 const std::string& title, const DecisionSpace& space) {
    out << "set pm3d\n";
    out << "set hidden3d\n";
    out << "set view 45, 45, 1, 1\n";
    out << "set xrange [" << format_shortest(space.lower(0)) << " : " << format_shortest(space.upper(0))
        << "]\n";
    out << "set yrange [" << format_shortest(space.lower(1)) << " : " << format_shortest(space.upper(1))
        << "]\n";
    out << "set grid xtics ytics ztics\n";
    out << "set title \"" << title << "\"\n";
    out << "set xlabel \"x1\"\n";
    out << "set ylabel \"x2\"\n";
    out << "set zlabel \"z=f(x1,x2)\"\n";
    out << "splot \"" << data_file << "\" notitle with lines\n";
}

std::vector<double> average_distance(const SwarmHistory& history, double diag_length) {
    const int np = history.n_probes();
    if (np < 2) throw ConfigError("average distance needs at least two probes");
    if (!(diag_length > 0.0)) throw ConfigError("average distance needs a positive diagonal");
    std::vector<double> davg;
    davg.reserve(static_cast<std::size_t>(history.n_steps()) + 1);
    for (int j = 0; j <= history.n_steps(); ++j) {
        int best = 0;
        for (int p = 0; p < np; ++p) {
            if (history.m(p, j) >= history.m(best, j)) best = p;
        }
        const auto rb = history.position(best, j);
        double total = 0.0;
        for (int p = 0; p < np; ++p) {
            const auto rp = history.position(p, j);
            double sum_sq = 0.0;
            for (std::size_t i = 0; i < history.n_dims(); ++i) {
                const double d = rb[i] - rp[i];
                sum_sq += d * d;
            }
            total += std::sqrt(sum_sq);
        }
        davg.push_back(total / (diag_length * static_cast<double>(np - 1)));
    }
    return davg;
}

void write_davg(std::ostream& out, const SwarmHistory& history, double diag_length) {
    const auto davg = average_distance(history, diag_length);
    for (std::size_t j = 0; j < davg.size(); ++j) {
        out << j << ' ' << format_shortest(davg[j]) << '\n';
    }
}

std::string format_floor_stats(const FloorStats& stats) {
    return format_shortest(stats.threshold_used) + ',' + std::to_string(stats.n_samples) + ',' +
           std::to_string(stats.n_on_floor) + ',' + format_shortest(stats.p_above);
}

} // namespace dto
