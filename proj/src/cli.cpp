#include "dto/cli.hpp"

#include "dto/config.hpp"
#include "dto/driver.hpp"
#include "dto/qr_explorer.hpp"
#include "dto/report.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>

namespace dto::cli {

namespace {

namespace fs = std::filesystem;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ConfigOptions {
    std::string profile;
    std::string config_path;
    std::vector<std::string> settings;
    std::string out_dir;
};

void add_config_options(CLI::App& cmd, ConfigOptions& opts) {
    cmd.add_option("--profile", opts.profile, "Named preset (schwefel2d, schwefel30d)");
    cmd.add_option("--config", opts.config_path, "key = value experiment file");
    cmd.add_option("--set", opts.settings, "Override one key, e.g. --set passes=3");
    cmd.add_option("--out", opts.out_dir, "Output directory (overrides $DTO_OUTPUT_DIR and output_dir)");
}

ExperimentConfig resolve_config(const ConfigOptions& opts) {
    ExperimentConfig cfg = opts.profile.empty() ? ExperimentConfig{} : profile(opts.profile);
    if (!opts.config_path.empty()) cfg = load_config(opts.config_path, cfg);
    for (const std::string& s : opts.settings) {
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw ConfigParseError(0, "--set expects key=value, got '" + s + "'");
        apply_setting(cfg, s.substr(0, eq), s.substr(eq + 1));
    }
    return cfg;
}

fs::path resolve_output_dir(const ConfigOptions& opts, const ExperimentConfig& cfg) {
    if (!opts.out_dir.empty()) return opts.out_dir;
    if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') return env;
    return cfg.output_dir;
}

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw IoError("cannot create output directory '" + dir.string() + "'");
    }
}

template <typename Writer>
void write_file(const fs::path& path, Writer&& writer) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    writer(out);
    out.flush();
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::string two_digits(int n) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%02d", n);
    return buf;
}

std::optional<double> parse_threshold(const std::string& text) {
    if (text.empty() || text == "none") return std::nullopt;
    double value = 0.0;
    const char* end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, value);
    if (res.ec != std::errc{} || res.ptr != end || !std::isfinite(value)) {
        throw ConfigError("threshold must be a number or 'none', got '" + text + "'");
    }
    return value;
}

int cmd_run(const ConfigOptions& opts, bool emit_davg, bool emit_surfaces, std::ostream& out) {
    const ExperimentConfig cfg = resolve_config(opts);
    const DtoConfig dto_cfg = cfg.to_dto_config();
    dto_cfg.validate();
    Objective objective = cfg.make_objective();
    if (emit_davg && cfg.np0 < 2) throw ConfigError("--davg needs np0 >= 2");
    if (emit_surfaces && cfg.n_dims != 2) throw ConfigError("--surfaces needs n_dims = 2");

    const fs::path dir = resolve_output_dir(opts, cfg);
    ensure_dir(dir);
    if (emit_davg) ensure_dir(dir / "davg");

    InvocationObserver observer;
    if (emit_davg) {
        const double diag = objective.space().diag_length();
        observer = [&](const InvocationInfo& info) {
            const fs::path path = dir / "davg" /
                ("pass" + two_digits(info.pass_index) + "_run" + std::to_string(info.invocation + 1) + ".dat");
            write_file(path, [&](std::ostream& f) { write_davg(f, info.run.history, diag); });
        };
    }

    const RunReport report = run_dto(dto_cfg, objective, observer);

    write_file(dir / "summary.txt", [&](std::ostream& f) { write_summary(f, report); });
    write_file(dir / "passes.csv", [&](std::ostream& f) { write_passes_csv(f, report); });
    write_file(dir / "config.txt", [&](std::ostream& f) { f << write_config(cfg); });

    if (emit_surfaces) {
        Objective plot_objective = cfg.make_objective();
        for (const PassRecord& rec : report.passes) {
            const std::string stem = "surface_pass" + two_digits(rec.pass_index);
            write_file(dir / (stem + ".dat"),
                       [&](std::ostream& f) { write_surface(f, plot_objective, rec.threshold); });
            const std::string title = plot_objective.name() + " pass " + std::to_string(rec.pass_index) +
                (rec.threshold ? ", threshold = " + format_fixed(*rec.threshold, 2) : ", no threshold");
            write_file(dir / (stem + ".gp"), [&](std::ostream& f) {
                write_surface_plot_commands(f, stem + ".dat", title, plot_objective.space());
            });
        }
    }

    out << "best fitness " << format_shortest(report.best_value) << " after " << report.total_evals
        << " function calls; wrote " << (dir / "summary.txt").string() << '\n';
    return kOk;
}

int cmd_surface(const ConfigOptions& opts, const std::string& threshold_text, std::ostream& out) {
    const ExperimentConfig cfg = resolve_config(opts);
    if (cfg.n_dims != 2) {
        throw ConfigError("surface needs n_dims = 2, config has n_dims = " + std::to_string(cfg.n_dims));
    }
    const std::optional<double> threshold = parse_threshold(threshold_text);
    Objective objective = cfg.make_objective();
    const fs::path dir = resolve_output_dir(opts, cfg);
    ensure_dir(dir);
    write_file(dir / "surface.dat", [&](std::ostream& f) { write_surface(f, objective, threshold); });
    const std::string title = objective.name() +
        (threshold ? ", threshold = " + format_fixed(*threshold, 2) : ", no threshold");
    write_file(dir / "surface.gp", [&](std::ostream& f) {
        write_surface_plot_commands(f, "surface.dat", title, objective.space());
    });
    out << "wrote " << (dir / "surface.dat").string() << '\n';
    return kOk;
}

} // namespace

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dynamic threshold optimization with a central force optimization core", "dto"};
    app.require_subcommand(1);

    ConfigOptions run_opts;
    bool emit_davg = false;
    bool emit_surfaces = false;
    std::optional<std::uint64_t> run_seed;
    auto* run = app.add_subcommand("run", "Run DTO and write summary.txt and passes.csv");
    add_config_options(*run, run_opts);
    run->add_option("--seed", run_seed, "Seed for the Random IPD");
    run->add_flag("--davg", emit_davg, "Write per-invocation average-distance data");
    run->add_flag("--surfaces", emit_surfaces, "Write a thresholded 2-D surface grid for every pass");

    ConfigOptions surface_opts;
    std::string surface_threshold = "none";
    auto* surface = app.add_subcommand("surface", "Write a 100x100 grid of a 2-D objective");
    add_config_options(*surface, surface_opts);
    surface->add_option("--threshold", surface_threshold, "Floor value, or 'none'");

    std::string scan_function;
    std::optional<std::size_t> scan_dims;
    double scan_threshold = 0.0;
    std::uint64_t scan_samples = 10000;
    double scan_margin = kFloorMargin;
    auto* floorscan = app.add_subcommand("floorscan", "Estimate the above-floor fraction by Halton sampling");
    floorscan->add_option("--function", scan_function, "schwefel226, rastrigin_offset, sgo or ramp")->required();
    floorscan->add_option("--n-dims", scan_dims, "Dimensionality (default: 1 for ramp, 2 otherwise)");
    floorscan->add_option("--threshold", scan_threshold, "Floor value T")->required();
    floorscan->add_option("--samples", scan_samples, "Number of samples N_s")->check(CLI::PositiveNumber);
    floorscan->add_option("--margin", scan_margin, "On-floor margin")->check(CLI::NonNegativeNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsageError;
    }

    try {
        if (run->parsed()) {
            if (run_seed) run_opts.settings.push_back("seed=" + std::to_string(*run_seed));
            return cmd_run(run_opts, emit_davg, emit_surfaces, out);
        }
        if (surface->parsed()) return cmd_surface(surface_opts, surface_threshold, out);
        if (floorscan->parsed()) {
            const ObjectiveKind kind = parse_objective_kind(scan_function);
            const std::size_t dims = scan_dims.value_or(kind == ObjectiveKind::Ramp ? 1 : 2);
            Objective objective = Objective::make(kind, dims);
            const FloorStats stats = sample_threshold_floor(objective, scan_threshold, scan_samples, scan_margin);
            out << format_floor_stats(stats) << '\n';
            return kOk;
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    }
    return kUsageError;
}

} // namespace dto::cli
