#include "dto/config.hpp"

#include "dto/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace dto {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(std::size_t line, std::string_view key, const std::string& what) {
    throw ConfigParseError(line, "key '" + std::string(key) + "': " + what);
}

double to_double(std::string_view key, std::string_view value, std::size_t line) {
    double out = 0.0;
    const auto* end = value.data() + value.size();
    const auto res = std::from_chars(value.data(), end, out);
    if (res.ec != std::errc{} || res.ptr != end || !std::isfinite(out)) {
        fail(line, key, "expected a finite number, got '" + std::string(value) + "'");
    }
    return out;
}

template <typename Int>
Int to_integer(std::string_view key, std::string_view value, std::size_t line) {
    Int out{};
    const auto* end = value.data() + value.size();
    const auto res = std::from_chars(value.data(), end, out);
    if (res.ec != std::errc{} || res.ptr != end) {
        fail(line, key, "expected an integer, got '" + std::string(value) + "'");
    }
    return out;
}

bool to_bool(std::string_view key, std::string_view value, std::size_t line) {
    if (value == "true" || value == "yes" || value == "1") return true;
    if (value == "false" || value == "no" || value == "0") return false;
    fail(line, key, "expected true/false, got '" + std::string(value) + "'");
}

std::vector<double> to_list(std::string_view key, std::string_view value, std::size_t line) {
    std::vector<double> out;
    while (true) {
        const auto comma = value.find(',');
        out.push_back(to_double(key, trim(value.substr(0, comma)), line));
        if (comma == std::string_view::npos) break;
        value.remove_prefix(comma + 1);
    }
    return out;
}

} // namespace

ConfigParseError::ConfigParseError(std::size_t line, const std::string& message)
    : ConfigError(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

DtoConfig ExperimentConfig::to_dto_config() const {
    DtoConfig cfg;
    cfg.num_passes = passes;
    if (schedule == ScheduleKind::Linear) {
        cfg.schedule = LinearRamp{c_th, passes};
    } else {
        cfg.schedule = BestFitnessSchedule{};
    }
    cfg.probe_doubling = probe_doubling;
    cfg.ipd = ipd;
    cfg.gamma_sweep = gamma_sweep;
    cfg.seed = seed;
    cfg.cfo.n_probes = np0;
    cfg.cfo.n_steps = nt;
    cfg.cfo.floor_repositioning = floor_repositioning;
    return cfg;
}

Objective ExperimentConfig::make_objective() const { return Objective::make(function, n_dims); }

ExperimentConfig profile(std::string_view name) {
    ExperimentConfig cfg;
    if (name == "schwefel30d") {
        return cfg;
    }
    if (name == "schwefel2d") {
        cfg.n_dims = 2;
        cfg.passes = 10;
        cfg.c_th = 0.98;
        cfg.nt = 25;
        cfg.np0 = 4;
        cfg.ipd = IpdMode::Random;
        cfg.gamma_sweep = {0.5};
        return cfg;
    }
    throw ConfigError("unknown profile '" + std::string(name) + "' (expected schwefel2d or schwefel30d)");
}

std::vector<std::string_view> profile_names() { return {"schwefel2d", "schwefel30d"}; }

void apply_setting(ExperimentConfig& config, std::string_view key, std::string_view value,
                   std::size_t line) {
    if (key == "function") {
        try {
            config.function = parse_objective_kind(value);
        } catch (const ConfigError& e) {
            fail(line, key, e.what());
        }
    } else if (key == "n_dims") {
        config.n_dims = to_integer<std::size_t>(key, value, line);
        if (config.n_dims < 1) fail(line, key, "must be >= 1");
    } else if (key == "passes") {
        config.passes = to_integer<int>(key, value, line);
        if (config.passes < 1) fail(line, key, "must be >= 1");
    } else if (key == "c_th") {
        config.c_th = to_double(key, value, line);
        if (!(config.c_th > 0.0 && config.c_th <= 1.0)) fail(line, key, "must lie in (0, 1]");
    } else if (key == "schedule") {
        if (value == "linear") {
            config.schedule = ScheduleKind::Linear;
        } else if (value == "best_fitness") {
            config.schedule = ScheduleKind::BestFitness;
        } else {
            fail(line, key, "expected linear or best_fitness");
        }
    } else if (key == "nt") {
        config.nt = to_integer<int>(key, value, line);
        if (config.nt < 0) fail(line, key, "must be >= 0");
    } else if (key == "np0") {
        config.np0 = to_integer<int>(key, value, line);
        if (config.np0 < 1) fail(line, key, "must be >= 1");
    } else if (key == "ipd") {
        if (value == "probe_line") {
            config.ipd = IpdMode::ProbeLine;
        } else if (value == "random") {
            config.ipd = IpdMode::Random;
        } else {
            fail(line, key, "expected probe_line or random");
        }
    } else if (key == "gamma_sweep") {
        config.gamma_sweep = to_list(key, value, line);
        for (const double g : config.gamma_sweep) {
            if (!(g >= 0.0 && g <= 1.0)) fail(line, key, "gamma values must lie in [0, 1]");
        }
    } else if (key == "seed") {
        config.seed = to_integer<std::uint64_t>(key, value, line);
    } else if (key == "probe_doubling") {
        config.probe_doubling = to_bool(key, value, line);
    } else if (key == "floor_repositioning") {
        config.floor_repositioning = to_bool(key, value, line);
    } else if (key == "output_dir") {
        if (value.empty()) fail(line, key, "must not be empty");
        config.output_dir = std::string(value);
    } else {
        throw ConfigParseError(line, "unknown key '" + std::string(key) + "'");
    }
}

ExperimentConfig parse_config(std::istream& in, ExperimentConfig base) {
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigParseError(line_no, "expected key = value, got '" + std::string(line) + "'");
        }
        apply_setting(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)), line_no);
    }
    return base;
}

ExperimentConfig parse_config_string(std::string_view text, ExperimentConfig base) {
    std::istringstream in{std::string(text)};
    return parse_config(in, std::move(base));
}

ExperimentConfig load_config(const std::string& path, ExperimentConfig base) {
    std::ifstream in(path);
    if (!in) throw ConfigParseError(0, "cannot read config file '" + path + "'");
    return parse_config(in, std::move(base));
}

std::string write_config(const ExperimentConfig& config) {
    std::ostringstream out;
    out << "function = " << to_string(config.function) << '\n';
    out << "n_dims = " << config.n_dims << '\n';
    out << "passes = " << config.passes << '\n';
    out << "c_th = " << format_shortest(config.c_th) << '\n';
    out << "schedule = " << (config.schedule == ScheduleKind::Linear ? "linear" : "best_fitness") << '\n';
    out << "nt = " << config.nt << '\n';
    out << "np0 = " << config.np0 << '\n';
    out << "ipd = " << (config.ipd == IpdMode::ProbeLine ? "probe_line" : "random") << '\n';
    out << "gamma_sweep = ";
    for (std::size_t i = 0; i < config.gamma_sweep.size(); ++i) {
        out << (i ? "," : "") << format_shortest(config.gamma_sweep[i]);
    }
    out << '\n';
    out << "seed = " << config.seed << '\n';
    out << "probe_doubling = " << (config.probe_doubling ? "true" : "false") << '\n';
    out << "floor_repositioning = " << (config.floor_repositioning ? "true" : "false") << '\n';
    out << "output_dir = " << config.output_dir << '\n';
    return out.str();
}

} // namespace dto
