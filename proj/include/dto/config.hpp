#pragma once

#include "dto/driver.hpp"
#include "dto/objective.hpp"

#include <cstddef>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace dto {

/// Config file error with the 1-based offending line (0 when not tied to a line).
class ConfigParseError : public ConfigError {
public:
    ConfigParseError(std::size_t line, const std::string& message);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

enum class ScheduleKind { Linear, BestFitness };

/// Plain-text experiment description. One `key = value` per line, `#` starts a
/// comment. Keys not set in a file keep the value of the base config.
struct ExperimentConfig {
    ObjectiveKind function = ObjectiveKind::Schwefel226;
    std::size_t n_dims = 30;
    int passes = 6;
    double c_th = 0.6;
    ScheduleKind schedule = ScheduleKind::Linear;
    int nt = 15;
    int np0 = 4;
    IpdMode ipd = IpdMode::ProbeLine;
    std::vector<double> gamma_sweep = DtoConfig::default_gamma_sweep();
    std::uint64_t seed = 1;
    bool probe_doubling = true;
    bool floor_repositioning = false;
    std::string output_dir = "dto_output";

    DtoConfig to_dto_config() const;
    Objective make_objective() const;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// The two shipped presets: "schwefel30d" (deterministic, Probe Line IPD with
/// a gamma sweep) and "schwefel2d" (Random IPD).
ExperimentConfig profile(std::string_view name);
std::vector<std::string_view> profile_names();

/// Applies a single `key=value` assignment; throws ConfigParseError(line).
void apply_setting(ExperimentConfig& config, std::string_view key, std::string_view value,
                   std::size_t line = 0);

ExperimentConfig parse_config(std::istream& in, ExperimentConfig base = {});
ExperimentConfig parse_config_string(std::string_view text, ExperimentConfig base = {});
ExperimentConfig load_config(const std::string& path, ExperimentConfig base = {});

/// Writes every key, in a form parse_config reads back to an equal config.
std::string write_config(const ExperimentConfig& config);

} // namespace dto
