#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dto {

/// Raised for invalid problem or run configuration.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Bounded hyperrectangle over which the objective is maximized.
class DecisionSpace {
public:
    DecisionSpace(std::vector<double> lower, std::vector<double> upper);

    /// Same interval [lo, hi] on every axis.
    static DecisionSpace cube(std::size_t n_dims, double lo, double hi);

    std::size_t n_dims() const noexcept { return lower_.size(); }
    const std::vector<double>& lower() const noexcept { return lower_; }
    const std::vector<double>& upper() const noexcept { return upper_; }
    double lower(std::size_t i) const { return lower_[i]; }
    double upper(std::size_t i) const { return upper_[i]; }
    double width(std::size_t i) const { return upper_[i] - lower_[i]; }

    /// Euclidean length of the principal diagonal.
    double diag_length() const noexcept { return diag_length_; }

    bool contains(std::span<const double> x) const;

    friend bool operator==(const DecisionSpace&, const DecisionSpace&) = default;

private:
    std::vector<double> lower_;
    std::vector<double> upper_;
    double diag_length_ = 0.0;
};

enum class ObjectiveKind {
    Schwefel226,
    RastriginOffset,
    SGO,
    Ramp,   // f(x) = x[0]; diagnostic objective for the floor estimator
    Custom,
};

std::string_view to_string(ObjectiveKind kind);
/// Parses the lowercase file/CLI names: schwefel226, rastrigin_offset, sgo, ramp.
ObjectiveKind parse_objective_kind(std::string_view name);

// Raw benchmark formulas. These do not touch any evaluation counter.
double schwefel226(std::span<const double> x);
double rastrigin_offset(std::span<const double> x);
double sgo(std::span<const double> x);

/// A benchmark function bound to its decision space, with an evaluation counter.
///
/// Every call to evaluate() counts as one function call. Instances are not
/// safe to share between concurrent runs; copy one per run instead.
class Objective {
public:
    using Function = std::function<double(std::span<const double>)>;

    /// Schwefel 2.26 on [-500, 500]^n_dims. Maximum 418.9829*n_dims at 420.9687.
    static Objective schwefel226(std::size_t n_dims);
    /// Squared-term Rastrigin variant on [-5.12, 5.12]^2, max 10.123 at (-1.25, 3.25).
    static Objective rastrigin_offset(std::size_t n_dims = 2);
    /// SGO on [-50, 50]^2, max ~130.8323226 at ~(-2.8362075, -2.8362075).
    static Objective sgo(std::size_t n_dims = 2);
    /// f(x) = x[0] on [0, 1]^n_dims.
    static Objective ramp(std::size_t n_dims = 1);
    /// Builds one of the named benchmarks with its default domain.
    static Objective make(ObjectiveKind kind, std::size_t n_dims);
    /// Any callable over an explicit space. Used by tests and experiments.
    static Objective custom(std::string name, DecisionSpace space, Function fn,
                            std::optional<double> known_max_value = std::nullopt,
                            std::optional<std::vector<double>> known_max_location = std::nullopt);

    double evaluate(std::span<const double> x);

    ObjectiveKind kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }
    const DecisionSpace& space() const noexcept { return space_; }
    std::size_t n_dims() const noexcept { return space_.n_dims(); }
    const std::optional<double>& known_max_value() const noexcept { return known_max_value_; }
    const std::optional<std::vector<double>>& known_max_location() const noexcept {
        return known_max_location_;
    }

    std::uint64_t eval_count() const noexcept { return eval_count_; }
    void reset_eval_count() noexcept { eval_count_ = 0; }

private:
    Objective(ObjectiveKind kind, std::string name, DecisionSpace space, Function fn);

    ObjectiveKind kind_;
    std::string name_;
    DecisionSpace space_;
    Function fn_;
    std::optional<double> known_max_value_;
    std::optional<std::vector<double>> known_max_location_;
    std::uint64_t eval_count_ = 0;
};

} // namespace dto
