#include "dto/objective.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace dto {

DecisionSpace::DecisionSpace(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.empty()) {
        throw ConfigError("decision space must have at least one dimension");
    }
    if (lower_.size() != upper_.size()) {
        throw ConfigError("decision space bound vectors differ in length");
    }
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < lower_.size(); ++i) {
        if (!std::isfinite(lower_[i]) || !std::isfinite(upper_[i]) || !(lower_[i] < upper_[i])) {
            throw ConfigError("decision space requires finite lower[i] < upper[i] (axis " +
                              std::to_string(i + 1) + ")");
        }
        const double w = upper_[i] - lower_[i];
        sum_sq += w * w;
    }
    diag_length_ = std::sqrt(sum_sq);
}

DecisionSpace DecisionSpace::cube(std::size_t n_dims, double lo, double hi) {
    return DecisionSpace(std::vector<double>(n_dims, lo), std::vector<double>(n_dims, hi));
}

bool DecisionSpace::contains(std::span<const double> x) const {
    if (x.size() != n_dims()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] >= lower_[i] && x[i] <= upper_[i])) return false;
    }
    return true;
}

std::string_view to_string(ObjectiveKind kind) {
    switch (kind) {
    case ObjectiveKind::Schwefel226: return "schwefel226";
    case ObjectiveKind::RastriginOffset: return "rastrigin_offset";
    case ObjectiveKind::SGO: return "sgo";
    case ObjectiveKind::Ramp: return "ramp";
    case ObjectiveKind::Custom: return "custom";
    }
    return "custom";
}

ObjectiveKind parse_objective_kind(std::string_view name) {
    if (name == "schwefel226") return ObjectiveKind::Schwefel226;
    if (name == "rastrigin_offset") return ObjectiveKind::RastriginOffset;
    if (name == "sgo") return ObjectiveKind::SGO;
    if (name == "ramp") return ObjectiveKind::Ramp;
    throw ConfigError("unknown function '" + std::string(name) +
                      "' (expected schwefel226, rastrigin_offset, sgo or ramp)");
}

double schwefel226(std::span<const double> x) {
    double z = 0.0;
    for (const double xi : x) {
        z += xi * std::sin(std::sqrt(std::abs(xi)));
    }
    return z;
}

namespace {

void require_two_dims(std::span<const double> x, std::string_view fn) {
    if (x.size() != 2) {
        throw ConfigError(std::string(fn) + " is defined for 2 dimensions only, got " +
                          std::to_string(x.size()));
    }
}

} // namespace

double rastrigin_offset(std::span<const double> x) {
    require_two_dims(x, "rastrigin_offset");
    constexpr double offsets[2] = {-1.25, 3.25};
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double z = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
        const double xi = x[i] - offsets[i];
        // The whole per-axis term is squared; this is not textbook Rastrigin.
        const double term = xi * xi - 10.0 * std::cos(two_pi * xi) + 10.0;
        z += term * term;
    }
    return -z + 10.123;
}

double sgo(std::span<const double> x) {
    require_two_dims(x, "sgo");
    const double x1 = x[0];
    const double x2 = x[1];
    const double t1 = x1 * x1 * x1 * x1 - 16.0 * x1 * x1 + 0.5 * x1;
    const double t2 = x2 * x2 * x2 * x2 - 16.0 * x2 * x2 + 0.5 * x2;
    return -(t1 + t2);
}

Objective::Objective(ObjectiveKind kind, std::string name, DecisionSpace space, Function fn)
    : kind_(kind), name_(std::move(name)), space_(std::move(space)), fn_(std::move(fn)) {}

Objective Objective::schwefel226(std::size_t n_dims) {
    if (n_dims < 1) throw ConfigError("schwefel226 needs n_dims >= 1");
    Objective obj(ObjectiveKind::Schwefel226, "schwefel226",
                  DecisionSpace::cube(n_dims, -500.0, 500.0),
                  [](std::span<const double> x) { return dto::schwefel226(x); });
    obj.known_max_value_ = 418.9829 * static_cast<double>(n_dims);
    obj.known_max_location_ = std::vector<double>(n_dims, 420.9687);
    return obj;
}

Objective Objective::rastrigin_offset(std::size_t n_dims) {
    if (n_dims != 2) throw ConfigError("rastrigin_offset requires n_dims = 2");
    Objective obj(ObjectiveKind::RastriginOffset, "rastrigin_offset",
                  DecisionSpace::cube(2, -5.12, 5.12),
                  [](std::span<const double> x) { return dto::rastrigin_offset(x); });
    obj.known_max_value_ = 10.123;
    obj.known_max_location_ = std::vector<double>{-1.25, 3.25};
    return obj;
}

Objective Objective::sgo(std::size_t n_dims) {
    if (n_dims != 2) throw ConfigError("sgo requires n_dims = 2");
    Objective obj(ObjectiveKind::SGO, "sgo", DecisionSpace::cube(2, -50.0, 50.0),
                  [](std::span<const double> x) { return dto::sgo(x); });
    obj.known_max_value_ = 130.8323226;
    obj.known_max_location_ = std::vector<double>{-2.8362075, -2.8362075};
    return obj;
}

Objective Objective::ramp(std::size_t n_dims) {
    if (n_dims < 1) throw ConfigError("ramp needs n_dims >= 1");
    Objective obj(ObjectiveKind::Ramp, "ramp", DecisionSpace::cube(n_dims, 0.0, 1.0),
                  [](std::span<const double> x) { return x[0]; });
    obj.known_max_value_ = 1.0;
    std::vector<double> loc(n_dims, 0.0);
    loc[0] = 1.0;
    obj.known_max_location_ = std::move(loc);
    return obj;
}

Objective Objective::make(ObjectiveKind kind, std::size_t n_dims) {
    switch (kind) {
    case ObjectiveKind::Schwefel226: return schwefel226(n_dims);
    case ObjectiveKind::RastriginOffset: return rastrigin_offset(n_dims);
    case ObjectiveKind::SGO: return sgo(n_dims);
    case ObjectiveKind::Ramp: return ramp(n_dims);
    case ObjectiveKind::Custom: break;
    }
    throw ConfigError("custom objectives must be built with Objective::custom");
}

Objective Objective::custom(std::string name, DecisionSpace space, Function fn,
                            std::optional<double> known_max_value,
                            std::optional<std::vector<double>> known_max_location) {
    if (!fn) throw ConfigError("custom objective needs a callable");
    Objective obj(ObjectiveKind::Custom, std::move(name), std::move(space), std::move(fn));
    obj.known_max_value_ = known_max_value;
    obj.known_max_location_ = std::move(known_max_location);
    return obj;
}

double Objective::evaluate(std::span<const double> x) {
    ++eval_count_;
    return fn_(x);
}

} // namespace dto
