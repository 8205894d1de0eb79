#include "dto/threshold.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

using namespace dto;

namespace {

ThresholdState enabled_at(double t) {
    ThresholdState s;
    s.enabled = true;
    s.t_current = t;
    return s;
}

} // namespace

TEST_CASE("unit step") {
    CHECK(unit_step(0.0) == 1.0);
    CHECK(unit_step(-1.0) == 0.0);
    CHECK(unit_step(2.5) == 1.0);
    CHECK(unit_step(-0.0) == 1.0);
}

TEST_CASE("apply_threshold branches") {
    CHECK(apply_threshold(5.0, enabled_at(3.0)) == 5.0);
    CHECK(apply_threshold(2.0, enabled_at(3.0)) == 3.0);
    CHECK(apply_threshold(3.0, enabled_at(3.0)) == 3.0);
    ThresholdState off = enabled_at(3.0);
    off.enabled = false;
    CHECK(apply_threshold(2.0, off) == 2.0);
}

TEST_CASE("apply_threshold equals max(f, T) bit for bit") {
    std::mt19937_64 gen(42);
    std::uniform_real_distribution<double> u(-1e4, 1e4);
    for (int i = 0; i < 100000; ++i) {
        const double f = u(gen);
        const double t = (i % 7 == 0) ? f : u(gen);
        REQUIRE(apply_threshold(f, enabled_at(t)) == std::max(f, t));
    }
}

TEST_CASE("argmax is preserved while the floor stays below the maximum") {
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> u(-100.0, 100.0);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<double> f(2 + trial % 50);
        for (auto& v : f) v = u(gen);
        const auto max_it = std::max_element(f.begin(), f.end());
        const double t = *max_it - std::uniform_real_distribution<double>(1e-9, 250.0)(gen);
        std::vector<double> g;
        for (double v : f) g.push_back(apply_threshold(v, enabled_at(t)));
        CHECK(std::max_element(g.begin(), g.end()) - g.begin() == max_it - f.begin());
    }
}

TEST_CASE("linear threshold update examples") {
    CHECK(update_threshold_linear(1, -1000.0, 800.0, LinearRamp{0.98, 10}) ==
          doctest::Approx(-823.6).epsilon(1e-12));
    CHECK(update_threshold_linear(3, 0.0, 100.0, LinearRamp{0.6, 6}) == doctest::Approx(30.0).epsilon(1e-12));
    for (int k = 1; k <= 10; ++k) {
        CHECK(update_threshold_linear(k, 12.5, 12.5, LinearRamp{0.98, 10}) == 12.5);
    }
}

TEST_CASE("linear threshold update sequencing errors") {
    ThresholdState s;
    CHECK_THROWS_AS(update_threshold_linear(1, s), std::logic_error);
    s.observe(10.0, -10.0);
    CHECK(update_threshold_linear(1, s) == doctest::Approx(-10.0 + 0.098 * 20.0));
    CHECK_THROWS_AS(update_threshold_linear(0, s), std::invalid_argument);
    s.schedule = BestFitnessSchedule{};
    CHECK_THROWS_AS(update_threshold_linear(1, s), std::logic_error);
}

TEST_CASE("linear ramp differences are constant and stay below the peak") {
    const LinearRamp ramp{0.98, 10};
    const double f_min = -837.9658;
    const double f_star = 837.9658;
    const double step = ramp.c_th * (f_star - f_min) / ramp.num_passes;
    double prev = update_threshold_linear(1, f_min, f_star, ramp);
    for (int k = 2; k <= ramp.num_passes; ++k) {
        const double t = update_threshold_linear(k, f_min, f_star, ramp);
        CHECK(t > prev);
        CHECK(std::abs((t - prev) - step) <= 1e-12 * std::abs(f_star - f_min));
        prev = t;
    }
    CHECK(prev < f_star);
}

TEST_CASE("best-fitness schedule passes the value through") {
    CHECK(update_threshold_best_fitness(580.297) == 580.297);
    CHECK(update_threshold_best_fitness(0.0) == 0.0);
    CHECK(update_threshold_best_fitness(-5.5) == -5.5);
}

TEST_CASE("observe tracks running best and worst") {
    ThresholdState s;
    CHECK_FALSE(s.has_observations());
    s.observe(3.0, -1.0);
    s.observe(2.0, -4.0);
    s.observe(5.0, 0.0);
    CHECK(s.f_star == 5.0);
    CHECK(s.f_min == -4.0);
    CHECK(s.f_star >= s.f_min);
}
