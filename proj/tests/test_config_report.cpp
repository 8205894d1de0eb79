#include "dto/config.hpp"
#include "dto/report.hpp"

#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace dto;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

RunReport sample_report() {
    RunReport r;
    r.best_coords = {421.007498176246, 420.959700549993};
    r.best_value = 837.965574726692;
    r.total_evals = 106392;
    r.passes.push_back({1, std::nullopt, 580.2973878, 104, 4});
    r.passes.push_back({2, -347.955, 837.8781823, 312, 8});
    r.passes.push_back({3, 686.126, 837.9655747, 728, 16});
    return r;
}

} // namespace

TEST_CASE("profiles carry the reference settings") {
    const auto p30 = profile("schwefel30d");
    CHECK(p30.n_dims == 30);
    CHECK(p30.passes == 6);
    CHECK(p30.c_th == 0.6);
    CHECK(p30.nt == 15);
    CHECK(p30.np0 == 4);
    CHECK(p30.ipd == IpdMode::ProbeLine);
    CHECK(p30.gamma_sweep.size() == 11);
    CHECK(p30.gamma_sweep.back() == 1.0);

    const auto p2 = profile("schwefel2d");
    CHECK(p2.n_dims == 2);
    CHECK(p2.passes == 10);
    CHECK(p2.c_th == 0.98);
    CHECK(p2.nt == 25);
    CHECK(p2.ipd == IpdMode::Random);
    CHECK_THROWS_AS(profile("rastrigin9d"), ConfigError);
}

TEST_CASE("config parsing") {
    const auto cfg = parse_config_string(
        "# comment\n"
        "function = sgo\n"
        "n_dims=2\n"
        "  passes = 3   # trailing comment\n"
        "schedule = best_fitness\n"
        "gamma_sweep = 0.25, 0.75\n"
        "probe_doubling = no\n"
        "floor_repositioning = true\n"
        "\n"
        "output_dir = runs/a\n");
    CHECK(cfg.function == ObjectiveKind::SGO);
    CHECK(cfg.passes == 3);
    CHECK(cfg.schedule == ScheduleKind::BestFitness);
    CHECK(cfg.gamma_sweep == std::vector<double>{0.25, 0.75});
    CHECK_FALSE(cfg.probe_doubling);
    CHECK(cfg.floor_repositioning);
    CHECK(cfg.output_dir == "runs/a");
    CHECK(cfg.nt == 15);  // default kept
}

TEST_CASE("config errors carry line numbers") {
    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            parse_config_string(text);
        } catch (const ConfigParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("passes = 2\nbogus = 1\n") == 2);
    CHECK(line_of("\n\npasses = two\n") == 3);
    CHECK(line_of("c_th = 1.5\n") == 1);
    CHECK(line_of("ipd = halton\n") == 1);
    CHECK(line_of("passes 3\n") == 1);
    CHECK(line_of("gamma_sweep = 0.1,,0.2\n") == 1);
    CHECK(line_of("function = ackley\n") == 1);
    try {
        parse_config_string("nt = 3\nnp = 4\n");
        FAIL("expected error");
    } catch (const ConfigParseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        CHECK(std::string(e.what()).find("np") != std::string::npos);
    }
}

TEST_CASE("written configs parse back to the same config") {
    std::mt19937_64 gen(12);
    for (int trial = 0; trial < 200; ++trial) {
        ExperimentConfig cfg;
        cfg.function = static_cast<ObjectiveKind>(gen() % 4);
        cfg.n_dims = 1 + gen() % 40;
        cfg.passes = 1 + static_cast<int>(gen() % 12);
        cfg.c_th = std::uniform_real_distribution<double>(1e-3, 1.0)(gen);
        cfg.schedule = gen() % 2 ? ScheduleKind::Linear : ScheduleKind::BestFitness;
        cfg.nt = static_cast<int>(gen() % 50);
        cfg.np0 = 1 + static_cast<int>(gen() % 64);
        cfg.ipd = gen() % 2 ? IpdMode::Random : IpdMode::ProbeLine;
        cfg.gamma_sweep.clear();
        for (std::size_t k = 0, n = 1 + gen() % 6; k < n; ++k) {
            cfg.gamma_sweep.push_back(std::uniform_real_distribution<double>(0.0, 1.0)(gen));
        }
        cfg.seed = gen();
        cfg.probe_doubling = gen() % 2;
        cfg.floor_repositioning = gen() % 2;
        cfg.output_dir = "out_" + std::to_string(gen() % 1000);
        const auto text = write_config(cfg);
        CHECK(parse_config_string(text, profile("schwefel2d")) == cfg);
    }
}

TEST_CASE("config converts to a driver configuration") {
    const auto dto_cfg = profile("schwefel2d").to_dto_config();
    CHECK(dto_cfg.num_passes == 10);
    REQUIRE(std::holds_alternative<LinearRamp>(dto_cfg.schedule));
    CHECK(std::get<LinearRamp>(dto_cfg.schedule).c_th == 0.98);
    CHECK(std::get<LinearRamp>(dto_cfg.schedule).num_passes == 10);
    CHECK(dto_cfg.cfo.n_steps == 25);
    CHECK(dto_cfg.cfo.n_probes == 4);
}

TEST_CASE("number formatting is shortest round-trip") {
    for (double v : {0.1, 837.965574726692, -10176.09, 1e-300, 12569.487, 0.0}) {
        CHECK(std::stod(format_shortest(v)) == v);
    }
    CHECK(format_shortest(0.5) == "0.5");
    CHECK(format_shortest(-3.0) == "-3");
    CHECK(format_fixed(-347.9551, 3) == "-347.955");
}

TEST_CASE("summary layout") {
    std::ostringstream out;
    write_summary(out, sample_report());
    const auto lines = lines_of(out.str());
    REQUIRE(lines.size() == 11);
    CHECK(lines[0] == "RUN COMPLETED");
    CHECK(lines[1].empty());
    CHECK(lines[2] == "Best Fitness Over All Passes = 837.965574726692");
    CHECK(lines[3] == "using 106392 function calls at coordinates");
    CHECK(lines[4] == "x(1) = 421.007498176246");
    CHECK(lines[5] == "x(2) = 420.959700549993");
    CHECK(lines[6].empty());
    CHECK(lines[7] == "Pass#      Threshold      Best Fitness");
    CHECK(lines[8] == "  1          none            580.29739");
    CHECK(lines[9] == "  2           -347.955            837.87818");
    CHECK(lines[10] == "  3            686.126            837.96557");
}

TEST_CASE("passes csv layout") {
    std::ostringstream out;
    write_passes_csv(out, sample_report());
    CHECK(out.str() ==
          "pass,threshold,best_fitness,cumulative_evals\n"
          "1,,580.2973878,104\n"
          "2,-347.955,837.8781823,312\n"
          "3,686.126,837.9655747,728\n");
}

TEST_CASE("surface grid") {
    SUBCASE("row and separator counts") {
        auto obj = Objective::schwefel226(2);
        std::ostringstream out;
        write_surface(out, obj, std::nullopt);
        const auto lines = lines_of(out.str());
        std::size_t data = 0;
        std::size_t blank = 0;
        for (const auto& l : lines) (l.empty() ? blank : data)++;
        CHECK(data == 10000);
        CHECK(blank == 100);
        CHECK(lines.front() == "-500 -500 " + format_shortest(schwefel226(std::vector<double>{-500, -500})));
        CHECK(lines[100].empty());
        CHECK(obj.eval_count() == 10000);
    }
    SUBCASE("thresholded minimum equals the floor and cells match direct evaluation") {
        auto obj = Objective::schwefel226(2);
        std::ostringstream out;
        write_surface(out, obj, 686.126);
        std::istringstream in(out.str());
        double min_z = 1e300;
        std::vector<std::array<double, 3>> rows;
        for (std::string line; std::getline(in, line);) {
            if (line.empty()) continue;
            std::istringstream ls(line);
            std::array<double, 3> r{};
            ls >> r[0] >> r[1] >> r[2];
            rows.push_back(r);
            min_z = std::min(min_z, r[2]);
        }
        CHECK(min_z == 686.126);
        std::mt19937_64 gen(1);
        for (int s = 0; s < 100; ++s) {
            const auto& r = rows[gen() % rows.size()];
            const double direct = std::max(schwefel226(std::vector<double>{r[0], r[1]}), 686.126);
            CHECK(std::abs(r[2] - direct) <= 1e-12 * (1.0 + std::abs(direct)));
        }
    }
    SUBCASE("constant objective") {
        auto flat = Objective::custom("flat", DecisionSpace::cube(2, -1, 1),
                                      [](std::span<const double>) { return 4.25; });
        std::ostringstream out;
        write_surface(out, flat, std::nullopt);
        for (const auto& l : lines_of(out.str())) {
            if (!l.empty()) CHECK(l.substr(l.rfind(' ') + 1) == "4.25");
        }
    }
    SUBCASE("refuses non-2-D objectives") {
        auto obj = Objective::schwefel226(3);
        std::ostringstream out;
        CHECK_THROWS_AS(write_surface(out, obj, std::nullopt), ConfigError);
    }
    SUBCASE("plot command file references the data") {
        std::ostringstream out;
        write_surface_plot_commands(out, "surface.dat", "t", DecisionSpace::cube(2, -500, 500));
        CHECK(out.str().find("splot \"surface.dat\"") != std::string::npos);
        CHECK(out.str().find("set xrange [-500 : 500]") != std::string::npos);
    }
}

TEST_CASE("average distance to the best probe") {
    const auto space = DecisionSpace::cube(2, 0.0, 1.0);
    SUBCASE("coincident probes") {
        SwarmHistory h(5, 2, 0);
        CHECK(average_distance(h, space.diag_length())[0] == 0.0);
    }
    SUBCASE("two probes on opposite corners") {
        SwarmHistory h(2, 2, 0);
        h.r(1, 0, 0) = 1.0;
        h.r(1, 1, 0) = 1.0;
        h.m(0, 0) = 3.0;
        CHECK(average_distance(h, space.diag_length())[0] == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("a collapsing swarm has a non-increasing tail") {
        SwarmHistory h(4, 2, 10);
        for (int j = 0; j <= 10; ++j) {
            const double spread = 1.0 / (1.0 + j);
            h.m(0, j) = 1.0;
            for (int p = 1; p < 4; ++p) {
                h.r(p, 0, j) = 0.5 + spread * 0.1 * p;
                h.r(p, 1, j) = 0.5 - spread * 0.05 * p;
            }
            h.r(0, 0, j) = 0.5;
            h.r(0, 1, j) = 0.5;
        }
        const auto d = average_distance(h, space.diag_length());
        for (std::size_t j = 1; j < d.size(); ++j) CHECK(d[j] <= d[j - 1]);
        std::ostringstream out;
        write_davg(out, h, space.diag_length());
        CHECK(lines_of(out.str()).size() == 11);
        CHECK(lines_of(out.str())[0].rfind("0 ", 0) == 0);
    }
    SUBCASE("one probe is refused") {
        SwarmHistory h(1, 2, 3);
        CHECK_THROWS_AS(average_distance(h, space.diag_length()), ConfigError);
    }
}

TEST_CASE("floor stats line") {
    FloorStats s;
    s.threshold_used = 0.5;
    s.n_samples = 10000;
    s.n_on_floor = 5001;
    s.p_above = 1.0 - 5001.0 / 10000.0;
    CHECK(format_floor_stats(s) == "0.5,10000,5001," + format_shortest(s.p_above));
}
