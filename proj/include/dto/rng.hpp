#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace dto {

/// Seedable uniform generator: std::mt19937_64 with the top 53 bits mapped to [0, 1).
///
/// The mapping is done here rather than through std::uniform_real_distribution
/// so the stream is identical across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in [a, b), a < b.
    double uniform(double a, double b) {
        const double x = a + (b - a) * unit();
        return x < b ? x : std::nextafter(b, a);
    }

private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer over (seed, stream); gives each optimizer invocation
/// in a run its own reproducible seed.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace dto
