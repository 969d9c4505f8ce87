#pragma once

// Deterministic random number generation for test instances and samplers.
// Gaussian variates are produced by Box-Muller on the top 53 bits of
// mt19937_64 output rather than std::normal_distribution, whose algorithm
// is implementation-defined; results must be bit-identical across standard
// libraries for the seeded-determinism contracts to hold.

#include <cmath>
#include <cstdint>
#include <random>

namespace curvop {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform in (0, 1]; safe as a log() argument.
    double uniform_pos() {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u = uniform_pos();
        const double v = uniform();
        const double r = std::sqrt(-2.0 * std::log(u));
        const double angle = 6.283185307179586476925286766559 * v;
        spare_ = r * std::sin(angle);
        have_spare_ = true;
        return r * std::cos(angle);
    }

    std::uint64_t next_u64() { return engine_(); }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Stable per-task seed derivation so batch items are independent of ordering.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    // splitmix64 finalizer over the combined value
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace curvop
