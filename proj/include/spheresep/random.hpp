#pragma once

// Seeded random source with platform-independent output: std::mt19937_64
// bits turned into doubles by hand, since std distributions differ between
// standard library implementations.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>

namespace spheresep {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t bits() { return engine_(); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform in {0, ..., n-1}; n must be positive.
    std::size_t index(std::size_t n) {
        const auto i = static_cast<std::size_t>(uniform() * static_cast<double>(n));
        return i < n ? i : n - 1;
    }

    /// Standard normal by Box-Muller.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u = uniform();
        while (u <= 0.0) u = uniform();
        const double v = uniform();
        const double rad = std::sqrt(-2.0 * std::log(u));
        spare_ = rad * std::sin(2.0 * M_PI * v);
        has_spare_ = true;
        return rad * std::cos(2.0 * M_PI * v);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace spheresep
