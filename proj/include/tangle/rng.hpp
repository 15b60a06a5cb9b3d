#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace tangle {

// Deterministic random source. All draws go through hand-rolled transforms of
// the mt19937_64 bit stream; the standard library distributions are
// implementation-defined and would break run reproducibility across
// toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform integer in [0, n).
    std::uint64_t uniform_index(std::uint64_t n) {
        // Rejection sampling avoids modulo bias.
        const std::uint64_t limit = n * (UINT64_MAX / n);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    double exponential(double rate) {
        double u;
        do {
            u = uniform01();
        } while (u <= 0.0);
        return -std::log(u) / rate;
    }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace tangle
