#pragma once

#include <cstdint>
#include <random>

namespace setbellman {

/// Mixes a base seed with a stream index so that per-sample / per-run
/// generators are independent and order-insensitive (splitmix64 finalizer).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + (stream + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Seeded 64-bit generator with portable real/integer draws.
///
/// Uniform doubles are derived from the raw mt19937_64 output instead of
/// std::uniform_real_distribution so that emitted artifacts are stable
/// across standard library implementations. The algorithm name recorded
/// in output metadata is "mt19937_64".
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    static constexpr const char* algorithm() { return "mt19937_64"; }

    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Unbiased integer in [0, n) via rejection sampling. n must be > 0.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace setbellman
