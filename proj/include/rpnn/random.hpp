#pragma once

#include <cstdint>
#include <random>

namespace rpnn {

/// SplitMix64 mixing step; used to derive independent sub-seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Deterministic per-trial seed from (master seed, strategy tag, N, trial).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag,
                                 std::uint64_t n, std::uint64_t trial) {
    std::uint64_t h = splitmix64(master ^ splitmix64(tag + 0x01ULL));
    h = splitmix64(h ^ splitmix64(n + 0x9E01ULL));
    return splitmix64(h ^ splitmix64(trial + 0xC2B2ULL));
}

/// Seeded uniform sampler. The engine output is mapped to doubles directly
/// so that streams are reproducible independently of the standard library's
/// distribution implementations.
class UniformSampler {
public:
    explicit UniformSampler(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    /// Uniform double in [0, 1).
    double unit() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    /// Symmetric uniform in [-bound, bound).
    double symmetric(double bound) { return uniform(-bound, bound); }

private:
    std::mt19937_64 engine_;
};

} // namespace rpnn
