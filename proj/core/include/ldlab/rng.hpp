#pragma once

#include <cstdint>
#include <random>

namespace ldlab {

/// 64-bit finalizer from splitmix64.  Stable across platforms; used to derive
/// per-trial seeds from (master_seed, stream, index) so that trials are
/// reproducible independently of execution order.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// stable_hash(master_seed, trial_index) with an optional stream tag to keep
/// e.g. pilot pools disjoint from main trials.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index,
                                 std::uint64_t stream = 0) {
    return mix64(master ^ mix64(index + 1) ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
}

/// Deterministic random source: std::mt19937_64 (output sequence pinned by
/// the C++ standard) plus a fixed rejection sampler for bounded draws.
/// std::uniform_int_distribution is implementation-defined and never used.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform on {0, ..., bound-1}, bound >= 1.  Classic rejection sampling:
    /// discard values below 2^64 mod bound, then reduce.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = engine_();
            if (r >= threshold) return r % bound;
        }
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

}  // namespace ldlab
