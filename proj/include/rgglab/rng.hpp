#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>

namespace rgglab {

// All randomness in the library flows through the two generators below so that a
// seed printed in a CSV row replays bit-identically on any platform:
//   * SplitMix64 finalizer, used for seed derivation and counter-based draws;
//   * xoshiro256** (Blackman & Vigna), seeded by SplitMix64, used for streams.
// No std:: distributions are used; their output is implementation-defined.

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
    return mix64(h + kGolden + mix64(v + kGolden));
}

/// Hash of an ordered key tuple; used to derive independent substreams.
constexpr std::uint64_t hash_keys(std::initializer_list<std::uint64_t> keys) {
    std::uint64_t h = 0;
    for (auto k : keys) h = hash_combine(h, k);
    return h;
}

/// Seed of the substream identified by `keys` under `seed`.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> keys) {
    std::uint64_t h = mix64(seed ^ 0xD1B54A32D192ED03ULL);
    for (auto k : keys) h = hash_combine(h, k);
    return h;
}

/// 53-bit mantissa mapping into [0, 1).
constexpr double to_unit(std::uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

/// Counter-based uniform in [0, 1) for the unordered pair {i, j}; symmetric in i, j.
constexpr double pair_uniform(std::uint64_t seed, std::uint64_t i, std::uint64_t j) {
    const std::uint64_t lo = i < j ? i : j;
    const std::uint64_t hi = i < j ? j : i;
    return to_unit(hash_combine(hash_combine(mix64(seed), lo), hi));
}

struct SplitMix64 {
    std::uint64_t state;
    explicit constexpr SplitMix64(std::uint64_t seed) : state(seed) {}
    constexpr std::uint64_t next() { return mix64(state += kGolden); }
};

class Xoshiro256ss {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256ss(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& w : s_) w = sm.next();
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }
    result_type operator()() { return next(); }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform in [0, 1).
    double uniform() { return to_unit(next()); }

    /// Uniform in (0, 1].
    double uniform_open_closed() { return 1.0 - uniform(); }

    /// Uniform integer in [0, bound), bound > 0, by rejection (unbiased).
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t x = next();
            if (x >= threshold) return x % bound;
        }
    }

    /// Standard normal by the Box-Muller transform (portable, one value per call).
    double normal() {
        const double u1 = uniform_open_closed();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::array<std::uint64_t, 4> s_{};
};

}  // namespace rgglab
