// rng.hpp — counter-based, splittable pseudo-random stream.
//
// Algorithm identity: the SplitMix64 finalizer (Steele, Lea, Flood 2014)
// used as a pure function of (key, counter). Draw i of a stream with key k
// is mix(k + i * 0x9E3779B97F4A7C15). Splitting derives a child key by
// mixing the parent key with the child index, so independent streams never
// share draws regardless of interleaving or thread scheduling. All output
// is produced from explicit 64-bit arithmetic; no std::random distributions
// are involved, so results are identical across platforms and runs.
#pragma once

#include <cstdint>

namespace endscope {

class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed) : key_(mix(seed ^ kSeedSalt)) {}

    // Child stream for (trajectory index, worker id, ...). Pure.
    CounterRng split(std::uint64_t stream) const {
        CounterRng child(0);
        child.key_ = mix(key_ ^ mix(stream + kSplitSalt));
        child.counter_ = 0;
        return child;
    }

    std::uint64_t next_u64() {
        ++counter_;
        return mix(key_ + counter_ * kGamma);
    }

    // Uniform in [0,1) with 53 random bits.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, bound), bound >= 1. Rejection-free multiply-shift
    // is avoided on purpose: the tiny modulo bias (< 2^-32 for desk-scale
    // bounds) is irrelevant here and the code stays portable and obvious.
    std::uint64_t next_below(std::uint64_t bound) {
        return next_u64() % bound;
    }

  private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
    static constexpr std::uint64_t kSeedSalt = 0x243F6A8885A308D3ULL;
    static constexpr std::uint64_t kSplitSalt = 0x452821E638D01377ULL;

    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace endscope
