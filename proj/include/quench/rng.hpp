#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>

namespace quench {

// All stochastic code in this project draws from SplitMix64 (Steele,
// Lea & Flood 2014), a 64-bit splittable generator with a fully specified
// integer recurrence. Seeds are therefore portable: the same seed yields
// the same outcome stream on every platform.
class SplitMix64 {
  public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1), 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller. Uses two uniforms per draw; u1 is
    // shifted into (0, 1] so the log never sees zero.
    double next_gaussian() {
        const double u1 = 1.0 - next_double();
        const double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

  private:
    std::uint64_t state_;
};

namespace detail {
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
}  // namespace detail

// Deterministic sub-seed for an independent stream: the master seed XORed
// with a hash of the tags (time index, sweep-point hash, repeat index, ...).
// Chaining through the SplitMix64 finalizer decorrelates nearby tags.
constexpr std::uint64_t derive_seed(std::uint64_t seed,
                                    std::initializer_list<std::uint64_t> tags) {
    std::uint64_t s = seed;
    std::uint64_t salt = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t t : tags) {
        s = detail::mix64(s ^ detail::mix64(t + salt));
        salt += 0x9e3779b97f4a7c15ULL;
    }
    return s;
}

}  // namespace quench
