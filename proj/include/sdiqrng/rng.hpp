#pragma once

#include <cmath>
#include <cstdint>

namespace sdiqrng {

// SplitMix64 step function (Steele, Lea & Flood 2014). Chosen because its
// output for a given (seed, counter) pair is a pure function with no
// platform-dependent state, unlike std::mt19937 + std::normal_distribution
// whose results vary across standard library implementations.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Counter-based per-round stream: round i of a run with master seed s draws
// from SplitMix64 started at s + (i+1) * 2^64/phi. Rounds are therefore
// independent of evaluation order, and a shard covering rounds [lo, hi) of
// the same master seed reproduces the single-threaded run bit for bit.
class RoundRng {
  public:
    RoundRng(std::uint64_t seed, std::uint64_t index)
        : state_(seed + (index + 1) * 0x9E3779B97F4A7C15ull) {}

    std::uint64_t next_u64() { return splitmix64(state_); }

    // Uniform in [0, 1), 53-bit resolution.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in (0, 1]; safe as a log() argument.
    double next_unit_open() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller (cosine branch only, two uniforms per
    // draw, so every call consumes a fixed number of counter outputs).
    double next_normal() {
        double u1 = next_unit_open();
        double u2 = next_unit();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

  private:
    std::uint64_t state_;
};

}  // namespace sdiqrng
