#pragma once

#include <cstdint>

#include "sdiqrng/errors.hpp"

namespace sdiqrng {

// Conditional distribution p(b|x) of a binary-input, binary-outcome box.
// Rows are normalized by construction: only p(1|x) is stored, so
// p(0|x) + p(1|x) == 1 holds exactly.
class Behavior {
  public:
    // Uniform box, p(b|x) = 1/2.
    Behavior() : p1_{0.5, 0.5} {}

    // Build from all four entries; throws if entries are outside [0,1] or
    // a row misses normalization by more than 1e-12.
    Behavior(double p0_given_0, double p1_given_0, double p0_given_1, double p1_given_1);

    static Behavior from_p1(double p1_given_0, double p1_given_1);

    double p(int b, int x) const;
    double p1(int x) const { return p1_[x]; }

    // Probability of b == x under uniform inputs.
    double success() const { return 0.5 * ((1.0 - p1_[0]) + p1_[1]); }

    // p(1|1) - p(1|0), in [-1, 1]; zero iff the box ignores x.
    double correlation() const { return p1_[1] - p1_[0]; }

  private:
    double p1_[2];
};

// White-noise admixture weight: outcome replaced by a fair coin with
// probability p_noise.
struct NoiseModel {
    double p_noise = 0.0;
};

// Linear interferometer phase drift plus the feedback controller's knobs.
// feedback_gain is the correction step applied per feedback period, in rad.
struct DriftModel {
    double phase_rad_per_s = 0.0;
    double feedback_gain = 0.0;
    double feedback_period_s = 1.0;
};

// One emitted pulse: prepared input x and measured outcome b, both bits.
struct RoundRecord {
    std::uint8_t x;
    std::uint8_t b;
};

}  // namespace sdiqrng
