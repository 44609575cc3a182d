#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sdiqrng/types.hpp"

namespace sdiqrng {

// Photon energy h*c/lambda at 1550 nm, in joules.
inline constexpr double kPhotonEnergy1550nmJ = 1.2815779723541475e-19;

// |<alpha|-alpha>| for mean photon number omega = |alpha|^2.
double coherent_overlap(double omega);

// Minimum-error discrimination probability for the two coherent states,
// (1 + sqrt(1 - overlap^2)) / 2.
double helstrom_success(double omega);

// Noiseless homodyne sign readout. With the X = a + a^dag quadrature
// convention the vacuum variance is 1 and the signal mean is +-2*sqrt(omega),
// so p(b = x | x) = Phi(2*sqrt(omega)).
Behavior ideal_homodyne_behavior(double omega);

// Eq. of the white-noise box: each entry pulled toward 1/2 by factor
// (1 - p_noise).
Behavior apply_white_noise(const Behavior& q, const NoiseModel& nm);

struct SimResult {
    std::vector<RoundRecord> rounds;
    // Average emitted power per second of simulated time, in watts. Both
    // signal states carry mean photon number omega, so the ideal monitor
    // reading is the constant omega * photon_energy * rep_rate.
    std::vector<double> power_w;
    bool degraded_lock = false;
};

// Samples n rounds of the source + homodyne chain at rep_rate_hz. The
// interferometer phase drifts per dm and is corrected by the dither
// controller (see stabilize_phase); outcomes are flipped to a fair coin with
// probability nm.p_noise. Fully deterministic in rng_seed: every round draws
// from a counter-based stream keyed by (rng_seed, round index), so shards
// over round ranges reproduce the single-threaded output exactly.
SimResult simulate_rounds(double omega, const NoiseModel& nm, const DriftModel& dm,
                          std::uint64_t n, double rep_rate_hz, std::uint64_t rng_seed,
                          double photon_energy_j = kPhotonEnergy1550nmJ);

struct PhaseSchedule {
    std::vector<double> corrections;  // controller output after each period
    bool degraded_lock = false;       // drift per period exceeded the step budget
};

// Dither controller: each period evaluates the correlation estimate at
// correction - gain, correction, correction + gain and recenters on the
// best candidate (ties keep the center, so a locked loop holds still).
// estimator(candidate, period) returns the measured correlation in [-1, 1].
PhaseSchedule stabilize_phase(const DriftModel& dm,
                              const std::function<double(double, int)>& estimator,
                              int periods);

}  // namespace sdiqrng
