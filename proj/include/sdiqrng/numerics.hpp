#pragma once

namespace sdiqrng {

// Binary Shannon entropy in bits; defined as 0 at p = 0 and p = 1.
double binary_entropy(double p);

// Standard normal CDF.
double normal_cdf(double z);

// Inverse standard normal CDF for p in (0, 1); Acklam's rational
// approximation polished with one Halley step, abs error below 1e-12.
double normal_quantile(double p);

}  // namespace sdiqrng
