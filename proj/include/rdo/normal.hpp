#pragma once

namespace rdo {

/// Quantile of the standard normal distribution (Wichura's AS241, PPND16).
/// Accurate to about 1e-16 relative over the whole open interval.
/// Throws InvalidInput unless 0 < p < 1.
double inverse_normal_cdf(double p);

/// Standard normal CDF, evaluated through erfc.
double normal_cdf(double z);

}  // namespace rdo
