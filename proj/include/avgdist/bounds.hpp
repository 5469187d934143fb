#pragma once

#include <cmath>

#include "avgdist/errors.hpp"
#include "avgdist/specfun.hpp"
#include "avgdist/spectrum.hpp"

namespace avgdist {

/// Sharp bounds on the spherical mean of log|Au|:
///   half_log_sum_sq + mean_log_coordinate(n) <= I(A) <= half_log_sum_sq - log(n)/2
/// where half_log_sum_sq = log(sum sigma_i^2) / 2. The upper bound is attained
/// by isotropic spectra, the lower by rank-one spectra. The j_* fields are the
/// same bounds on the scale-free quantity 2 I - log sum sigma_i^2.
struct BoundsReport {
  double half_log_sum_sq = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double j_lower = 0.0;
  double j_upper = 0.0;
  double gap = 0.0;
};

inline BoundsReport distortion_bounds(const SingularSpectrum& s) {
  const auto dim = s.dim();
  const double sharp = mean_log_coordinate_value(dim);
  const double half_log_n = 0.5 * std::log(static_cast<double>(dim.value()));

  BoundsReport r;
  r.half_log_sum_sq = 0.5 * s.log_sum_sq();
  r.lower = r.half_log_sum_sq + sharp;
  r.upper = r.half_log_sum_sq - half_log_n;
  r.j_lower = 2.0 * sharp;
  r.j_upper = -2.0 * half_log_n;
  r.gap = -half_log_n - sharp;
  return r;
}

/// upper - lower, independent of the spectrum:
///   log 2 + gamma/2 + psi(n/2)/2 - log(n)/2.
/// Increases with n towards (gamma + log 2) / 2.
inline double bound_gap(SphereDimension dim) {
  if (dim.value() < 2) throw input_error("bound gap needs n >= 2");
  return -0.5 * std::log(static_cast<double>(dim.value())) - mean_log_coordinate_value(dim);
}

/// Limit of bound_gap(n) as n grows.
inline constexpr double bound_gap_limit = 0.5 * (euler_gamma + log_two);

/// gamma + log 2, twice bound_gap_limit; reported next to it for comparison.
inline constexpr double bound_gap_stated_limit = euler_gamma + log_two;

}  // namespace avgdist
