#pragma once

// Sphere integrals of log-homogeneous functions, f(a x) = g(a) + f(x),
// recovered from full-space Gaussian integrals:
//
//   2^{n/2-1} Gamma(n/2) * int_{S^{n-1}} f
//       = int_{R^n} f(x) exp(-|x|^2/2) dx - area(S^{n-1}) * int_0^inf g(r) r^{n-1} exp(-r^2/2) dr

#include "avgdist/specfun.hpp"

namespace avgdist {

struct LogHomogeneousPair {
  double gaussian_integral = 0.0;
  double radial_g_integral = 0.0;
  SphereDimension dim{1};
};

/// Total (unnormalized) integral of f over S^{n-1}.
inline double sphere_integral_from_gaussian(const LogHomogeneousPair& pair) {
  return (pair.gaussian_integral - sphere_area(pair.dim) * pair.radial_g_integral) /
         radial_moment(pair.dim);
}

/// Mean form with g = log: the sphere mean of f is the Gaussian mean of f
/// minus the Gaussian mean of log|x|.
inline double sphere_mean_log_from_gaussian_mean(double gaussian_mean, SphereDimension dim) {
  return gaussian_mean - gaussian_log_radius_mean(dim);
}

}  // namespace avgdist
