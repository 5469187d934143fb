#pragma once

// Exact arithmetic for the constants that govern spherical log-means:
// harmonic sums, digamma at half-integers, sphere areas and Gaussian
// radial moments.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>

#include "avgdist/errors.hpp"

namespace avgdist {

using Rational = boost::multiprecision::cpp_rational;

/// Euler-Mascheroni constant, 20 significant digits.
inline constexpr double euler_gamma = 0.57721566490153286061;
inline constexpr double log_two = 0.69314718055994530942;

/// Ambient dimension n of R^n; the sphere is S^{n-1}. n = 1 is the
/// two-point sphere S^0.
class SphereDimension {
 public:
  explicit SphereDimension(std::size_t n) : n_(n) {
    if (n == 0) throw input_error("sphere dimension must be >= 1");
  }
  std::size_t value() const noexcept { return n_; }
  bool even() const noexcept { return n_ % 2 == 0; }
  double half() const noexcept { return 0.5 * static_cast<double>(n_); }

  friend bool operator==(SphereDimension, SphereDimension) = default;

 private:
  std::size_t n_;
};

/// rational + gamma_coeff * gamma + log2_coeff * log 2, with exact rational
/// coefficients.
struct GammaLogCombination {
  Rational rational{0};
  Rational gamma_coeff{0};
  Rational log2_coeff{0};

  double to_real() const {
    // Sum the three terms in long double so a small result does not lose
    // digits to cancellation between large coefficients.
    const long double r = rational.convert_to<long double>();
    const long double g = gamma_coeff.convert_to<long double>() * 0.57721566490153286061L;
    const long double l = log2_coeff.convert_to<long double>() * 0.69314718055994530942L;
    return static_cast<double>(r + g + l);
  }

  GammaLogCombination& operator+=(const GammaLogCombination& o) {
    rational += o.rational;
    gamma_coeff += o.gamma_coeff;
    log2_coeff += o.log2_coeff;
    return *this;
  }
  GammaLogCombination& operator-=(const GammaLogCombination& o) {
    rational -= o.rational;
    gamma_coeff -= o.gamma_coeff;
    log2_coeff -= o.log2_coeff;
    return *this;
  }
  GammaLogCombination& operator*=(const Rational& k) {
    rational *= k;
    gamma_coeff *= k;
    log2_coeff *= k;
    return *this;
  }

  friend GammaLogCombination operator+(GammaLogCombination a, const GammaLogCombination& b) {
    return a += b;
  }
  friend GammaLogCombination operator-(GammaLogCombination a, const GammaLogCombination& b) {
    return a -= b;
  }
  friend GammaLogCombination operator*(const Rational& k, GammaLogCombination a) {
    return a *= k;
  }
  friend GammaLogCombination operator-(GammaLogCombination a) { return a *= Rational{-1}; }
  friend bool operator==(const GammaLogCombination&, const GammaLogCombination&) = default;

  static GammaLogCombination constant(Rational r) { return {std::move(r), 0, 0}; }
  static GammaLogCombination gamma(Rational k = 1) { return {0, std::move(k), 0}; }
  static GammaLogCombination log2(Rational k = 1) { return {0, 0, std::move(k)}; }
};

inline std::string to_string(const Rational& r) { return r.str(); }

/// H_m = 1 + 1/2 + ... + 1/m, exactly. H_0 = 0.
inline Rational harmonic(std::size_t m) {
  Rational sum{0};
  for (std::size_t k = 1; k <= m; ++k) sum += Rational{1, static_cast<long long>(k)};
  return sum;
}

/// 1 + 1/3 + ... + 1/(2m-1), exactly.
inline Rational odd_harmonic(std::size_t m) {
  Rational sum{0};
  for (std::size_t k = 1; k <= m; ++k) sum += Rational{1, static_cast<long long>(2 * k - 1)};
  return sum;
}

/// psi(n/2), by upward recurrence from psi(1) = -gamma and
/// psi(1/2) = -gamma - 2 log 2.
inline GammaLogCombination digamma_half(SphereDimension dim) {
  const std::size_t n = dim.value();
  if (dim.even()) {
    return GammaLogCombination::gamma(-1) + GammaLogCombination::constant(harmonic(n / 2 - 1));
  }
  return GammaLogCombination::gamma(-1) + GammaLogCombination::log2(-2) +
         GammaLogCombination::constant(2 * odd_harmonic((n - 1) / 2));
}

/// Mean of log|x_1| over S^{n-1}: (-2 log 2 - gamma - psi(n/2)) / 2.
/// The gamma terms cancel, so the result always lies in Q[log 2].
inline GammaLogCombination mean_log_coordinate(SphereDimension dim) {
  auto sum = GammaLogCombination::log2(-2) + GammaLogCombination::gamma(-1) - digamma_half(dim);
  return Rational{1, 2} * std::move(sum);
}

/// The published closed form of the lower-bound constant:
///   even n: -log 2 - H_{n/2} / 2
///   odd n:  -(1 + 1/3 + ... + 1/(n-2))
/// It agrees with mean_log_coordinate for odd n and is smaller by exactly
/// 1/n for even n. Kept verbatim for comparison; the library's bounds use
/// mean_log_coordinate. n = 1 takes the odd branch (empty sum).
inline GammaLogCombination xi_paper(SphereDimension dim) {
  const std::size_t n = dim.value();
  if (dim.even()) {
    return GammaLogCombination::log2(-1) + GammaLogCombination::constant(Rational{-1, 2} * harmonic(n / 2));
  }
  return GammaLogCombination::constant(-odd_harmonic((n - 1) / 2));
}

namespace detail {

// Sum of 1/(first + step*j) for j = count-1 down to 0, smallest terms first.
inline double reciprocal_sum(std::size_t first, std::size_t step, std::size_t count) {
  double sum = 0.0;
  for (std::size_t j = count; j-- > 0;) sum += 1.0 / static_cast<double>(first + step * j);
  return sum;
}

}  // namespace detail

/// Floating-point psi(n/2) by the same recurrence as digamma_half; O(n)
/// and free of big-rational growth, for large n.
inline double digamma_half_value(SphereDimension dim) {
  const std::size_t n = dim.value();
  if (dim.even()) return -euler_gamma + detail::reciprocal_sum(1, 1, n / 2 - 1);
  return -euler_gamma - 2.0 * log_two + 2.0 * detail::reciprocal_sum(1, 2, (n - 1) / 2);
}

/// Floating-point mean_log_coordinate, summed without the cancelling gamma.
inline double mean_log_coordinate_value(SphereDimension dim) {
  const std::size_t n = dim.value();
  if (dim.even()) return -log_two - 0.5 * detail::reciprocal_sum(1, 1, n / 2 - 1);
  return -detail::reciprocal_sum(1, 2, (n - 1) / 2);
}

/// log Gamma(n/2) from Gamma(1) = 1 and Gamma(1/2) = sqrt(pi).
inline double log_gamma_half(SphereDimension dim) {
  const std::size_t n = dim.value();
  double sum = 0.0;
  if (dim.even()) {
    for (std::size_t j = 2; j < n / 2; ++j) sum += std::log(static_cast<double>(j));
    return sum;
  }
  sum = 0.5 * std::log(std::numbers::pi);
  for (std::size_t j = 0; j < (n - 1) / 2; ++j) sum += std::log(static_cast<double>(j) + 0.5);
  return sum;
}

/// Surface area of S^{n-1}: 2 pi^{n/2} / Gamma(n/2).
inline double sphere_area(SphereDimension dim) {
  return std::exp(log_two + dim.half() * std::log(std::numbers::pi) - log_gamma_half(dim));
}

/// Integral over (0, inf) of r^{n-1} exp(-r^2/2) dr = 2^{n/2-1} Gamma(n/2).
inline double radial_moment(SphereDimension dim) {
  return std::exp((dim.half() - 1.0) * log_two + log_gamma_half(dim));
}

/// Mean of log|g| for a standard Gaussian vector g in R^n:
/// (log 2 + psi(n/2)) / 2.
inline double gaussian_log_radius_mean(SphereDimension dim) {
  return 0.5 * (log_two + digamma_half_value(dim));
}

/// Integral over (0, inf) of log(r) r^{n-1} exp(-r^2/2) dr
///   = 2^{n/2-2} Gamma(n/2) (log 2 + psi(n/2)).
inline double radial_log_moment(SphereDimension dim) {
  return radial_moment(dim) * gaussian_log_radius_mean(dim);
}

}  // namespace avgdist
