#pragma once

// Estimators for the average distortion I = mean over the unit sphere of
// log|diag(sigma) u|.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "avgdist/errors.hpp"
#include "avgdist/philox.hpp"
#include "avgdist/quadrature.hpp"
#include "avgdist/specfun.hpp"
#include "avgdist/spectrum.hpp"

namespace avgdist {

enum class McMode { Projection, GaussianReduction };
enum class EstimateMethod { Quadrature, MonteCarlo, ClosedForm };

inline std::string_view to_string(EstimateMethod m) {
  switch (m) {
    case EstimateMethod::Quadrature: return "quadrature";
    case EstimateMethod::MonteCarlo: return "monte_carlo";
    case EstimateMethod::ClosedForm: return "closed_form";
  }
  return "unknown";
}

inline std::string_view to_string(McMode m) {
  return m == McMode::Projection ? "projection" : "reduction";
}

struct McConfig {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  McMode mode = McMode::Projection;
};

struct QuadConfig {
  double abs_tol = 1e-10;
  std::size_t max_subdivisions = 1000000;
};

struct DistortionEstimate {
  double value = 0.0;
  EstimateMethod method = EstimateMethod::Quadrature;
  std::optional<double> std_error;        // Monte Carlo only
  std::optional<std::uint64_t> samples_used;
  std::optional<std::uint64_t> skipped;   // samples with zero image norm
};

/// log|x| computed as log m + log(sum (x_i/m)^2) / 2 with m = max|x_i|;
/// -infinity for the zero vector.
inline double log_norm(std::span<const double> x) {
  double peak = 0.0;
  for (double v : x) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return -std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (double v : x) {
    const double r = v / peak;
    sum += r * r;
  }
  return std::log(peak) + 0.5 * std::log(sum);
}

namespace detail {

// Neumaier summation of f(v) over values.
template <class F>
double compensated_sum(std::span<const double> values, F f) {
  double sum = 0.0, carry = 0.0;
  for (double v : values) {
    const double x = f(v);
    const double t = sum + x;
    carry += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  return sum + carry;
}

}  // namespace detail

/// Uniform point on S^{n-1}: a normalized standard Gaussian vector, fully
/// determined by (n, sample_index, seed).
inline std::vector<double> sample_sphere(SphereDimension dim, std::uint64_t sample_index,
                                         std::uint64_t seed) {
  std::vector<double> g(dim.value());
  for (std::uint32_t attempt = 0;; ++attempt) {
    gaussian_vector(g, sample_index, seed, attempt);
    const double ln = log_norm(g);
    if (std::isfinite(ln)) {
      const double inv = std::exp(-ln);
      for (auto& x : g) x *= inv;
      return g;
    }
  }
}

/// Monte Carlo estimate of I. Projection averages log|diag(sigma) u| over
/// uniform sphere points; GaussianReduction averages log|diag(sigma) g| over
/// raw Gaussian vectors and subtracts the Gaussian mean of log|g|. Results
/// depend only on (spectrum, samples, seed, mode).
inline DistortionEstimate mc_estimate(const SingularSpectrum& s, const McConfig& cfg) {
  if (cfg.samples < 2) throw input_error("Monte Carlo needs at least 2 samples");
  const std::size_t n = s.size();
  const auto sig = s.sigmas();

  std::vector<double> g(n), image(n);
  std::vector<double> values;
  values.reserve(cfg.samples);
  std::uint64_t skipped = 0;

  for (std::uint64_t i = 0; i < cfg.samples; ++i) {
    double base = 0.0;
    for (std::uint32_t attempt = 0;; ++attempt) {
      gaussian_vector(g, i, cfg.seed, attempt);
      base = log_norm(g);
      if (std::isfinite(base)) break;
    }
    for (std::size_t k = 0; k < n; ++k) image[k] = sig[k] * g[k];
    const double ln = log_norm(image);
    if (!std::isfinite(ln)) {
      ++skipped;
      continue;
    }
    // Subtracting log|g| computed by the same routine keeps isotropic
    // samples exactly zero.
    values.push_back(cfg.mode == McMode::Projection ? ln - base : ln);
  }
  if (values.empty()) throw all_samples_skipped();

  const double count = static_cast<double>(values.size());
  const double mean = detail::compensated_sum(values, [](double v) { return v; }) / count;
  const double sq = detail::compensated_sum(values, [mean](double v) { return (v - mean) * (v - mean); });
  const double std_error =
      values.size() > 1 ? std::sqrt(sq / (count - 1.0)) / std::sqrt(count)
                        : std::numeric_limits<double>::infinity();

  DistortionEstimate est;
  est.method = EstimateMethod::MonteCarlo;
  est.value = cfg.mode == McMode::Projection ? mean : mean - gaussian_log_radius_mean(s.dim());
  est.std_error = std_error;
  est.samples_used = values.size();
  est.skipped = skipped;
  return est;
}

// The quadrature route. With X = sum sigma_i^2 g_i^2 and Y = sum g_i^2 for a
// standard Gaussian g,
//   I = (E log X - E log Y) / 2 = 1/2 int_0^inf (L_Y(t) - L_X(t)) / t dt,
// where L_X(t) = prod (1 + 2 sigma_i^2 t)^{-1/2} and L_Y(t) = (1 + 2t)^{-n/2}.

/// (L_Y(t) - L_X(t)) / t, with its t -> 0 limit sum sigma_i^2 - n at t = 0.
inline double laplace_bracket_over_t(const SingularSpectrum& s, double t) {
  const double n = static_cast<double>(s.size());
  if (t == 0.0) return s.sum_sq() - n;
  const double log_ly = -0.5 * n * std::log1p(2.0 * t);
  double log_lx = 0.0;
  for (double x : s.sigmas()) log_lx -= 0.5 * std::log1p(2.0 * x * x * t);
  const double diff = log_ly >= log_lx ? -std::exp(log_ly) * std::expm1(log_lx - log_ly)
                                       : std::exp(log_lx) * std::expm1(log_ly - log_lx);
  return diff / t;
}

namespace detail {

// Integration window [lo, hi] in x = log t outside of which the integrand
// (L_Y - L_X)(e^x) / 2 contributes at most tail_tol on each side. Assumes the
// spectrum is normalized to sum sigma_i^2 = n.
inline std::pair<double, double> laplace_window(std::span<const double> sq, double tail_tol) {
  const double n = static_cast<double>(sq.size());
  // Left: the bracket vanishes to second order, |L_Y - L_X| <= 3 n^2 t^2.
  const double lo = 0.5 * std::log(tail_tol / (0.75 * n * n));
  // Right: L_Y <= (2t)^{-n/2} and L_X <= prod_{i<=j} (2 s_i t)^{-1/2} for any j.
  auto tail_start = [&](double log_prefactor, double j) {
    return (2.0 / j) * (log_prefactor - std::log(j * tail_tol));
  };
  double hi = tail_start(-0.5 * n * log_two, n);
  double best = std::numeric_limits<double>::infinity();
  double log_prefactor = 0.0;
  for (std::size_t j = 0; j < sq.size() && sq[j] > 0.0; ++j) {
    log_prefactor -= 0.5 * std::log(2.0 * sq[j]);
    best = std::min(best, tail_start(log_prefactor, static_cast<double>(j + 1)));
  }
  hi = std::max(hi, best);
  return {lo, std::max(hi, lo + 1.0)};
}

}  // namespace detail

/// Deterministic quadrature value of I, accurate to cfg.abs_tol. The spectrum
/// is first rescaled to unit mean square (I shifts by the log of the scale),
/// then the Laplace integral is taken in x = log t over a window whose tails
/// are bounded analytically.
inline DistortionEstimate quad_estimate(const SingularSpectrum& s, const QuadConfig& cfg = {}) {
  if (!(cfg.abs_tol > 0.0 && cfg.abs_tol <= 1e-2)) throw input_error("abs_tol must lie in (0, 1e-2]");
  const std::size_t n = s.size();
  const double log_scale = 0.5 * (s.log_sum_sq() - std::log(static_cast<double>(n)));

  DistortionEstimate est;
  est.method = EstimateMethod::Quadrature;
  if (s.isotropic()) {
    est.value = std::log(s.largest());
    return est;
  }

  const double inv_scale = std::exp(-log_scale);
  std::vector<double> sq(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = s[i] * inv_scale;
    sq[i] = x * x;
  }

  const double half_n = 0.5 * static_cast<double>(n);
  auto integrand = [&](double x) {
    const double t = std::exp(x);
    const double log_ly = -half_n * std::log1p(2.0 * t);
    double log_lx = 0.0;
    for (double v : sq) log_lx -= 0.5 * std::log1p(2.0 * v * t);
    const double diff = log_ly >= log_lx ? -std::exp(log_ly) * std::expm1(log_lx - log_ly)
                                         : std::exp(log_lx) * std::expm1(log_ly - log_lx);
    return 0.5 * diff;
  };

  const double tail_tol = 0.05 * cfg.abs_tol;
  const auto [lo, hi] = detail::laplace_window(sq, tail_tol);
  const double budget = cfg.abs_tol - 2.0 * tail_tol;
  const auto result = integrate_adaptive(integrand, lo, hi, budget, cfg.max_subdivisions);
  if (!result.converged) throw tolerance_not_reached(result.error + 2.0 * tail_tol, cfg.abs_tol);

  est.value = log_scale + result.value;
  return est;
}

/// Exact I for isotropic spectra (log sigma_1) and rank-one spectra
/// (log sigma_1 + mean_log_coordinate(n)); empty otherwise.
inline std::optional<DistortionEstimate> closed_form(const SingularSpectrum& s) {
  DistortionEstimate est;
  est.method = EstimateMethod::ClosedForm;
  if (s.isotropic()) {
    est.value = std::log(s.largest());
    return est;
  }
  if (s.rank() == 1) {
    est.value = std::log(s.largest()) + mean_log_coordinate_value(s.dim());
    return est;
  }
  return std::nullopt;
}

}  // namespace avgdist
