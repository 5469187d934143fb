#pragma once

// Independent reference computations used only by tests. Nothing here calls
// into the library's numerical routines.

#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

// Tanh-sinh quadrature on [a, b]. The integrand receives the abscissa and
// its distance to the nearer endpoint is never rounded to zero, so
// integrable endpoint singularities (log, inverse square root) are fine.
inline double tanh_sinh(const std::function<double(double)>& f, double a, double b, double step = 1.0 / 128,
                        double t_max = 4.5) {
  const double half = 0.5 * (b - a);
  const double center = 0.5 * (a + b);
  double sum = f(center) * half * std::numbers::pi / 2;
  for (double t = step; t <= t_max; t += step) {
    const double u = std::numbers::pi / 2 * std::sinh(t);
    const double e = std::exp(-2.0 * u);
    const double complement = 2.0 * e / (1.0 + e);  // 1 - tanh(u)
    const double cosh_u = std::cosh(u);
    const double w = half * std::numbers::pi / 2 * std::cosh(t) / (cosh_u * cosh_u);
    if (w == 0.0 || half * complement == 0.0) break;
    const double left = a + half * complement;
    const double right = b - half * complement;
    if (left > a) sum += w * f(left);
    if (right < b) sum += w * f(right);
  }
  return sum * step;
}

// Periodic trapezoid rule for the mean of f over [0, 2 pi).
inline double circle_mean(const std::function<double(double)>& f, std::size_t points) {
  double sum = 0.0;
  for (std::size_t k = 0; k < points; ++k) sum += f(2.0 * std::numbers::pi * (static_cast<double>(k) + 0.5) / points);
  return sum / static_cast<double>(points);
}

// Mean of f over S^2: z uniform on [-1, 1] (Archimedes), azimuth by trapezoid.
inline double sphere2_mean(const std::function<double(double, double, double)>& f, std::size_t azimuth_points = 256) {
  auto ring = [&](double z) {
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    return circle_mean([&](double phi) { return f(rho * std::cos(phi), rho * std::sin(phi), z); }, azimuth_points);
  };
  return 0.5 * tanh_sinh(ring, -1.0, 1.0, 1.0 / 32);
}

// H_m - log m - 1/(2m); the next correction is -1/(12 m^2).
inline double euler_gamma_limit(std::size_t m) {
  double h = 0.0;
  for (std::size_t k = m; k >= 1; --k) h += 1.0 / static_cast<double>(k);
  const double md = static_cast<double>(m);
  return h - std::log(md) - 1.0 / (2.0 * md);
}

// Random orthogonal matrix (row-major) as a product of random plane rotations.
inline std::vector<double> random_orthogonal(std::size_t n, std::mt19937_64& rng) {
  std::vector<double> q(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) q[i * n + i] = 1.0;
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (std::size_t round = 0; round < 3; ++round) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t r = p + 1; r < n; ++r) {
        const double th = angle(rng);
        const double c = std::cos(th), s = std::sin(th);
        for (std::size_t k = 0; k < n; ++k) {
          const double x = q[p * n + k], y = q[r * n + k];
          q[p * n + k] = c * x - s * y;
          q[r * n + k] = s * x + c * y;
        }
      }
    }
  }
  return q;
}

inline std::vector<double> matmul(const std::vector<double>& a, const std::vector<double>& b, std::size_t n) {
  std::vector<double> c(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] += a[i * n + k] * b[k * n + j];
  return c;
}

// Spectrum with n entries log-uniform in [lo, hi].
inline std::vector<double> log_uniform_spectrum(std::size_t n, double lo, double hi, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  std::vector<double> v(n);
  for (auto& x : v) x = std::exp(u(rng));
  return v;
}

}  // namespace oracle
