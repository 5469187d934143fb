#pragma once

// Globally adaptive Gauss-Kronrod (7/15) integration on a finite interval.

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

namespace avgdist {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  std::size_t subdivisions = 0;
  bool converged = false;
};

namespace detail {

struct GkSegment {
  double a, b, value, error;
  bool operator<(const GkSegment& o) const { return error < o.error; }
};

inline constexpr std::array<double, 8> kronrod_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5, 7).
inline constexpr std::array<double, 4> gauss_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
GkSegment gk15(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kronrod_weights[7];
  double gauss = fc * gauss_weights[3];
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kronrod_nodes[i];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kronrod_weights[i] * pair;
    if (i % 2 == 1) gauss += gauss_weights[i / 2] * pair;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace detail

/// Integrates f over [a, b], bisecting the segment with the largest error
/// estimate until the summed estimate falls below abs_tol or
/// max_subdivisions bisections have been spent.
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, double abs_tol,
                                    std::size_t max_subdivisions) {
  std::priority_queue<detail::GkSegment> segments;
  auto first = detail::gk15(f, a, b);
  double error = first.error;
  segments.push(first);

  std::size_t splits = 0;
  // Segments too narrow to bisect in floating point are retired here.
  double frozen_value = 0.0;
  double frozen_error = 0.0;
  while (error > abs_tol && splits < max_subdivisions && !segments.empty()) {
    const auto worst = segments.top();
    segments.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b) ||
        (worst.b - worst.a) < 64 * std::numeric_limits<double>::epsilon() * std::abs(mid)) {
      frozen_value += worst.value;
      frozen_error += worst.error;
      continue;
    }
    const auto left = detail::gk15(f, worst.a, mid);
    const auto right = detail::gk15(f, mid, worst.b);
    error += left.error + right.error - worst.error;
    segments.push(left);
    segments.push(right);
    ++splits;
  }

  // Re-sum to shed the drift of incremental updates.
  double total = frozen_value;
  double total_error = frozen_error;
  while (!segments.empty()) {
    total += segments.top().value;
    total_error += segments.top().error;
    segments.pop();
  }
  return {total, total_error, splits, total_error <= abs_tol};
}

}  // namespace avgdist
