#pragma once

// Law-of-large-numbers diagnostics: for the prefix spectra sigma_1..sigma_n of
// one sequence, the deviation
//   delta_n = I(A_n) - log(sum sigma_i^2)/2 + log(n)/2
// tends to zero when r_n = sum sigma^4 / (sum sigma^2)^2 does, in particular
// when condition numbers stay bounded.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "avgdist/errors.hpp"
#include "avgdist/estimate.hpp"
#include "avgdist/spectrum.hpp"

namespace avgdist {

/// sum sigma_i^4 / (sum sigma_i^2)^2, in [1/n, 1].
inline double lln_ratio(const SingularSpectrum& s) {
  const double top = s.largest();
  double s2 = 0.0, s4 = 0.0;
  for (double x : s.sigmas()) {
    const double r = (x / top) * (x / top);
    s2 += r;
    s4 += r * r;
  }
  return s4 / (s2 * s2);
}

/// sigma_max / sigma_min; +infinity when sigma_min = 0.
inline double condition_number(const SingularSpectrum& s) {
  if (s.smallest() == 0.0) return std::numeric_limits<double>::infinity();
  return s.largest() / s.smallest();
}

struct LlnHypothesis {
  bool ratios_decreasing = false;
  double max_condition_number = 0.0;
  /// r_n <= c^4 / n at every scanned n, c = max_condition_number.
  bool ratio_bound_holds = false;
};

struct LlnDiagnostics {
  std::vector<std::size_t> dims;
  std::vector<double> ratios;
  std::vector<double> deviations;
  std::vector<double> condition_numbers;
  LlnHypothesis hypothesis;
};

inline LlnDiagnostics lln_scan(std::span<const double> sigma_sequence, std::span<const std::size_t> dims,
                               const QuadConfig& quad = {}) {
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (dims[k] < 2) throw input_error("scan dimensions must be >= 2");
    if (k > 0 && dims[k] <= dims[k - 1]) throw input_error("scan dimensions must be strictly increasing");
  }
  if (!dims.empty() && dims.back() > sigma_sequence.size()) {
    throw input_error("sequence has " + std::to_string(sigma_sequence.size()) + " values, scan needs " +
                      std::to_string(dims.back()));
  }

  LlnDiagnostics d;
  for (const std::size_t n : dims) {
    const auto prefix = sigma_sequence.first(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!(prefix[i] > 0.0) || !std::isfinite(prefix[i])) {
        throw invalid_prefix(n, "entry " + std::to_string(i) + " is not a positive finite number");
      }
    }
    const auto s = SingularSpectrum::from_values({prefix.begin(), prefix.end()});
    const double value = quad_estimate(s, quad).value;
    d.dims.push_back(n);
    d.ratios.push_back(lln_ratio(s));
    d.condition_numbers.push_back(condition_number(s));
    d.deviations.push_back(value - 0.5 * s.log_sum_sq() + 0.5 * std::log(static_cast<double>(n)));
  }

  auto& h = d.hypothesis;
  h.ratios_decreasing = std::adjacent_find(d.ratios.begin(), d.ratios.end(),
                                           [](double a, double b) { return !(b < a); }) == d.ratios.end();
  h.max_condition_number =
      d.condition_numbers.empty() ? 0.0 : *std::max_element(d.condition_numbers.begin(), d.condition_numbers.end());
  h.ratio_bound_holds = true;
  const double c4 = std::pow(h.max_condition_number, 4);
  for (std::size_t k = 0; k < d.dims.size(); ++k)
    h.ratio_bound_holds = h.ratio_bound_holds && d.ratios[k] <= c4 / static_cast<double>(d.dims[k]);
  return d;
}

}  // namespace avgdist
