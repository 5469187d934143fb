#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "avgdist/errors.hpp"
#include "avgdist/specfun.hpp"

namespace avgdist {

/// Square real matrix, row-major, all entries finite.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t dim, std::vector<double> row_major) : dim_(dim), entries_(std::move(row_major)) {
    if (dim_ == 0) throw input_error("matrix must have at least one row");
    if (entries_.size() != dim_ * dim_) throw input_error("matrix is not square");
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      if (!std::isfinite(entries_[k])) {
        throw input_error("non-finite matrix entry at row " + std::to_string(k / dim_) + ", column " +
                          std::to_string(k % dim_));
      }
    }
  }

  static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows) {
    const std::size_t n = rows.size();
    std::vector<double> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) {
        throw input_error("matrix is not square: row " + std::to_string(i) + " has " +
                          std::to_string(rows[i].size()) + " entries, expected " + std::to_string(n));
      }
      flat.insert(flat.end(), rows[i].begin(), rows[i].end());
    }
    return DenseMatrix(n, std::move(flat));
  }

  static DenseMatrix identity(std::size_t n) {
    std::vector<double> e(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
    return DenseMatrix(n, std::move(e));
  }

  std::size_t dim() const noexcept { return dim_; }
  double operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  double& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  std::span<const double> entries() const noexcept { return entries_; }

  DenseMatrix transposed() const {
    std::vector<double> t(entries_.size());
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) t[j * dim_ + i] = entries_[i * dim_ + j];
    return DenseMatrix(dim_, std::move(t));
  }

 private:
  std::size_t dim_;
  std::vector<double> entries_;
};

/// Singular values sigma_1 >= ... >= sigma_n >= 0 with sigma_1 > 0.
class SingularSpectrum {
 public:
  /// Sorted copy of values; rejects NaN, infinities, negatives and the
  /// all-zero spectrum.
  static SingularSpectrum from_values(std::vector<double> values) {
    if (values.empty()) throw invalid_spectrum(0, "spectrum is empty");
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (std::isnan(values[i])) throw invalid_spectrum(i, "NaN");
      if (std::isinf(values[i])) throw invalid_spectrum(i, "infinite");
      if (values[i] < 0.0) throw invalid_spectrum(i, "negative");
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    if (!(values.front() > 0.0)) throw invalid_spectrum(0, "all singular values are zero");
    // 0.0 and -0.0 compare equal; normalize the sign.
    for (auto& v : values)
      if (v == 0.0) v = 0.0;
    return SingularSpectrum(std::move(values));
  }

  std::span<const double> sigmas() const noexcept { return sigmas_; }
  std::size_t size() const noexcept { return sigmas_.size(); }
  SphereDimension dim() const { return SphereDimension(sigmas_.size()); }
  double largest() const noexcept { return sigmas_.front(); }
  double smallest() const noexcept { return sigmas_.back(); }
  double operator[](std::size_t i) const { return sigmas_[i]; }

  /// s_i = sigma_i^2.
  std::vector<double> squared() const {
    std::vector<double> s(sigmas_.size());
    std::transform(sigmas_.begin(), sigmas_.end(), s.begin(), [](double x) { return x * x; });
    return s;
  }

  /// sum sigma_i^2, possibly overflowing to infinity for extreme spectra;
  /// use log_sum_sq() in numerical work.
  double sum_sq() const {
    double sum = 0.0;
    for (double x : sigmas_) sum += x * x;
    return sum;
  }

  /// log sum sigma_i^2 = log sigma_1^2 + log sum (sigma_i / sigma_1)^2.
  double log_sum_sq() const {
    const double top = largest();
    double sum = 0.0;
    for (double x : sigmas_) {
      const double r = x / top;
      sum += r * r;
    }
    return 2.0 * std::log(top) + std::log(sum);
  }

  std::size_t rank() const noexcept {
    return static_cast<std::size_t>(std::count_if(sigmas_.begin(), sigmas_.end(), [](double x) { return x > 0.0; }));
  }
  bool isotropic() const noexcept { return sigmas_.front() == sigmas_.back(); }

  SingularSpectrum scaled(double c) const {
    std::vector<double> v(sigmas_);
    for (auto& x : v) x *= c;
    return from_values(std::move(v));
  }

  friend bool operator==(const SingularSpectrum&, const SingularSpectrum&) = default;

 private:
  explicit SingularSpectrum(std::vector<double> sorted) : sigmas_(std::move(sorted)) {}
  std::vector<double> sigmas_;
};

inline SingularSpectrum spectrum_from_values(std::vector<double> values) {
  return SingularSpectrum::from_values(std::move(values));
}

inline constexpr int jacobi_max_sweeps = 30;

/// Singular values by one-sided (Hestenes) Jacobi: plane rotations are
/// applied to column pairs, cyclically by rows, until every pair satisfies
/// |<a_i, a_j>| <= tol * |a_i| |a_j|. The singular values are then the
/// column norms.
inline SingularSpectrum singular_values(const DenseMatrix& m, double tol = 1e-12) {
  if (!(tol > 0.0 && tol <= 1e-4)) throw input_error("Jacobi tolerance must lie in (0, 1e-4]");
  const std::size_t n = m.dim();

  double scale = 0.0;
  for (double x : m.entries()) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) throw zero_matrix();

  // Column-major working copy, scaled so the largest entry is 1.
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[j * n + i] = m(i, j) / scale;
  auto column = [&](std::size_t j) { return std::span<double>(a.data() + j * n, n); };

  bool converged = false;
  for (int sweep = 0; sweep < jacobi_max_sweeps && !converged; ++sweep) {
    converged = true;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        auto cp = column(p);
        auto cq = column(q);
        double alpha = 0.0, beta = 0.0, gamma = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          alpha += cp[k] * cp[k];
          beta += cq[k] * cq[k];
          gamma += cp[k] * cq[k];
        }
        if (std::abs(gamma) <= tol * std::sqrt(alpha) * std::sqrt(beta)) continue;
        converged = false;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t k = 0; k < n; ++k) {
          const double x = cp[k];
          const double y = cq[k];
          cp[k] = c * x - s * y;
          cq[k] = s * x + c * y;
        }
      }
    }
  }
  if (!converged) throw no_convergence(jacobi_max_sweeps);

  std::vector<double> sigmas(n);
  for (std::size_t j = 0; j < n; ++j) {
    auto cj = column(j);
    double peak = 0.0;
    for (double x : cj) peak = std::max(peak, std::abs(x));
    double sum = 0.0;
    if (peak > 0.0)
      for (double x : cj) sum += (x / peak) * (x / peak);
    sigmas[j] = peak * std::sqrt(sum) * scale;
  }
  return SingularSpectrum::from_values(std::move(sigmas));
}

}  // namespace avgdist
