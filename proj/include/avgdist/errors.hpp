#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace avgdist {

/// Bad or inconsistent input: invalid spectra, zero matrices, malformed prefixes.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative method failed to reach its target.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class invalid_spectrum : public input_error {
 public:
  invalid_spectrum(std::size_t index, const std::string& what)
      : input_error("invalid spectrum entry " + std::to_string(index) + ": " + what),
        index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class zero_matrix : public input_error {
 public:
  zero_matrix() : input_error("matrix has no nonzero entries") {}
};

class invalid_prefix : public input_error {
 public:
  invalid_prefix(std::size_t dim, const std::string& what)
      : input_error("invalid prefix of length " + std::to_string(dim) + ": " + what),
        dim_(dim) {}
  std::size_t dim() const noexcept { return dim_; }

 private:
  std::size_t dim_;
};

class no_convergence : public numerical_error {
 public:
  explicit no_convergence(int sweeps)
      : numerical_error("Jacobi SVD did not converge in " + std::to_string(sweeps) + " sweeps") {}
};

class tolerance_not_reached : public numerical_error {
 public:
  tolerance_not_reached(double achieved, double requested)
      : numerical_error("quadrature stopped at error estimate " + std::to_string(achieved) +
                        " (requested " + std::to_string(requested) + ")"),
        achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

class all_samples_skipped : public numerical_error {
 public:
  all_samples_skipped() : numerical_error("every Monte Carlo sample had zero image norm") {}
};

}  // namespace avgdist
