#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "avgdist/lln.hpp"

using namespace avgdist;

TEST(Lln, Ratio) {
  for (std::size_t n : {1u, 2u, 7u, 64u}) {
    const auto r = lln_ratio(spectrum_from_values(std::vector<double>(n, 3.0)));
    EXPECT_EQ(r, 1.0 / static_cast<double>(n));
  }
  EXPECT_EQ(lln_ratio(spectrum_from_values({1, 0, 0})), 1.0);
  EXPECT_NEAR(lln_ratio(spectrum_from_values({1, 2, 3})), 0.5, 1e-15);
  EXPECT_NEAR(lln_ratio(spectrum_from_values({1e300, 2e300, 3e300})), 0.5, 1e-15);
}

TEST(Lln, ConditionNumber) {
  EXPECT_EQ(condition_number(spectrum_from_values({1, 1})), 1.0);
  EXPECT_EQ(condition_number(spectrum_from_values({10, 2, 5})), 5.0);
  EXPECT_TRUE(std::isinf(condition_number(spectrum_from_values({1, 0}))));
}

TEST(Lln, RatioObeysConditionBound) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(1.0, 10.0);
  std::vector<double> seq(4096);
  for (auto& x : seq) x = u(rng);
  double c = 1.0;
  double lo = seq[0], hi = seq[0];
  for (std::size_t n = 1; n <= seq.size(); ++n) {
    lo = std::min(lo, seq[n - 1]);
    hi = std::max(hi, seq[n - 1]);
    c = hi / lo;
    const auto s = spectrum_from_values({seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(n)});
    ASSERT_LE(lln_ratio(s), std::pow(c, 4) / static_cast<double>(n)) << n;
    ASSERT_GE(lln_ratio(s), 1.0 / static_cast<double>(n) * (1 - 1e-12)) << n;
  }
}

TEST(Lln, IsotropicScanHasZeroDeviation) {
  const std::vector<double> ones(8, 1.0);
  const std::vector<std::size_t> dims = {2, 4, 8};
  const auto d = lln_scan(ones, dims);
  ASSERT_EQ(d.deviations.size(), 3u);
  for (double x : d.deviations) EXPECT_NEAR(x, 0.0, 1e-10);
  EXPECT_TRUE(d.hypothesis.ratios_decreasing);
  EXPECT_EQ(d.hypothesis.max_condition_number, 1.0);
}

TEST(Lln, AlternatingSequenceConverges) {
  std::vector<double> seq(128);
  for (std::size_t i = 0; i < seq.size(); ++i) seq[i] = i % 2 ? 2.0 : 1.0;
  const std::vector<std::size_t> dims = {2, 8, 32, 128};
  const auto d = lln_scan(seq, dims);
  EXPECT_TRUE(d.hypothesis.ratios_decreasing);
  EXPECT_TRUE(d.hypothesis.ratio_bound_holds);
  for (std::size_t k = 1; k < dims.size(); ++k) {
    EXPECT_LT(d.ratios[k], d.ratios[k - 1]);
    EXPECT_LT(std::abs(d.deviations[k]), std::abs(d.deviations[k - 1]));
  }
}

TEST(Lln, GeometricSequenceViolatesHypothesis) {
  std::vector<double> seq(32);
  for (std::size_t i = 0; i < seq.size(); ++i) seq[i] = std::ldexp(1.0, static_cast<int>(i + 1));
  const std::vector<std::size_t> dims = {2, 8, 32};
  const auto d = lln_scan(seq, dims);
  for (double r : d.ratios) EXPECT_GT(r, 0.3);
}

TEST(Lln, BoundedConditionDeviationShrinks) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(1.0, 10.0);
  std::vector<double> seq(1024);
  for (auto& x : seq) x = u(rng);
  const std::vector<std::size_t> dims = {16, 1024};
  const auto d = lln_scan(seq, dims);
  EXPECT_LT(std::abs(d.deviations[1]), std::abs(d.deviations[0]));
  EXPECT_LT(std::abs(d.deviations[1]), 0.05);
}

TEST(Lln, InvalidInputs) {
  const std::vector<double> seq = {1, 0, 2, 3};
  const std::vector<std::size_t> ok = {2}, unsorted = {3, 2}, small = {1}, too_long = {5};
  EXPECT_THROW(lln_scan(seq, ok), invalid_prefix);
  const std::vector<double> good = {1, 2, 3, 4};
  EXPECT_THROW(lln_scan(good, unsorted), input_error);
  EXPECT_THROW(lln_scan(good, small), input_error);
  EXPECT_THROW(lln_scan(good, too_long), input_error);
}
