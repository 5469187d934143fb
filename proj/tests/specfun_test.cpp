#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "avgdist/specfun.hpp"
#include "oracles.hpp"

using namespace avgdist;
using GLC = GammaLogCombination;

namespace {

SphereDimension dim(std::size_t n) { return SphereDimension(n); }

Rational q(long long p, long long d = 1) { return Rational(p, d); }

}  // namespace

TEST(Specfun, EulerGammaMatchesHarmonicLimit) {
  EXPECT_NEAR(euler_gamma, oracle::euler_gamma_limit(1000000), 1e-12);
  EXPECT_NEAR(log_two, std::log(2.0), 1e-16);
}

TEST(Specfun, HarmonicNumbers) {
  EXPECT_EQ(harmonic(0), q(0));
  EXPECT_EQ(harmonic(3), q(11, 6));
  EXPECT_EQ(harmonic(6), q(49, 20));
}

TEST(Specfun, OddHarmonicNumbers) {
  EXPECT_EQ(odd_harmonic(0), q(0));
  EXPECT_EQ(odd_harmonic(2), q(4, 3));
  EXPECT_EQ(odd_harmonic(3), q(23, 15));
}

TEST(Specfun, DigammaBaseValues) {
  EXPECT_EQ(digamma_half(dim(2)), GLC::gamma(-1));
  EXPECT_EQ(digamma_half(dim(1)), GLC::gamma(-1) + GLC::log2(-2));
  EXPECT_EQ(digamma_half(dim(6)), GLC::gamma(-1) + GLC::constant(q(3, 2)));
}

TEST(Specfun, DigammaRecurrence) {
  // psi(x + 1) = psi(x) + 1/x at x = n/2.
  for (std::size_t n = 1; n <= 512; ++n) {
    const auto step = digamma_half(dim(n + 2)) - digamma_half(dim(n));
    ASSERT_EQ(step, GLC::constant(q(2, static_cast<long long>(n)))) << "n = " << n;
  }
}

TEST(Specfun, DigammaFloatingPathMatchesExact) {
  for (std::size_t n = 1; n <= 300; ++n)
    ASSERT_NEAR(digamma_half_value(dim(n)), digamma_half(dim(n)).to_real(), 1e-13) << n;
}

TEST(Specfun, MeanLogCoordinateSmallSpheres) {
  EXPECT_EQ(mean_log_coordinate(dim(1)), GLC{});
  EXPECT_EQ(mean_log_coordinate(dim(3)), GLC::constant(-1));
  EXPECT_EQ(mean_log_coordinate(dim(2)), GLC::log2(-1));

  // Circle: (2/pi) int_0^{pi/2} log cos.
  const double circle =
      2.0 / std::numbers::pi * oracle::tanh_sinh([](double t) { return std::log(std::cos(t)); }, 0.0, std::numbers::pi / 2);
  EXPECT_NEAR(mean_log_coordinate(dim(2)).to_real(), circle, 1e-12);
  // S^2: x_1 is uniform on [-1, 1].
  EXPECT_NEAR(mean_log_coordinate(dim(3)).to_real(),
              oracle::tanh_sinh([](double x) { return std::log(x); }, 0.0, 1.0), 1e-12);
}

TEST(Specfun, GammaCancelsInMeanLogCoordinate) {
  for (std::size_t n = 1; n <= 200; ++n) ASSERT_EQ(mean_log_coordinate(dim(n)).gamma_coeff, 0) << n;
}

TEST(Specfun, MeanLogCoordinateFloatingPath) {
  for (std::size_t n = 1; n <= 300; ++n)
    ASSERT_NEAR(mean_log_coordinate_value(dim(n)), mean_log_coordinate(dim(n)).to_real(), 1e-14) << n;
}

TEST(Specfun, XiAsPrinted) {
  EXPECT_EQ(xi_paper(dim(3)), GLC::constant(-1));
  EXPECT_EQ(xi_paper(dim(2)), GLC::log2(-1) + GLC::constant(q(-1, 2)));
  EXPECT_EQ(xi_paper(dim(5)), GLC::constant(q(-4, 3)));
}

TEST(Specfun, XiAgreesForOddAndIsOffByOneOverNForEven) {
  for (std::size_t n = 3; n <= 101; n += 2) ASSERT_EQ(xi_paper(dim(n)), mean_log_coordinate(dim(n))) << n;
  for (std::size_t n = 2; n <= 100; n += 2) {
    const auto diff = xi_paper(dim(n)) - mean_log_coordinate(dim(n));
    ASSERT_EQ(diff, GLC::constant(q(-1, static_cast<long long>(n)))) << n;
  }
}

TEST(Specfun, CombinationArithmetic) {
  const GLC a{q(1, 2), q(1), q(-3)};
  const GLC b{q(1, 3), q(-1), q(3)};
  EXPECT_EQ(a + b, GLC::constant(q(5, 6)));
  EXPECT_EQ(q(2) * a, (GLC{q(1), q(2), q(-6)}));
  EXPECT_EQ(-a + a, GLC{});
  EXPECT_NEAR(a.to_real(), 0.5 + euler_gamma - 3 * std::log(2.0), 1e-15);
}

TEST(Specfun, SphereArea) {
  EXPECT_DOUBLE_EQ(sphere_area(dim(1)), 2.0);
  EXPECT_NEAR(sphere_area(dim(2)), 2 * std::numbers::pi, 1e-14);
  EXPECT_NEAR(sphere_area(dim(3)), 4 * std::numbers::pi, 1e-13);
  EXPECT_NEAR(sphere_area(dim(4)), 2 * std::numbers::pi * std::numbers::pi, 1e-13);
}

TEST(Specfun, RadialMoment) {
  EXPECT_NEAR(radial_moment(dim(2)), 1.0, 1e-15);
  EXPECT_NEAR(radial_moment(dim(4)), 2.0, 1e-15);
  EXPECT_NEAR(radial_moment(dim(3)), std::sqrt(std::numbers::pi / 2), 1e-15);
}

TEST(Specfun, GaussianNormalization) {
  for (std::size_t n = 1; n <= 150; ++n) {
    const double lhs = sphere_area(dim(n)) * radial_moment(dim(n));
    const double rhs = std::pow(2 * std::numbers::pi, 0.5 * static_cast<double>(n));
    ASSERT_NEAR(lhs / rhs, 1.0, 1e-12) << n;
  }
}

TEST(Specfun, RadialLogMomentClosedForms) {
  // Frozen from the tanh-sinh oracle; these agree with the closed forms
  // (log 2 - gamma)/2, -sqrt(pi/2)(gamma + log 2)/2 and log 2 + 1 - gamma.
  EXPECT_NEAR(radial_log_moment(dim(2)), 0.0579657578292062, 1e-13);
  EXPECT_NEAR(radial_log_moment(dim(1)), -0.796081856868608, 1e-13);
  EXPECT_NEAR(radial_log_moment(dim(4)), 1.11593151565841, 1e-13);
  EXPECT_NEAR(radial_log_moment(dim(2)), 0.5 * (std::log(2.0) - euler_gamma), 1e-15);
  EXPECT_NEAR(radial_log_moment(dim(4)), std::log(2.0) + 1 - euler_gamma, 1e-15);
}

TEST(Specfun, RadialLogMomentMatchesQuadrature) {
  for (std::size_t n = 1; n <= 64; ++n) {
    const double nd = static_cast<double>(n);
    const double ref = oracle::tanh_sinh(
        [nd](double r) { return std::log(r) * std::exp((nd - 1) * std::log(r) - r * r / 2); }, 0.0, 40.0);
    const double got = radial_log_moment(dim(n));
    // Values reach ~1e43 at n = 64, so the comparison is relative.
    ASSERT_NEAR(got, ref, 1e-10 * std::max(1.0, std::abs(ref))) << n;
  }
}

TEST(Specfun, GaussianLogRadiusMean) {
  EXPECT_NEAR(gaussian_log_radius_mean(dim(2)), radial_log_moment(dim(2)) / radial_moment(dim(2)), 1e-15);
  EXPECT_NEAR(gaussian_log_radius_mean(dim(1)), -0.6351814227307392, 1e-15);
  EXPECT_NEAR(gaussian_log_radius_mean(dim(3)), 1 - (euler_gamma + std::log(2.0)) / 2, 1e-15);
}

TEST(Specfun, DimensionMustBePositive) { EXPECT_THROW(SphereDimension(0), input_error); }
