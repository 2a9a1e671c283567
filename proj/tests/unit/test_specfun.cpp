// SPDX-License-Identifier: Apache-2.0
#include "opiallab/specfun.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "opiallab/errors.hpp"
#include "opiallab/quadrature.hpp"
#include "test_oracles.hpp"

namespace {

using opiallab::DomainError;
using opiallab::specfun::beta;
using opiallab::specfun::log_gamma;
using opiallab::testing::relative_error;
using std::numbers::pi;

TEST(LogGamma, ExactAnchors) {
  EXPECT_EQ(log_gamma(1.0), 0.0);
  EXPECT_NEAR(log_gamma(2.0), 0.0, 1e-15);
  EXPECT_NEAR(log_gamma(0.5), 0.5723649429247000870717137, 1e-14);
}

TEST(LogGamma, HighPrecisionTable) {
  // mpmath loggamma, 25 digits.
  struct Row {
    double x;
    double value;
  };
  const Row table[] = {{0.1, 2.252712651734205959869702},  {0.25, 1.28802252469807745737061},
                       {0.75, 0.203280951431295371481433}, {3.5, 1.200973602347074224816022},
                       {10.0, 12.80182748008146961120772}, {50.0, 144.5657439463448860089184}};
  for (const auto& row : table) {
    // Relative error of Γ equals the absolute error of ln Γ.
    EXPECT_LT(std::abs(log_gamma(row.x) - row.value), 1e-13) << "x = " << row.x;
  }
}

TEST(LogGamma, MatchesLibmAcrossAccuracyRange) {
  double worst = 0.0;
  for (int i = 0; i <= 20000; ++i) {
    const double x = 0.1 + (50.0 - 0.1) * i / 20000.0;
    worst = std::max(worst, std::abs(std::expm1(log_gamma(x) - std::lgamma(x))));
  }
  EXPECT_LT(worst, 1e-13);
}

TEST(LogGamma, RejectsNonPositiveAndNonFinite) {
  EXPECT_THROW(log_gamma(0.0), DomainError);
  EXPECT_THROW(log_gamma(-1.5), DomainError);
  EXPECT_THROW(log_gamma(std::numeric_limits<double>::quiet_NaN()), DomainError);
  EXPECT_THROW(log_gamma(std::numeric_limits<double>::infinity()), DomainError);
}

TEST(Beta, AnchorValues) {
  EXPECT_LT(relative_error(beta(0.5, 0.5), pi), 1e-12);
  EXPECT_LT(relative_error(beta(1.5, 0.5), pi / 2), 1e-12);
  EXPECT_NEAR(beta(1.0, 1.0), 1.0, 1e-14);
  EXPECT_LT(relative_error(beta(0.25, 0.5), 5.24411510858423962093), 1e-13);
}

TEST(Beta, RejectsNonPositiveArguments) {
  EXPECT_THROW(beta(0.0, 1.0), DomainError);
  EXPECT_THROW(beta(1.0, -2.0), DomainError);
}

TEST(Beta, LargeArgumentsDoNotOverflow) {
  const double b = beta(400.0, 300.0);
  EXPECT_TRUE(std::isfinite(b));
  EXPECT_GT(b, 0.0);
}

// Properties over 200 seeded pairs in [0.1, 20]².
class BetaProperties : public ::testing::Test {
 protected:
  void SetUp() override {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> dist(0.1, 20.0);
    for (auto& pair : pairs_) pair = {dist(rng), dist(rng)};
  }
  std::array<std::pair<double, double>, 200> pairs_{};
};

TEST_F(BetaProperties, Symmetry) {
  for (auto [a, b] : pairs_) EXPECT_LT(relative_error(beta(a, b), beta(b, a)), 1e-14);
}

TEST_F(BetaProperties, Recurrence) {
  for (auto [a, b] : pairs_) {
    EXPECT_LT(relative_error(beta(a + 1.0, b), beta(a, b) * a / (a + b)), 1e-13)
        << "a = " << a << ", b = " << b;
  }
}

TEST_F(BetaProperties, Positivity) {
  for (auto [a, b] : pairs_) EXPECT_GT(beta(a, b), 0.0);
}

TEST(Beta, AgreesWithDirectQuadrature) {
  for (double a = 0.5; a <= 5.0; a += 0.75) {
    for (double b = 0.5; b <= 5.0; b += 0.75) {
      const auto integral = opiallab::quadrature::integrate_endpoint_singular(
          [a, b](double t, double omt) { return std::pow(t, a - 1.0) * std::pow(omt, b - 1.0); },
          1e-13);
      EXPECT_LT(relative_error(beta(a, b), integral.value), 1e-10) << a << ", " << b;
    }
  }
}

}  // namespace
