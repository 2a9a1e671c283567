// SPDX-License-Identifier: Apache-2.0
#include "opiallab/emdenfowler.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "opiallab/errors.hpp"
#include "test_oracles.hpp"

namespace {

using namespace opiallab::emdenfowler;
using opiallab::testing::relative_error;
using std::numbers::pi;

TEST(MuAmplitudeProduct, Examples) {
  EXPECT_NEAR(mu_amplitude_product(1.0, 1.0), pi * pi, 1e-12);
  EXPECT_LT(relative_error(mu_amplitude_product(3.0, 1.0), opiallab::testing::kMuAmplitudeP3),
            1e-13);
  for (double length : {0.5, 2.0, 7.0}) {
    EXPECT_LT(relative_error(mu_amplitude_product(1.0, length), pi * pi / (length * length)),
              1e-13);
  }
  EXPECT_THROW(mu_amplitude_product(0.5, 1.0), opiallab::DomainError);
  EXPECT_THROW(mu_amplitude_product(3.0, 0.0), opiallab::DomainError);
}

TEST(HalfLength, Examples) {
  EXPECT_NEAR(length_from_amplitude(1.0, pi * pi, 1.0), 1.0, 1e-14);
  EXPECT_NEAR(2.0 * half_length(1.0, pi * pi, 1.0), 1.0, 1e-14);
  EXPECT_NEAR(length_from_amplitude(3.0, 1.0, 3.70815), 1.0, 1e-6);
  const double a = 2.5;
  EXPECT_NEAR(length_from_amplitude(3.0, 1.0, 2 * a) / length_from_amplitude(3.0, 1.0, a), 0.5,
              1e-14);
}

TEST(HalfLength, InvertsAmplitudeFor) {
  for (double p : {1.5, 2.0, 3.0, 5.0}) {
    for (double length : {0.7, 1.0, 3.0}) {
      const double a = amplitude_for(p, 2.0, length);
      EXPECT_LT(relative_error(length_from_amplitude(p, 2.0, a), length), 1e-13);
    }
  }
}

TEST(FirstIntegral, LinearCaseIsSine) {
  const auto prof = profile_from_first_integral(1.0, 1.0, 1.0);
  double worst = 0.0;
  for (std::size_t i = 0; i <= prof.profile.intervals(); ++i) {
    worst = std::max(worst, std::abs(prof.profile[i] - std::sin(pi * prof.profile.node(i))));
  }
  EXPECT_LT(worst, 1e-8);
  EXPECT_NEAR(prof.mu, pi * pi, 1e-12);
  EXPECT_LT(energy_identity_residual(prof), 1e-10);
}

TEST(FirstIntegral, RecoversUnitMultiplier) {
  const auto prof = profile_from_first_integral(3.0, 1.0, opiallab::testing::kAmplitudeP3);
  EXPECT_NEAR(prof.mu, 1.0, 1e-8);
}

TEST(FirstIntegral, MaximumEqualsAmplitude) {
  for (double p : {1.5, 2.0, 3.0, 5.0}) {
    for (double a : {0.3, 1.0, 4.0}) {
      const auto prof = profile_from_first_integral(p, 1.3, a, 400);
      EXPECT_NEAR(prof.profile.max_abs(), a, 1e-10 * a) << "p = " << p;
      EXPECT_LT(prof.residuals.boundary, 1e-10);
      EXPECT_TRUE(has_ground_state_shape(prof, 1e-10));
    }
  }
}

TEST(FirstIntegral, RejectsBadGrid) {
  EXPECT_THROW(profile_from_first_integral(3.0, 1.0, 1.0, 8), opiallab::DomainError);
  EXPECT_THROW(profile_from_first_integral(3.0, 1.0, 1.0, 101), opiallab::DomainError);
  EXPECT_THROW(profile_from_first_integral(3.0, 1.0, -1.0), opiallab::DomainError);
}

TEST(Shoot, LinearCaseIsSine) {
  const auto prof = shoot(1.0, pi * pi, 1.0);
  double worst = 0.0;
  for (std::size_t i = 0; i <= prof.profile.intervals(); ++i) {
    worst = std::max(worst, std::abs(prof.profile[i] - std::sin(pi * prof.profile.node(i))));
  }
  EXPECT_LT(worst, 1e-6);
  EXPECT_NEAR(prof.slope.front(), pi, 1e-12);
  EXPECT_LT(energy_identity_residual(prof), 1e-10);
}

TEST(Shoot, LinearCaseWrongMultiplierFails) {
  EXPECT_THROW(shoot(1.0, 9.0, 1.0), opiallab::SolverError);
}

TEST(Shoot, CubicUnitMultiplier) {
  const auto prof = shoot(3.0, 1.0, 1.0);
  EXPECT_LT(relative_error(prof.amplitude, opiallab::testing::kAmplitudeP3), 1e-8);
  EXPECT_LT(relative_error(prof.amplitude * prof.amplitude, mu_amplitude_product(3.0, 1.0)),
            1e-8);
  EXPECT_LT(energy_identity_residual(prof), 1e-7);
  const double h = prof.profile.spacing();
  std::size_t argmax = 0;
  for (std::size_t i = 0; i <= prof.profile.intervals(); ++i) {
    if (prof.profile[i] > prof.profile[argmax]) argmax = i;
  }
  EXPECT_LE(std::abs(prof.profile.node(argmax) - 0.5), 2 * h);
}

TEST(Shoot, AgreesWithFirstIntegral) {
  for (double p : {1.5, 2.0, 3.0, 5.0}) {
    const auto shot = shoot(p, 1.0, 1.0);
    const auto built = profile_from_first_integral(p, 1.0, shot.amplitude);
    EXPECT_LT(sup_distance(shot.profile, built.profile), 1e-6) << "p = " << p;
    EXPECT_LT(relative_error(built.mu, 1.0), 1e-8) << "p = " << p;
  }
}

TEST(Shoot, AmplitudeScalingLaw) {
  for (double p : {1.5, 2.0, 3.0, 5.0}) {
    const double a1 = shoot(p, 0.5, 1.0).amplitude;
    const double a16 = shoot(p, 8.0, 1.0).amplitude;
    EXPECT_LT(relative_error(a1 / a16, std::pow(16.0, 1.0 / (p - 1.0))), 1e-5) << "p = " << p;
  }
}

TEST(Shoot, GroundStateShape) {
  for (double p : {1.5, 2.0, 3.0, 5.0}) {
    const auto prof = shoot(p, 1.0, 2.0);
    EXPECT_TRUE(has_ground_state_shape(prof, 1e-6)) << "p = " << p;
    for (std::size_t i = 1; i < prof.profile.intervals(); ++i) EXPECT_GT(prof.profile[i], 0.0);
    int sign_changes = 0;
    for (std::size_t i = 1; i < prof.slope.size(); ++i) {
      if ((prof.slope[i - 1] > 0) != (prof.slope[i] > 0)) ++sign_changes;
    }
    EXPECT_EQ(sign_changes, 1) << "p = " << p;
  }
}

TEST(Shoot, EnergyResidualDecaysSecondOrder) {
  // Small residual at the default grid; under refinement the sum of both
  // discretization errors must at least keep shrinking toward the O(N⁻²) line.
  const double coarse = energy_identity_residual(shoot(3.0, 1.0, 1.0, 1e-10, 250));
  const double fine = energy_identity_residual(shoot(3.0, 1.0, 1.0, 1e-10, 1000));
  EXPECT_LT(fine, coarse / 8.0);
  EXPECT_LT(energy_identity_residual(shoot(5.0, 1.0, 1.0)), 1e-7);
}

TEST(Profile, ScalingChangesMultiplier) {
  const auto prof = shoot(3.0, 1.0, 1.0);
  const auto twice = prof.scaled(2.0);
  EXPECT_NEAR(twice.mu, 0.25, 1e-15);
  EXPECT_NEAR(twice.amplitude, 2 * prof.amplitude, 1e-12);
  EXPECT_LT(energy_identity_residual(twice), 1e-7);
}

TEST(Shoot, RejectsBadArguments) {
  EXPECT_THROW(shoot(0.5, 1.0, 1.0), opiallab::DomainError);
  EXPECT_THROW(shoot(3.0, -1.0, 1.0), opiallab::DomainError);
  EXPECT_THROW(shoot(3.0, 1.0, 0.0), opiallab::DomainError);
}

}  // namespace
