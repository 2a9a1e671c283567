// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "opiallab/funcspace.hpp"

// Positive ground states of the Dirichlet problem
//
//     −u'' = μ u^p  on (0, L),   u(0) = u(L) = 0,   u > 0,
//
// built two ways: by inverting the first integral
// (1/2)(u')² + μ/(p+1) u^{p+1} = μ/(p+1) A^{p+1}, and by RK4 shooting on the
// initial slope. Multiplying the equation by u and integrating gives the energy
// identity ∫(u')² = μ ∫u^{p+1}, which every profile reports a residual for.
namespace opiallab::emdenfowler {

struct Residuals {
  double ode = 0.0;              // sup |−D²u − μu^p| / sup μu^p over interior nodes
  double energy_identity = 0.0;  // |E − μF| / max(E, μF)
  double boundary = 0.0;         // max(|u(0)|, |u(L)|) / A
};

struct ExtremalProfile {
  double p = 1.0;
  double length = 1.0;
  double mu = 0.0;
  double amplitude = 0.0;  // A = max u
  funcspace::GridFunction profile;
  std::vector<double> slope;  // u' at the profile nodes
  double energy = 0.0;          // E = ∫(u')²
  double nonlinear_mass = 0.0;  // F = ∫u^{p+1}
  Residuals residuals;

  /// c·u solves the same problem with μ replaced by μ c^{1−p}.
  ExtremalProfile scaled(double c) const;
};

/// Default number of RK4 steps / output intervals.
inline constexpr std::size_t kDefaultSteps = 4000;

/// μ·A^{p−1} = 2(p+1) I0(p)² / L², which depends on (p, L) only.
double mu_amplitude_product(double p, double length);

/// L/2 = √((p+1)/(2μ)) · A^{−(p−1)/2} · I0(p).
double half_length(double p, double mu, double amplitude);

/// 2·half_length: the interval length on which (p, μ, A) is a ground state.
double length_from_amplitude(double p, double mu, double amplitude);

/// Amplitude of the ground state for given (p, μ, L), from the scale-invariant product.
double amplitude_for(double p, double mu, double length);

/// Reconstructs the ground state of amplitude A on [0, L] by inverting
/// x(u) = √((p+1)/(2μ)) ∫₀ᵘ dv/√(A^{p+1} − v^{p+1}) on the rising half and
/// mirroring about L/2. μ follows from mu_amplitude_product. n must be even
/// and at least 16. At p = 1 the profile is A sin(πx/L).
ExtremalProfile profile_from_first_integral(double p, double length, double amplitude,
                                            std::size_t n = kDefaultSteps);

/// Shooting: integrates u'' = −μ|u|^{p−1}u from u(0) = 0, u'(0) = s with
/// fixed-step RK4 and bisects on s until the first return to zero lands on L.
/// Requires |u(L)| <= tol·A. At p = 1 the slope is fixed to s = √μ (unit
/// amplitude) and the call fails unless μ ≈ (π/L)².
ExtremalProfile shoot(double p, double mu, double length, double tol = 1e-10,
                      std::size_t steps = kDefaultSteps);

/// |E − μF| / max(E, μF) recomputed from the stored fields.
double energy_identity_residual(const ExtremalProfile& profile);

/// Nonnegative, one interior maximum, symmetric about L/2 to `tolerance`·A.
bool has_ground_state_shape(const ExtremalProfile& profile, double tolerance);

/// sup_i |a_i − b_i| for profiles on the same grid.
double sup_distance(const funcspace::GridFunction& a, const funcspace::GridFunction& b);

}  // namespace opiallab::emdenfowler
