// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "opiallab/emdenfowler.hpp"
#include "opiallab/funcspace.hpp"

namespace opiallab::variational {

/// Best constant C_p(L) in ∫|u|^{p+1} <= C (∫(u')²)^{(p+1)/2} by three routes.
struct ConstantReport {
  double p = 1.0;
  double length = 1.0;
  double c_maximized = 0.0;      // fixed point of the ground-state iteration
  double c_closed_form = 0.0;    // closed_form_constant
  double c_paper_printed = 0.0;  // paper_printed_constant
  double rel_diff_max_closed = 0.0;
  double rel_diff_max_printed = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  funcspace::GridFunction maximizer;  // normalized to discrete energy 1

  // Diagnostics; not part of the serialized report.
  std::vector<double> quotient_history;     // J after each iterate, starting with the initial sine
  double max_relative_decrease = 0.0;       // largest relative drop of J between iterates
  double euler_lagrange_residual = 0.0;     // ‖−D²u − μ̂u^p‖₂ / ‖μ̂u^p‖₂ on interior nodes
  double multiplier = 0.0;                  // least-squares μ̂
};

struct MaximizeOptions {
  std::size_t n = 2048;        // grid intervals, at least 64
  double tol = 1e-10;          // relative change of J between iterates
  std::size_t max_iter = 500;
};

/// J(u) = ∫|u|^{p+1} / (∫(u')²)^{(p+1)/2}. Scale invariant. Throws
/// DomainError for the zero function. Accepts p >= 1.
double rayleigh_quotient(const funcspace::SineSeries& u, double p);
double rayleigh_quotient(const funcspace::GridFunction& u, double p);

/// Maximizes J over the second-order finite-difference discretization of
/// H¹₀(0, L) by ground-state inverse iteration: starting from sin(πx/L) with
/// unit discrete energy, repeatedly solve −w'' = u^p with Dirichlet ends,
/// take |w| and rescale to unit energy. With that normalization J = ∫u^{p+1}.
/// Discrete F is convex and the step maximizes its linearization over the
/// energy sphere, so J never decreases.
///
/// Converged means the relative J change fell to `tol` and the sup-norm step
/// to 100·tol·sup|u|. Non-convergence is reported, not thrown.
ConstantReport maximize(double p, double length, const MaximizeOptions& options = {});

/// C from an extremal profile, by two routes.
struct MultiplierConstant {
  double direct = 0.0;    // F / E^{(p+1)/2}
  double shortcut = 0.0;  // μ'^{−(p+1)/2} after rescaling the profile to F = 1
  double rel_diff = 0.0;
};

/// The μ^{−(p+1)/2} shortcut holds only when F = 1, so the profile is
/// rescaled internally (μ' = μ F^{(p−1)/(p+1)}) before it is applied.
MultiplierConstant constant_from_multiplier(const emdenfowler::ExtremalProfile& profile);

/// C_p(L) assembled from the ground state of amplitude 1: μ₁ = 2(p+1)I0²/L²
/// and F₁ = ∫u^{p+1} = L·I1/I0, so C = μ₁^{−(p+1)/2} F₁^{−(p−1)/2}.
/// Equivalently L^{(p+3)/2} [2(p+1)]^{−(p+1)/2} ((p+3)/2)^{(p−1)/2} I0^{−(p+1)}.
/// Gives L²/π² at p = 1.
double closed_form_constant(double p, double length);

/// L^{p+1}/(p+1)^{(p+1)/2} · B(1/(p+1),1/2)^p / B((p+2)/(p+1),1/2)^{(p+1)/2},
/// kept verbatim for comparison. It evaluates to L² at p = 1 and does not
/// agree with the maximizer.
double paper_printed_constant(double p, double length);

/// |a − b| / |a|.
double relative_difference(double reference, double other);

}  // namespace opiallab::variational
