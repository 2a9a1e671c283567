// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <concepts>
#include <cstddef>
#include <functional>
#include <type_traits>

namespace opiallab::quadrature {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

/// Hard cap on integrand evaluations for every routine in this header.
inline constexpr std::size_t kDefaultEvaluationBudget = std::size_t{1} << 20;

/// Integrand on (0, 1) that is told both t and the exact complement 1 - t.
/// Needed when the singularity sits at t = 1, where 1 - t cannot be formed
/// from t without cancellation.
using EndpointIntegrand = std::function<double(double t, double one_minus_t)>;

/// Globally adaptive Gauss-Kronrod (7/15) integration of a smooth integrand.
/// Stops once the summed panel error estimate is at most max(tol, tol*|value|).
/// Throws AccuracyError, carrying the best estimate, if the budget runs out.
QuadratureResult integrate_smooth(const std::function<double(double)>& f, double a, double b,
                                  double tol,
                                  std::size_t max_evaluations = kDefaultEvaluationBudget);

/// Tanh-sinh (double exponential) integration over (0, 1) for integrands with
/// at worst inverse-square-root singularities at either endpoint. Levels are
/// halved until two successive estimates agree to `tol` relative.
QuadratureResult integrate_endpoint_singular(const EndpointIntegrand& f, double tol,
                                             std::size_t max_evaluations = kDefaultEvaluationBudget);

/// Convenience overload for integrands written in terms of t alone. Nodes that
/// round to t = 1 are dropped, so a singularity at the upper endpoint limits the
/// attainable accuracy to about 1e-8; prefer the two-argument form there.
template <typename F>
  requires std::invocable<const F&, double> && (!std::invocable<const F&, double, double>)
QuadratureResult integrate_endpoint_singular(const F& f, double tol,
                                             std::size_t max_evaluations = kDefaultEvaluationBudget) {
  return integrate_endpoint_singular(EndpointIntegrand([&f](double t, double) { return f(t); }),
                                     tol, max_evaluations);
}

/// I0(p) = ∫₀¹ dt/√(1−t^{p+1}) = B(1/(p+1), 1/2)/(p+1). Accepts p >= 1; the
/// p = 1 value (π/2) is the linear-case consistency limit.
double i0(double p);

/// I1(p) = ∫₀¹ t^{p+1} dt/√(1−t^{p+1}) = B((p+2)/(p+1), 1/2)/(p+1).
double i1(double p);

/// Same integrals evaluated by endpoint-singular quadrature instead of the
/// Beta identity. Used to cross-validate i0/i1.
QuadratureResult i0_by_quadrature(double p, double tol = 1e-13);
QuadratureResult i1_by_quadrature(double p, double tol = 1e-13);

/// 1 − t^q for t in [0, 1], given the exact complement 1 − t. Accurate near
/// t = 1 where the direct formula cancels.
double one_minus_power(double t, double one_minus_t, double q);

}  // namespace opiallab::quadrature
