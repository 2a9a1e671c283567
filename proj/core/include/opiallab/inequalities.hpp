// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>

#include "opiallab/funcspace.hpp"

namespace opiallab::inequalities {

/// One evaluated inequality lhs <= rhs = constant * (right factor).
///
/// `ratio` is lhs divided by the constant-free right factor, so the check
/// holds exactly when ratio <= constant. For the zero function the ratio is
/// defined as 0. `holds` tolerates rounding: lhs <= rhs + kSlack * max(1, |rhs|).
struct CheckReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double constant = 0.0;
  double ratio = 0.0;
  bool holds = false;
  double margin = 0.0;  // rhs - lhs
};

inline constexpr double kSlack = 1e-9;

/// Assembles a report from both sides; `right_factor` is rhs / constant.
CheckReport make_report(std::string name, double lhs, double constant, double right_factor);

/// ∫u² <= (L²/π²) ∫(u')², sharp for sin(πx/L).
CheckReport wirtinger_check(const funcspace::SineSeries& u);

/// ∫|uu'| <= (L/2) ∫(u')² for u(0) = 0. A GridFunction must satisfy
/// |v_0| <= 1e-12 max|v| or PreconditionError is thrown.
CheckReport opial_check(const funcspace::SineSeries& u);
CheckReport opial_check(const funcspace::GridFunction& u);

/// |u(x)² − 2∫₀ˣ u u' dt|, the defect of the integrated form of (u²)' = 2uu'.
double identity_residual(const funcspace::SineSeries& u, double x);

/// The three links leading from the mixed energy to the weak Wirtinger bound:
///   [0] ∫u² <= 2 ∫(L−t)|uu'| dt        (Fubini form, needs u(0) = 0 only)
///   [1] ∫u² <= L ∫|uu'|                (two-sided form, needs u(0) = u(L) = 0)
///   [2] ∫u² <= (L²/2) ∫(u')²
/// Link [1] does not follow from [0] alone (that gives 2L); it is evaluated
/// here only for functions vanishing at both ends, which SineSeries guarantees.
std::array<CheckReport, 3> chain_check(const funcspace::SineSeries& u);

/// ∫|u|^{p+1} <= C (∫(u')²)^{(p+1)/2}.
CheckReport interpolation_check(const funcspace::SineSeries& u, double p, double constant);

/// Admissibility of an energy E for a nontrivial solution of −u'' = λ|u|^{p−1}u:
/// E^{(p−1)/2} >= (1/λ)(π²/L²)^{(p+1)/2}. Reported as lhs = threshold,
/// rhs = E^{(p−1)/2}, constant = (π²/L²)^{(p+1)/2}.
CheckReport energy_lower_bound(double p, double lambda, double length, double energy);

/// ∫u² <= (L²/(4π²)) ∫(u')² for u of zero mean. Throws PreconditionError
/// (naming the measured mean) when |mean| > 1e-9 sup|u|.
CheckReport mean_zero_check(const funcspace::SineSeries& u);
CheckReport mean_zero_check(const funcspace::GridFunction& u);

/// energy_lower_bound with the mean-zero constant (4π²/L²)^{(p+1)/2}.
CheckReport mean_zero_energy_bound(double p, double lambda, double length, double energy);

}  // namespace opiallab::inequalities
