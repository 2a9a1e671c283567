// SPDX-License-Identifier: Apache-2.0
#include "opiallab/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "opiallab/errors.hpp"
#include "opiallab/quadrature.hpp"

namespace opiallab::inequalities {

namespace fs = funcspace;
using std::numbers::pi;

namespace {

constexpr double kQuadratureTolerance = 1e-12;
constexpr double kBoundaryTolerance = 1e-12;
constexpr double kMeanTolerance = 1e-9;

void require_energy_inputs(double p, double lambda, double length, double energy) {
  if (!(p > 1.0) || !std::isfinite(p)) throw DomainError("energy bound requires p > 1");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("energy bound requires lambda > 0");
  if (!(length > 0.0) || !std::isfinite(length)) throw DomainError("energy bound requires L > 0");
  if (!(energy > 0.0) || !std::isfinite(energy)) throw DomainError("energy bound requires E > 0");
}

CheckReport energy_bound(const char* name, double p, double lambda, double energy,
                         double spectral_gap) {
  const double constant = std::pow(spectral_gap, 0.5 * (p + 1.0));
  const double threshold = constant / lambda;
  const double admissible = std::pow(energy, 0.5 * (p - 1.0));
  CheckReport r = make_report(name, threshold, 1.0, admissible);
  r.constant = constant;
  return r;
}

void require_mean_zero(double m, double sup) {
  if (std::abs(m) > kMeanTolerance * sup) {
    std::ostringstream msg;
    msg.precision(10);
    msg << "mean-zero check requires |mean(u)| <= " << kMeanTolerance
        << " * sup|u|; measured mean " << m << " (sup|u| = " << sup << ")";
    throw PreconditionError(msg.str());
  }
}

}  // namespace

CheckReport make_report(std::string name, double lhs, double constant, double right_factor) {
  CheckReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.constant = constant;
  r.rhs = constant * right_factor;
  r.ratio = right_factor != 0.0 ? lhs / right_factor : 0.0;
  r.margin = r.rhs - r.lhs;
  r.holds = r.lhs <= r.rhs + kSlack * std::max(1.0, std::abs(r.rhs));
  return r;
}

CheckReport wirtinger_check(const fs::SineSeries& u) {
  const double length = u.length();
  return make_report("wirtinger", fs::norm_l2_sq(u), length * length / (pi * pi),
                     fs::dirichlet_energy(u));
}

CheckReport opial_check(const fs::SineSeries& u) {
  return make_report("opial", fs::opial_functional(u), 0.5 * u.length(), fs::dirichlet_energy(u));
}

CheckReport opial_check(const fs::GridFunction& u) {
  if (std::abs(u[0]) > kBoundaryTolerance * u.max_abs()) {
    std::ostringstream msg;
    msg << "opial check requires u(0) = 0; got u(0) = " << u[0];
    throw PreconditionError(msg.str());
  }
  return make_report("opial", fs::opial_functional(u), 0.5 * u.length(), fs::dirichlet_energy(u));
}

double identity_residual(const fs::SineSeries& u, double x) {
  const double ux = u(x);  // validates x
  if (x == 0.0) return std::abs(ux * ux);
  const double mixed =
      quadrature::integrate_smooth([&u](double t) { return u(t) * u.derivative(t); }, 0.0, x,
                                   1e-14)
          .value;
  return std::abs(ux * ux - 2.0 * mixed);
}

std::array<CheckReport, 3> chain_check(const fs::SineSeries& u) {
  const double length = u.length();
  const double mass = fs::norm_l2_sq(u);
  const double mixed = fs::opial_functional(u);
  double weighted = 0.0;
  if (mixed > 0.0) {
    weighted = quadrature::integrate_smooth(
                   [&u, length](double t) {
                     return (length - t) * std::abs(u(t) * u.derivative(t));
                   },
                   0.0, length, kQuadratureTolerance)
                   .value;
  }
  return {make_report("chain_fubini_weighted", mass, 2.0, weighted),
          make_report("chain_two_sided_mixed_energy", mass, length, mixed),
          make_report("chain_weak_wirtinger", mass, 0.5 * length * length,
                      fs::dirichlet_energy(u))};
}

CheckReport interpolation_check(const fs::SineSeries& u, double p, double constant) {
  if (!(p > 1.0)) throw DomainError("interpolation check requires p > 1");
  if (!(constant > 0.0)) throw DomainError("interpolation check requires C > 0");
  const double energy = fs::dirichlet_energy(u);
  return make_report("interpolation", fs::lp1_functional(u, p), constant,
                     std::pow(energy, 0.5 * (p + 1.0)));
}

CheckReport energy_lower_bound(double p, double lambda, double length, double energy) {
  require_energy_inputs(p, lambda, length, energy);
  return energy_bound("energy_lower_bound", p, lambda, energy, pi * pi / (length * length));
}

CheckReport mean_zero_check(const fs::SineSeries& u) {
  require_mean_zero(fs::mean(u), fs::sup_abs(u));
  const double length = u.length();
  return make_report("mean_zero_wirtinger", fs::norm_l2_sq(u),
                     length * length / (4.0 * pi * pi), fs::dirichlet_energy(u));
}

CheckReport mean_zero_check(const fs::GridFunction& u) {
  require_mean_zero(fs::mean(u), u.max_abs());
  const double length = u.length();
  return make_report("mean_zero_wirtinger", fs::norm_l2_sq(u),
                     length * length / (4.0 * pi * pi), fs::dirichlet_energy(u));
}

CheckReport mean_zero_energy_bound(double p, double lambda, double length, double energy) {
  require_energy_inputs(p, lambda, length, energy);
  return energy_bound("mean_zero_energy_bound", p, lambda, energy,
                      4.0 * pi * pi / (length * length));
}

}  // namespace opiallab::inequalities
