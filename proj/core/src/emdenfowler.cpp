// SPDX-License-Identifier: Apache-2.0
#include "opiallab/emdenfowler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "opiallab/errors.hpp"
#include "opiallab/quadrature.hpp"

namespace opiallab::emdenfowler {

namespace fs = funcspace;
using std::numbers::pi;

namespace {

// p within this distance of 1 is treated as the linear (sine) case.
constexpr double kLinearThreshold = 1e-12;

bool is_linear(double p) { return std::abs(p - 1.0) <= kLinearThreshold; }

void require_exponent(double p) {
  if (!std::isfinite(p) || p < 1.0) {
    throw DomainError("Emden-Fowler exponent must satisfy p >= 1, got " + std::to_string(p));
  }
}

void require_positive(double v, const char* what) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw DomainError(std::string(what) + " must be positive, got " + std::to_string(v));
  }
}

void require_even_grid(std::size_t n, std::size_t minimum) {
  if (n < minimum || n % 2 != 0) {
    throw DomainError("profile resolution must be even and at least " + std::to_string(minimum) +
                      ", got " + std::to_string(n));
  }
}

double signed_power(double u, double p) { return std::copysign(std::pow(std::abs(u), p), u); }

// Composite Simpson on an even number of intervals.
double simpson(const std::vector<double>& f, double h) {
  const std::size_t n = f.size() - 1;
  double odd = 0.0;
  double even = 0.0;
  for (std::size_t i = 1; i < n; ++i) (i % 2 ? odd : even) += f[i];
  return h / 3.0 * (f.front() + f.back() + 4.0 * odd + 2.0 * even);
}

// Fills E, F and residuals from values and slopes; validates the invariants
// that every accepted profile must satisfy.
ExtremalProfile assemble(double p, double length, double mu, double amplitude,
                         std::vector<double> values, std::vector<double> slope) {
  const std::size_t n = values.size() - 1;
  const double h = length / static_cast<double>(n);

  const double boundary = std::max(std::abs(values.front()), std::abs(values.back())) / amplitude;
  for (double& v : values) v = std::max(v, 0.0);

  std::vector<double> squared(n + 1);
  std::vector<double> powered(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    squared[i] = slope[i] * slope[i];
    powered[i] = std::pow(values[i], p + 1.0);
  }
  const double energy = simpson(squared, h);
  const double mass = simpson(powered, h);
  if (!(energy > 0.0) || !(mass > 0.0)) {
    throw DomainError("degenerate extremal profile: zero energy");
  }

  double worst = 0.0;
  double scale = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double forcing = mu * std::pow(values[i], p);
    const double second = (2.0 * values[i] - values[i - 1] - values[i + 1]) / (h * h);
    worst = std::max(worst, std::abs(second - forcing));
    scale = std::max(scale, forcing);
  }

  ExtremalProfile out{.p = p,
                      .length = length,
                      .mu = mu,
                      .amplitude = amplitude,
                      .profile = fs::GridFunction(length, std::move(values)),
                      .slope = std::move(slope),
                      .energy = energy,
                      .nonlinear_mass = mass,
                      .residuals = {}};
  out.residuals.ode = worst / scale;
  out.residuals.energy_identity = energy_identity_residual(out);
  out.residuals.boundary = boundary;
  return out;
}

// σ ↦ 2σ/√(1 − (1−σ²)^{q}): integrand of the rising-branch length after
// t = 1 − σ², which removes the inverse-square-root singularity at t = 1.
double branch_integrand(double sigma, double q) {
  if (sigma < 1e-100) return 2.0 / std::sqrt(q);
  const double gap = -std::expm1(q * std::log1p(-sigma * sigma));
  return 2.0 * sigma / std::sqrt(gap);
}

// H(σ) = ∫_σ^1 branch_integrand = ∫₀^{1−σ²} dt/√(1−t^q).
double branch_length(double sigma, double q) {
  if (sigma >= 1.0) return 0.0;
  return quadrature::integrate_smooth([q](double s) { return branch_integrand(s, q); }, sigma, 1.0,
                                      1e-14)
      .value;
}

// Solves H(σ) = target for σ in [0, 1] by safeguarded Newton; H is strictly
// decreasing with H' = −branch_integrand.
double invert_branch(double target, double q, double guess) {
  double lo = 0.0;
  double hi = 1.0;
  double sigma = std::clamp(guess, 0.0, 1.0);
  for (int iter = 0; iter < 100; ++iter) {
    const double defect = branch_length(sigma, q) - target;
    if (defect > 0.0) {
      lo = sigma;
    } else {
      hi = sigma;
    }
    if (std::abs(defect) <= 1e-15 * std::max(1.0, target)) return sigma;
    double next = sigma + defect / branch_integrand(sigma, q);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - sigma) <= 1e-16) return next;
    sigma = next;
  }
  throw AccuracyError("first-integral inversion did not converge", sigma, hi - lo);
}

struct Trajectory {
  std::vector<double> u;
  std::vector<double> v;
  bool crossed = false;  // u reached zero (or blew up) at some node in (0, L]
};

// Fixed-step RK4 for u' = v, v' = −μ|u|^{p−1}u. With `stop_at_crossing` the
// integration ends at the first non-positive node.
Trajectory integrate_rk4(double p, double mu, double slope0, double length, std::size_t steps,
                         bool stop_at_crossing) {
  const double h = length / static_cast<double>(steps);
  Trajectory tr;
  tr.u.reserve(steps + 1);
  tr.v.reserve(steps + 1);
  double u = 0.0;
  double v = slope0;
  tr.u.push_back(u);
  tr.v.push_back(v);
  auto accel = [p, mu](double y) { return -mu * signed_power(y, p); };
  for (std::size_t i = 1; i <= steps; ++i) {
    const double k1u = v;
    const double k1v = accel(u);
    const double k2u = v + 0.5 * h * k1v;
    const double k2v = accel(u + 0.5 * h * k1u);
    const double k3u = v + 0.5 * h * k2v;
    const double k3v = accel(u + 0.5 * h * k2u);
    const double k4u = v + h * k3v;
    const double k4v = accel(u + h * k3u);
    u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
    v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    tr.u.push_back(u);
    tr.v.push_back(v);
    if (!(u > 0.0) || !std::isfinite(u)) {
      tr.crossed = true;
      if (stop_at_crossing) break;
    }
  }
  return tr;
}

bool crosses_before_end(double p, double mu, double slope0, double length, std::size_t steps) {
  return integrate_rk4(p, mu, slope0, length, steps, true).crossed;
}

}  // namespace

ExtremalProfile ExtremalProfile::scaled(double c) const {
  require_positive(c, "profile scale factor");
  std::vector<double> values(profile.values().begin(), profile.values().end());
  for (double& v : values) v *= c;
  std::vector<double> slopes = slope;
  for (double& v : slopes) v *= c;
  ExtremalProfile out{.p = p,
                      .length = length,
                      .mu = mu * std::pow(c, 1.0 - p),
                      .amplitude = amplitude * c,
                      .profile = fs::GridFunction(length, std::move(values)),
                      .slope = std::move(slopes),
                      .energy = energy * c * c,
                      .nonlinear_mass = nonlinear_mass * std::pow(c, p + 1.0),
                      .residuals = residuals};
  out.residuals.energy_identity = energy_identity_residual(out);
  return out;
}

double mu_amplitude_product(double p, double length) {
  require_exponent(p);
  require_positive(length, "length");
  const double i0 = quadrature::i0(p);
  return 2.0 * (p + 1.0) * i0 * i0 / (length * length);
}

double half_length(double p, double mu, double amplitude) {
  require_exponent(p);
  require_positive(mu, "mu");
  require_positive(amplitude, "amplitude");
  return std::sqrt((p + 1.0) / (2.0 * mu)) * std::pow(amplitude, -0.5 * (p - 1.0)) *
         quadrature::i0(p);
}

double length_from_amplitude(double p, double mu, double amplitude) {
  return 2.0 * half_length(p, mu, amplitude);
}

double amplitude_for(double p, double mu, double length) {
  require_positive(mu, "mu");
  const double product = mu_amplitude_product(p, length);
  if (is_linear(p)) {
    throw DomainError("the linear case does not determine the amplitude");
  }
  return std::pow(product / mu, 1.0 / (p - 1.0));
}

ExtremalProfile profile_from_first_integral(double p, double length, double amplitude,
                                            std::size_t n) {
  require_exponent(p);
  require_positive(length, "length");
  require_positive(amplitude, "amplitude");
  require_even_grid(n, 16);

  const double h = length / static_cast<double>(n);
  std::vector<double> values(n + 1, 0.0);
  std::vector<double> slope(n + 1, 0.0);

  if (is_linear(p)) {
    const double wave = pi / length;
    for (std::size_t i = 0; i <= n; ++i) {
      const double x = h * static_cast<double>(i);
      values[i] = i == 0 || i == n ? 0.0 : amplitude * std::sin(wave * x);
      slope[i] = amplitude * wave * std::cos(wave * x);
    }
    values[n / 2] = amplitude;
    return assemble(p, length, wave * wave, amplitude, std::move(values), std::move(slope));
  }

  const double q = p + 1.0;
  const double mu = mu_amplitude_product(p, length) / std::pow(amplitude, p - 1.0);
  const double i0 = quadrature::i0(p);
  const double slope_scale = std::sqrt(2.0 * mu / q) * std::pow(amplitude, 0.5 * q);
  const std::size_t half = n / 2;

  double sigma = 1.0;
  for (std::size_t i = 0; i <= half; ++i) {
    double u = 0.0;
    double du = 0.0;
    if (i == half) {
      u = amplitude;
    } else {
      const double target = i0 * static_cast<double>(i) / static_cast<double>(half);
      sigma = i == 0 ? 1.0 : invert_branch(target, q, sigma);
      const double tau = 1.0 - sigma * sigma;
      u = amplitude * tau;
      du = slope_scale * std::sqrt(quadrature::one_minus_power(tau, sigma * sigma, q));
    }
    values[i] = u;
    values[n - i] = u;
    slope[i] = du;
    slope[n - i] = -du;
  }
  return assemble(p, length, mu, amplitude, std::move(values), std::move(slope));
}

ExtremalProfile shoot(double p, double mu, double length, double tol, std::size_t steps) {
  require_exponent(p);
  require_positive(mu, "mu");
  require_positive(length, "length");
  require_positive(tol, "tol");
  require_even_grid(steps, 16);

  if (is_linear(p)) {
    const double slope0 = std::sqrt(mu);
    Trajectory tr = integrate_rk4(p, mu, slope0, length, steps, false);
    const double end = std::abs(tr.u.back());
    bool interior_zero = false;
    for (std::size_t i = 1; i < steps; ++i) interior_zero = interior_zero || !(tr.u[i] > 0.0);
    if (end > tol || interior_zero) {
      std::ostringstream msg;
      msg.precision(10);
      msg << "linear case has a positive Dirichlet solution only for mu = (pi/L)^2 = "
          << pi * pi / (length * length) << "; got mu = " << mu << " (|u(L)| = " << end << ")";
      throw SolverError(msg.str());
    }
    return assemble(p, length, mu, 1.0, std::move(tr.u), std::move(tr.v));
  }

  const double guess = pi * amplitude_for(p, mu, length) / length;
  const double lowest = 1e-3 * guess;
  const double highest = 1e6 * guess;

  double s_lo = guess;
  double s_hi = guess;
  if (crosses_before_end(p, mu, guess, length, steps)) {
    while (crosses_before_end(p, mu, s_lo, length, steps)) {
      s_hi = s_lo;
      s_lo *= 0.5;
      if (s_lo < lowest) break;
    }
  } else {
    while (!crosses_before_end(p, mu, s_hi, length, steps)) {
      s_lo = s_hi;
      s_hi *= 2.0;
      if (s_hi > highest) break;
    }
  }
  if (s_lo < lowest || s_hi > highest || !(s_lo < s_hi)) {
    std::ostringstream msg;
    msg << "shoot: no slope bracket in [" << lowest << ", " << highest << "] for p = " << p
        << ", mu = " << mu << ", L = " << length;
    throw SolverError(msg.str());
  }

  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (s_lo + s_hi);
    if (!(mid > s_lo && mid < s_hi)) break;
    if (crosses_before_end(p, mu, mid, length, steps)) {
      s_hi = mid;
    } else {
      s_lo = mid;
    }
  }

  Trajectory lo = integrate_rk4(p, mu, s_lo, length, steps, false);
  Trajectory hi = integrate_rk4(p, mu, s_hi, length, steps, false);
  const bool use_hi = std::abs(hi.u.back()) < std::abs(lo.u.back());
  Trajectory& best = use_hi ? hi : lo;
  const double slope0 = use_hi ? s_hi : s_lo;

  // Conserved energy (1/2)s² = μ/(p+1) A^{p+1} gives the exact peak height.
  const double amplitude = std::pow(0.5 * (p + 1.0) * slope0 * slope0 / mu, 1.0 / (p + 1.0));
  if (std::abs(best.u.back()) > tol * amplitude) {
    std::ostringstream msg;
    msg << "shoot: |u(L)| = " << std::abs(best.u.back()) << " exceeds tol * A = "
        << tol * amplitude << " (s = " << slope0 << ")";
    throw SolverError(msg.str());
  }
  ExtremalProfile out =
      assemble(p, length, mu, amplitude, std::move(best.u), std::move(best.v));
  if (!has_ground_state_shape(out, 1e-6)) {
    throw SolverError("shoot: converged trajectory is not a single positive bump");
  }
  return out;
}

double energy_identity_residual(const ExtremalProfile& profile) {
  const double lhs = profile.energy;
  const double rhs = profile.mu * profile.nonlinear_mass;
  const double scale = std::max(lhs, rhs);
  return scale > 0.0 ? std::abs(lhs - rhs) / scale : 0.0;
}

bool has_ground_state_shape(const ExtremalProfile& profile, double tolerance) {
  const auto u = profile.profile.values();
  const std::size_t n = u.size() - 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (!(u[i] > 0.0)) return false;
  }
  double asymmetry = 0.0;
  for (std::size_t i = 0; i <= n; ++i) asymmetry = std::max(asymmetry, std::abs(u[i] - u[n - i]));
  if (asymmetry > tolerance * profile.amplitude) return false;

  // Exactly one sign change of the discrete slope.
  int changes = 0;
  int sign = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = u[i + 1] - u[i];
    const int s = d > 0.0 ? 1 : (d < 0.0 ? -1 : 0);
    if (s == 0) continue;
    if (sign != 0 && s != sign) ++changes;
    sign = s;
  }
  return changes == 1;
}

double sup_distance(const fs::GridFunction& a, const fs::GridFunction& b) {
  if (a.intervals() != b.intervals()) {
    throw DomainError("sup_distance requires profiles on the same grid");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i <= a.intervals(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace opiallab::emdenfowler
