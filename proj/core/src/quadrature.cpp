// SPDX-License-Identifier: Apache-2.0
#include "opiallab/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>
#include <vector>

#include "opiallab/errors.hpp"
#include "opiallab/specfun.hpp"

namespace opiallab::quadrature {

namespace {

// 15-point Kronrod abscissae (positive half, descending) with the embedded
// 7-point Gauss rule on the odd-indexed nodes (QUADPACK qk15 tables).
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[j] * pair;
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

void require_tolerance(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw DomainError("quadrature tolerance must be positive, got " + std::to_string(tol));
  }
}

void require_exponent(double p, const char* what) {
  if (!std::isfinite(p) || p < 1.0) {
    throw DomainError(std::string(what) + " requires p >= 1, got " + std::to_string(p));
  }
}

}  // namespace

QuadratureResult integrate_smooth(const std::function<double(double)>& f, double a, double b,
                                  double tol, std::size_t max_evaluations) {
  require_tolerance(tol);
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("integrate_smooth requires finite a < b");
  }
  constexpr std::size_t kPanelCost = 15;

  std::priority_queue<Panel> panels;
  Panel first = gauss_kronrod(f, a, b);
  double total = first.value;
  double total_error = first.error;
  std::size_t evaluations = kPanelCost;
  panels.push(first);

  // Panels narrower than this cannot be split meaningfully in double precision.
  const double min_width = 64.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(a), std::abs(b));

  while (total_error > std::max(tol, tol * std::abs(total))) {
    if (evaluations + 2 * kPanelCost > max_evaluations) {
      throw AccuracyError("integrate_smooth: evaluation budget exhausted", total, total_error);
    }
    Panel worst = panels.top();
    if (worst.b - worst.a <= min_width) break;
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = gauss_kronrod(f, worst.a, mid);
    Panel right = gauss_kronrod(f, mid, worst.b);
    evaluations += 2 * kPanelCost;
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }

  // Re-sum to shed the drift of the running updates.
  total = 0.0;
  total_error = 0.0;
  while (!panels.empty()) {
    total += panels.top().value;
    total_error += panels.top().error;
    panels.pop();
  }
  if (!std::isfinite(total)) {
    throw AccuracyError("integrate_smooth: non-finite integrand value", total, total_error);
  }
  return {total, total_error, evaluations};
}

QuadratureResult integrate_endpoint_singular(const EndpointIntegrand& f, double tol,
                                             std::size_t max_evaluations) {
  require_tolerance(tol);
  using std::numbers::pi;

  // Nodes t(s) = (1 + tanh(π/2 sinh s))/2 on s in [-s_max, s_max]. At s_max = 6
  // the nodes sit within ~1e-300 of the endpoints.
  constexpr double kMaxAbscissa = 6.0;
  constexpr int kMaxLevel = 12;

  // Contribution of the node pair at ±s: uses the symmetric form so that both
  // t and 1 - t are exact (the smaller one is computed directly).
  auto pair_sum = [&f](double s) {
    const double q = std::exp(-pi * std::sinh(s));  // in (0, 1] for s >= 0
    const double small = q / (1.0 + q);              // distance of the node to its endpoint
    const double large = 1.0 / (1.0 + q);
    const double weight = pi * std::cosh(s) * q / ((1.0 + q) * (1.0 + q));
    double sum = 0.0;
    if (small > 0.0 && weight > 0.0) {
      const double lo = f(small, large);
      const double hi = f(large, small);
      if (std::isfinite(lo)) sum += lo;
      if (std::isfinite(hi)) sum += hi;
    }
    return weight * sum;
  };

  double h = 1.0;
  std::size_t evaluations = 1;
  double sum = 0.25 * pi * f(0.5, 0.5);  // s = 0 node
  for (double s = h; s <= kMaxAbscissa; s += h) {
    sum += pair_sum(s);
    evaluations += 2;
  }
  double estimate = h * sum;
  double error = std::numeric_limits<double>::infinity();

  for (int level = 1; level <= kMaxLevel; ++level) {
    h *= 0.5;
    const auto steps = static_cast<std::size_t>(kMaxAbscissa / h);
    if (evaluations + steps > max_evaluations) {
      throw AccuracyError("integrate_endpoint_singular: evaluation budget exhausted", estimate,
                          error);
    }
    for (std::size_t k = 1; k <= steps; k += 2) {
      sum += pair_sum(static_cast<double>(k) * h);
      evaluations += 2;
    }
    const double refined = h * sum;
    error = std::abs(refined - estimate);
    estimate = refined;
    if (error <= tol * std::abs(estimate) || error <= std::numeric_limits<double>::min()) {
      if (!std::isfinite(estimate)) break;
      return {estimate, error, evaluations};
    }
  }
  throw AccuracyError("integrate_endpoint_singular: did not converge", estimate, error);
}

double one_minus_power(double t, double one_minus_t, double q) {
  if (t < 0.5) return 1.0 - std::pow(t, q);
  return -std::expm1(q * std::log1p(-one_minus_t));
}

double i0(double p) {
  require_exponent(p, "i0");
  const double a = 1.0 / (p + 1.0);
  return specfun::beta(a, 0.5) / (p + 1.0);
}

double i1(double p) {
  require_exponent(p, "i1");
  const double a = (p + 2.0) / (p + 1.0);
  return specfun::beta(a, 0.5) / (p + 1.0);
}

QuadratureResult i0_by_quadrature(double p, double tol) {
  require_exponent(p, "i0_by_quadrature");
  const double q = p + 1.0;
  return integrate_endpoint_singular(
      [q](double t, double omt) { return 1.0 / std::sqrt(one_minus_power(t, omt, q)); }, tol);
}

QuadratureResult i1_by_quadrature(double p, double tol) {
  require_exponent(p, "i1_by_quadrature");
  const double q = p + 1.0;
  return integrate_endpoint_singular(
      [q](double t, double omt) {
        return std::pow(t, q) / std::sqrt(one_minus_power(t, omt, q));
      },
      tol);
}

}  // namespace opiallab::quadrature
