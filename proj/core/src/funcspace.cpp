// SPDX-License-Identifier: Apache-2.0
#include "opiallab/funcspace.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "opiallab/errors.hpp"
#include "opiallab/quadrature.hpp"

namespace opiallab::funcspace {

namespace {

using std::numbers::pi;

// Relative target for functionals that have no closed form on SineSeries.
constexpr double kFunctionalTolerance = 1e-12;

double integrate(const std::function<double(double)>& f, double length) {
  return quadrature::integrate_smooth(f, 0.0, length, kFunctionalTolerance).value;
}

bool is_zero(const SineSeries& u) {
  return std::all_of(u.coefficients().begin(), u.coefficients().end(),
                     [](double a) { return a == 0.0; });
}

// Composite trapezoid over node samples.
double trapezoid(std::span<const double> samples, double h) {
  double sum = 0.5 * (samples.front() + samples.back());
  for (std::size_t i = 1; i + 1 < samples.size(); ++i) sum += samples[i];
  return h * sum;
}

void require_exponent(double p) {
  if (!std::isfinite(p) || p < 1.0) {
    throw DomainError("exponent p must satisfy p >= 1, got " + std::to_string(p));
  }
}

// Uniform double in [-1, 1) from the top 53 bits of a 64-bit draw.
double uniform_symmetric(std::mt19937_64& rng) {
  const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return 2.0 * unit - 1.0;
}

}  // namespace

SineSeries::SineSeries(double length, std::vector<double> coefficients)
    : length_(length), coefficients_(std::move(coefficients)) {
  if (!std::isfinite(length_) || length_ <= 0.0) {
    throw DomainError("SineSeries length must be positive");
  }
  if (coefficients_.empty()) coefficients_.push_back(0.0);
  for (double a : coefficients_) {
    if (!std::isfinite(a)) throw DomainError("SineSeries coefficients must be finite");
  }
}

double SineSeries::operator()(double x) const {
  if (!(x >= 0.0 && x <= length_)) {
    throw DomainError("SineSeries evaluated outside [0, L]");
  }
  if (x == 0.0 || x == length_) return 0.0;
  const double theta = pi * x / length_;
  double sum = 0.0;
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    if (coefficients_[k] != 0.0) {
      sum += coefficients_[k] * std::sin(static_cast<double>(k + 1) * theta);
    }
  }
  return sum;
}

double SineSeries::derivative(double x) const {
  if (!(x >= 0.0 && x <= length_)) {
    throw DomainError("SineSeries derivative evaluated outside [0, L]");
  }
  const double theta = pi * x / length_;
  double sum = 0.0;
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    if (coefficients_[k] != 0.0) {
      const double wave = static_cast<double>(k + 1) * pi / length_;
      sum += coefficients_[k] * wave * std::cos(static_cast<double>(k + 1) * theta);
    }
  }
  return sum;
}

SineSeries SineSeries::scaled(double c) const {
  std::vector<double> out(coefficients_.begin(), coefficients_.end());
  for (double& a : out) a *= c;
  return SineSeries(length_, std::move(out));
}

GridFunction::GridFunction(double length, std::vector<double> values)
    : length_(length), values_(std::move(values)) {
  if (!std::isfinite(length_) || length_ <= 0.0) {
    throw DomainError("GridFunction length must be positive");
  }
  if (values_.size() < 3) throw DomainError("GridFunction needs at least 2 intervals");
  for (double v : values_) {
    if (!std::isfinite(v)) throw DomainError("GridFunction values must be finite");
  }
}

std::vector<double> GridFunction::derivative() const {
  const std::size_t n = intervals();
  const double h = spacing();
  std::vector<double> d(n + 1);
  d[0] = (-3.0 * values_[0] + 4.0 * values_[1] - values_[2]) / (2.0 * h);
  d[n] = (3.0 * values_[n] - 4.0 * values_[n - 1] + values_[n - 2]) / (2.0 * h);
  for (std::size_t i = 1; i < n; ++i) d[i] = (values_[i + 1] - values_[i - 1]) / (2.0 * h);
  return d;
}

double GridFunction::max_abs() const noexcept {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double eval(const SineSeries& u, double x) { return u(x); }

GridFunction to_grid(const SineSeries& u, std::size_t n) {
  if (n < 2) throw DomainError("to_grid needs at least 2 intervals");
  return sample([&u](double x) { return u(std::min(x, u.length())); }, u.length(), n);
}

double norm_l2_sq(const SineSeries& u) {
  double sum = 0.0;
  for (double a : u.coefficients()) sum += a * a;
  return 0.5 * u.length() * sum;
}

double norm_l2_sq(const GridFunction& u) {
  std::vector<double> sq(u.values().begin(), u.values().end());
  for (double& v : sq) v *= v;
  return trapezoid(sq, u.spacing());
}

double dirichlet_energy(const SineSeries& u) {
  double sum = 0.0;
  const auto a = u.coefficients();
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double kk = static_cast<double>(k + 1);
    sum += kk * kk * a[k] * a[k];
  }
  return pi * pi / (2.0 * u.length()) * sum;
}

double dirichlet_energy(const GridFunction& u) {
  auto d = u.derivative();
  for (double& v : d) v *= v;
  return trapezoid(d, u.spacing());
}

double opial_functional(const SineSeries& u) {
  if (is_zero(u)) return 0.0;
  return integrate([&u](double x) { return std::abs(u(x) * u.derivative(x)); }, u.length());
}

double opial_functional(const GridFunction& u) {
  auto d = u.derivative();
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = std::abs(d[i] * u[i]);
  return trapezoid(d, u.spacing());
}

double lp1_functional(const SineSeries& u, double p) {
  require_exponent(p);
  if (is_zero(u)) return 0.0;
  if (p == 1.0) return norm_l2_sq(u);
  const double q = p + 1.0;
  return integrate([&u, q](double x) { return std::pow(std::abs(u(x)), q); }, u.length());
}

double lp1_functional(const GridFunction& u, double p) {
  require_exponent(p);
  std::vector<double> powered(u.values().begin(), u.values().end());
  for (double& v : powered) v = std::pow(std::abs(v), p + 1.0);
  return trapezoid(powered, u.spacing());
}

double mean(const SineSeries& u) {
  if (is_zero(u)) return 0.0;
  // The mean can cancel to zero, so the target is absolute, scaled by the
  // bound L·Σ|a_k| on ∫|u|.
  double scale = 0.0;
  for (double a : u.coefficients()) scale += std::abs(a);
  const double tol = kFunctionalTolerance * u.length() * scale;
  return quadrature::integrate_smooth([&u](double x) { return u(x); }, 0.0, u.length(), tol).value /
         u.length();
}

double mean(const GridFunction& u) { return trapezoid(u.values(), u.spacing()) / u.length(); }

double sup_abs(const SineSeries& u) {
  const std::size_t n = std::max<std::size_t>(4096, 1024 * u.modes());
  double m = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    m = std::max(m, std::abs(u(u.length() * static_cast<double>(i) / static_cast<double>(n))));
  }
  return m;
}

SineSeries sample_random(std::size_t modes, double decay, std::uint64_t seed, double length) {
  if (modes < 1) throw DomainError("sample_random needs at least one mode");
  if (!(decay >= 0.0)) throw DomainError("sample_random decay must be non-negative");
  std::mt19937_64 rng(seed);
  std::vector<double> a(modes);
  for (std::size_t k = 0; k < modes; ++k) {
    a[k] = uniform_symmetric(rng) * std::pow(static_cast<double>(k + 1), -decay);
  }
  return SineSeries(length, std::move(a));
}

SineSeries sample_random_mean_zero(std::size_t modes, double decay, std::uint64_t seed,
                                   double length) {
  if (modes < 1) throw DomainError("sample_random_mean_zero needs at least one mode");
  if (!(decay >= 0.0)) throw DomainError("sample_random_mean_zero decay must be non-negative");
  std::mt19937_64 rng(seed);
  std::vector<double> a(2 * modes, 0.0);
  for (std::size_t j = 1; j <= modes; ++j) {
    const std::size_t k = 2 * j;
    a[k - 1] = uniform_symmetric(rng) * std::pow(static_cast<double>(k), -decay);
  }
  return SineSeries(length, std::move(a));
}

void write_csv(std::ostream& out, const GridFunction& u) {
  const auto old_flags = out.flags();
  const auto old_precision = out.precision();
  out << "x,u\n" << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (std::size_t i = 0; i <= u.intervals(); ++i) out << u.node(i) << ',' << u[i] << '\n';
  out.flags(old_flags);
  out.precision(old_precision);
}

std::string to_csv(const GridFunction& u) {
  std::ostringstream out;
  write_csv(out, u);
  return out.str();
}

}  // namespace opiallab::funcspace
