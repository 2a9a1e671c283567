// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace opiallab::funcspace {

/// u(x) = Σ_k a_k sin(kπx/L) on [0, L]. Vanishes at both ends by construction,
/// and the L² mass and Dirichlet energy are exact Parseval sums.
class SineSeries {
 public:
  SineSeries(double length, std::vector<double> coefficients);

  double length() const noexcept { return length_; }
  std::span<const double> coefficients() const noexcept { return coefficients_; }
  std::size_t modes() const noexcept { return coefficients_.size(); }

  /// u(x); throws DomainError outside [0, L].
  double operator()(double x) const;
  /// u'(x) = Σ a_k (kπ/L) cos(kπx/L).
  double derivative(double x) const;

  /// Same function multiplied by c.
  SineSeries scaled(double c) const;

 private:
  double length_;
  std::vector<double> coefficients_;
};

/// Samples v_0..v_N at x_i = iL/N.
class GridFunction {
 public:
  GridFunction(double length, std::vector<double> values);

  double length() const noexcept { return length_; }
  std::span<const double> values() const noexcept { return values_; }
  std::size_t intervals() const noexcept { return values_.size() - 1; }
  double spacing() const noexcept { return length_ / static_cast<double>(intervals()); }
  double node(std::size_t i) const noexcept { return spacing() * static_cast<double>(i); }
  double operator[](std::size_t i) const { return values_[i]; }

  /// Second-order finite-difference derivative at every node: central in the
  /// interior, one-sided three-point at the ends.
  std::vector<double> derivative() const;

  double max_abs() const noexcept;

 private:
  double length_;
  std::vector<double> values_;
};

double eval(const SineSeries& u, double x);

/// Samples u at n + 1 uniform nodes.
GridFunction to_grid(const SineSeries& u, std::size_t n);

/// Builds a grid function from a callable on [0, L].
template <typename F>
GridFunction sample(F&& f, double length, std::size_t n) {
  std::vector<double> values(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    values[i] = f(length * static_cast<double>(i) / static_cast<double>(n));
  }
  return GridFunction(length, std::move(values));
}

/// ∫₀ᴸ u² dx. Exact (Parseval) for SineSeries, trapezoidal for GridFunction.
double norm_l2_sq(const SineSeries& u);
double norm_l2_sq(const GridFunction& u);

/// ∫₀ᴸ (u')² dx.
double dirichlet_energy(const SineSeries& u);
double dirichlet_energy(const GridFunction& u);

/// ∫₀ᴸ |u u'| dx.
double opial_functional(const SineSeries& u);
double opial_functional(const GridFunction& u);

/// ∫₀ᴸ |u|^{p+1} dx for p >= 1.
double lp1_functional(const SineSeries& u, double p);
double lp1_functional(const GridFunction& u, double p);

/// (1/L) ∫₀ᴸ u dx.
double mean(const SineSeries& u);
double mean(const GridFunction& u);

/// Approximate sup|u| from dense sampling (1024 points per mode, at least 4096).
double sup_abs(const SineSeries& u);

/// Random series with a_k ~ U[-1, 1] · k^{-decay}. The generator is
/// mt19937_64 with a hand-rolled uniform map, so coefficients are identical
/// across standard library implementations for a given seed.
SineSeries sample_random(std::size_t modes, double decay, std::uint64_t seed, double length);

/// Like sample_random but populates only the even modes k = 2, 4, ..., 2·modes.
/// Every even sine mode has zero mean over [0, L], so the result does too.
SineSeries sample_random_mean_zero(std::size_t modes, double decay, std::uint64_t seed,
                                   double length);

/// Two-column CSV "x,u" with a one-line header; 17 significant digits.
void write_csv(std::ostream& out, const GridFunction& u);
std::string to_csv(const GridFunction& u);

}  // namespace opiallab::funcspace
