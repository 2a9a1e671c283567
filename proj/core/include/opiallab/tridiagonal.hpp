// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace opiallab {

/// Solves a tridiagonal system by forward elimination and back substitution
/// (Thomas algorithm). `lower[0]` and `upper[n-1]` are ignored. No pivoting:
/// the matrix must be diagonally dominant, as the Dirichlet Laplacian is.
inline std::vector<double> solve_tridiagonal(std::span<const double> lower,
                                             std::span<const double> diag,
                                             std::span<const double> upper,
                                             std::span<const double> rhs) {
  const std::size_t n = diag.size();
  if (n == 0 || lower.size() != n || upper.size() != n || rhs.size() != n) {
    throw std::invalid_argument("solve_tridiagonal: inconsistent sizes");
  }
  std::vector<double> c(n);
  std::vector<double> x(n);
  c[0] = upper[0] / diag[0];
  x[0] = rhs[0] / diag[0];
  for (std::size_t i = 1; i < n; ++i) {
    const double m = diag[i] - lower[i] * c[i - 1];
    c[i] = upper[i] / m;
    x[i] = (rhs[i] - lower[i] * x[i - 1]) / m;
  }
  for (std::size_t i = n - 1; i-- > 0;) x[i] -= c[i] * x[i + 1];
  return x;
}

/// Solves −w'' = f on a uniform grid with spacing h and w = 0 at both ends.
/// `f` holds the interior values only; the result has the same length.
inline std::vector<double> solve_dirichlet_poisson(std::span<const double> f, double h) {
  const std::size_t m = f.size();
  std::vector<double> lower(m, -1.0);
  std::vector<double> diag(m, 2.0);
  std::vector<double> upper(m, -1.0);
  std::vector<double> rhs(f.begin(), f.end());
  for (double& v : rhs) v *= h * h;
  return solve_tridiagonal(lower, diag, upper, rhs);
}

}  // namespace opiallab
