// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace opiallab::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kNumericalFailure = 2,
  kChecksFailed = 3,
};

/// Everything a subcommand may read from the command line. Fields a given
/// subcommand does not use keep their defaults.
struct RunConfig {
  std::string subcommand;
  double p = 3.0;
  double length = 1.0;
  double lambda = 1.0;
  double mu = 1.0;
  std::size_t n = 0;  // 0 selects the subcommand default
  double tol = 1e-10;           // relative J change (constant, sweep)
  double boundary_tol = 1e-6;   // |u(L)|/A accepted by shooting (extremal, bounds)
  std::size_t max_iter = 500;
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
  std::size_t modes = 8;
  double decay = 1.0;
  bool even_modes = false;
  std::string inequality;
  std::string method = "shoot";
  std::string mode = "dirichlet";
  bool compare = false;
  double p_min = 1.0;
  double p_max = 5.0;
  std::size_t steps = 9;
  std::string output;
  std::string format;  // json | csv; empty selects the subcommand default
  bool force = false;
};

/// Runs the tool with argv-style arguments (args[0] is the program name).
/// Machine-readable output goes to `out` unless --output names a file;
/// human-readable summaries and diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Per-sample seed for sample `index` of a corpus seeded with `seed`
/// (splitmix64 finalizer), so samples are independent of evaluation order.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

/// Worker count for `sweep`: OPIAL_LAB_THREADS if set and positive, else
/// the hardware concurrency.
unsigned sweep_threads();

}  // namespace opiallab::cli
