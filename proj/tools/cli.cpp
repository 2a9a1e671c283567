// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "opiallab/emdenfowler.hpp"
#include "opiallab/errors.hpp"
#include "opiallab/funcspace.hpp"
#include "opiallab/inequalities.hpp"
#include "opiallab/report_io.hpp"
#include "opiallab/variational.hpp"

namespace opiallab::cli {

namespace {

namespace fs = funcspace;
namespace io = report_io;
using io::Json;

// Thrown for invalid flag values found after parsing; maps to kUsageError.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string human(double v) {
  std::ostringstream s;
  s << std::setprecision(10) << v;
  return s.str();
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

// Writes `content` to `path`, or to `out` when path is empty. Existing files
// are only replaced with --force.
void emit(const std::string& path, const std::string& content, bool force, std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  if (std::filesystem::exists(path) && !force) {
    throw UsageError("refusing to overwrite " + path + " (pass --force)");
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot open " + path + " for writing");
  file << content;
}

std::string resolved_format(const RunConfig& c, const std::string& fallback) {
  return c.format.empty() ? fallback : c.format;
}

// ---------------------------------------------------------------- constant

void validate_constant(const RunConfig& c) {
  require(std::isfinite(c.p) && c.p >= 1.0,
          "constant: requires p > 1 (p = 1 is accepted as the linear consistency case), got p = " +
              human(c.p));
  require(std::isfinite(c.length) && c.length > 0.0, "constant: requires L > 0");
  require(c.n >= 64, "constant: requires n >= 64");
  require(c.tol > 0.0, "constant: requires tol > 0");
  require(c.max_iter >= 1, "constant: requires max-iter >= 1");
}

int cmd_constant(const RunConfig& c, std::ostream& out, std::ostream& err) {
  validate_constant(c);
  const auto report = variational::maximize(c.p, c.length, {c.n, c.tol, c.max_iter});

  std::string content;
  if (resolved_format(c, "json") == "csv") {
    content = io::constant_csv_header() + "\n" + io::constant_csv_row(report) + "\n";
  } else {
    content = io::dump(io::envelope("constant_report", Json{{"report", io::to_json(report)}}));
  }
  emit(c.output, content, c.force, out);

  err << "C_p(L) for p = " << human(c.p) << ", L = " << human(c.length) << " (n = " << c.n
      << ")\n"
      << "  maximized      " << human(report.c_maximized) << "  (" << report.iterations
      << " iterations, " << (report.converged ? "converged" : "NOT converged") << ")\n"
      << "  closed form    " << human(report.c_closed_form) << "  rel diff "
      << human(report.rel_diff_max_closed) << "\n"
      << "  paper printed  " << human(report.c_paper_printed) << "  rel diff "
      << human(report.rel_diff_max_printed)
      << (report.rel_diff_max_printed > 1e-4 ? "  <-- disagrees with the maximizer" : "") << "\n";
  return report.converged ? kSuccess : kNumericalFailure;
}

// ------------------------------------------------------------------ verify

struct SampleOutcome {
  std::vector<inequalities::CheckReport> reports;
  std::optional<std::string> precondition_failure;
};

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  require(c.samples >= 1, "verify: requires samples >= 1");
  require(c.modes >= 1, "verify: requires K >= 1");
  require(c.decay >= 0.0, "verify: requires decay >= 0");
  require(std::isfinite(c.length) && c.length > 0.0, "verify: requires L > 0");
  const bool interpolation = c.inequality == "interpolation";
  if (interpolation) require(std::isfinite(c.p) && c.p > 1.0, "verify interpolation: requires p > 1");
  const std::string format = resolved_format(c, "csv");

  double constant = 0.0;
  if (interpolation) {
    const std::size_t n = c.n >= 64 ? c.n : 2048;
    const auto report = variational::maximize(c.p, c.length, {n, 1e-10, 500});
    if (!report.converged) {
      err << "verify interpolation: maximizer did not converge\n";
      return kNumericalFailure;
    }
    constant = report.c_maximized;
  }

  std::vector<SampleOutcome> outcomes(c.samples);
  for (std::size_t i = 0; i < c.samples; ++i) {
    const std::uint64_t seed = sample_seed(c.seed, i);
    const fs::SineSeries u = c.even_modes
                                 ? fs::sample_random_mean_zero(c.modes, c.decay, seed, c.length)
                                 : fs::sample_random(c.modes, c.decay, seed, c.length);
    SampleOutcome& o = outcomes[i];
    try {
      if (c.inequality == "wirtinger") {
        o.reports.push_back(inequalities::wirtinger_check(u));
      } else if (c.inequality == "opial") {
        o.reports.push_back(inequalities::opial_check(u));
      } else if (c.inequality == "chain") {
        for (const auto& r : inequalities::chain_check(u)) o.reports.push_back(r);
      } else if (interpolation) {
        o.reports.push_back(inequalities::interpolation_check(u, c.p, constant));
      } else {
        o.reports.push_back(inequalities::mean_zero_check(u));
      }
    } catch (const PreconditionError& e) {
      o.precondition_failure = e.what();
    }
  }

  std::size_t checks = 0;
  std::size_t passed = 0;
  std::size_t preconditions = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  double worst_ratio = 0.0;
  for (const auto& o : outcomes) {
    if (o.precondition_failure) ++preconditions;
    for (const auto& r : o.reports) {
      ++checks;
      if (r.holds) ++passed;
      worst_margin = std::min(worst_margin, r.margin);
      worst_ratio = std::max(worst_ratio, r.ratio);
    }
  }
  const bool all_pass = preconditions == 0 && passed == checks;

  std::string content;
  if (format == "json") {
    Json reports = Json::array();
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      for (const auto& r : outcomes[i].reports) reports.push_back(io::to_json(r));
    }
    Json body;
    body["inequality"] = c.inequality;
    body["seed"] = c.seed;
    body["samples"] = c.samples;
    body["checks"] = checks;
    body["passed"] = passed;
    body["precondition_failures"] = preconditions;
    body["worst_margin"] = checks > 0 ? Json(worst_margin) : Json(nullptr);
    body["worst_ratio"] = worst_ratio;
    body["reports"] = std::move(reports);
    content = io::dump(io::envelope("verify_summary", body));
  } else {
    std::ostringstream csv;
    csv << "sample," << io::check_csv_header() << ",status\n";
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      if (outcomes[i].precondition_failure) {
        csv << i << ',' << c.inequality << ",,,,,,,precondition\n";
      }
      for (const auto& r : outcomes[i].reports) {
        csv << i << ',' << io::check_csv_row(r) << ',' << (r.holds ? "ok" : "violated") << '\n';
      }
    }
    content = csv.str();
  }
  emit(c.output, content, c.force, out);

  err << "verify " << c.inequality << ": " << passed << "/" << checks << " checks pass over "
      << c.samples << " samples";
  if (preconditions > 0) err << ", " << preconditions << " precondition failures";
  if (checks > 0) err << ", worst margin " << human(worst_margin) << ", worst ratio " << human(worst_ratio);
  err << "\n";
  return all_pass ? kSuccess : kChecksFailed;
}

// ---------------------------------------------------------------- extremal

emdenfowler::ExtremalProfile build_extremal(const std::string& method, const RunConfig& c,
                                            std::size_t n) {
  if (method == "shoot") return emdenfowler::shoot(c.p, c.mu, c.length, c.boundary_tol, n);
  if (std::abs(c.p - 1.0) <= 1e-12) {
    const double expected = std::numbers::pi * std::numbers::pi / (c.length * c.length);
    if (std::abs(c.mu - expected) > 1e-6 * expected) {
      throw SolverError("linear case has a positive Dirichlet solution only for mu = (pi/L)^2 = " +
                        human(expected));
    }
    return emdenfowler::profile_from_first_integral(c.p, c.length, 1.0, n);
  }
  return emdenfowler::profile_from_first_integral(
      c.p, c.length, emdenfowler::amplitude_for(c.p, c.mu, c.length), n);
}

int cmd_extremal(const RunConfig& c, std::ostream&, std::ostream& err) {
  require(std::isfinite(c.p) && c.p >= 1.0, "extremal: requires p > 1 (or p = 1 with mu = (pi/L)^2)");
  require(std::isfinite(c.mu) && c.mu > 0.0, "extremal: requires mu > 0");
  require(std::isfinite(c.length) && c.length > 0.0, "extremal: requires L > 0");
  require(c.boundary_tol > 0.0, "extremal: requires tol > 0");
  const std::size_t n = c.n > 0 ? c.n : emdenfowler::kDefaultSteps;
  require(n >= 16 && n % 2 == 0, "extremal: requires an even n >= 16");
  require(!c.output.empty(), "extremal: --output <file.csv> is required");

  const std::filesystem::path csv_path(c.output);
  const std::filesystem::path sidecar_path =
      std::filesystem::path(csv_path).replace_extension(".json");
  for (const auto& path : {csv_path, sidecar_path}) {
    if (std::filesystem::exists(path) && !c.force) {
      throw UsageError("refusing to overwrite " + path.string() + " (pass --force)");
    }
  }

  const auto profile = build_extremal(c.method, c, n);
  Json sidecar = io::extremal_sidecar(profile);
  Json body;
  body["method"] = c.method;
  for (const auto& [key, value] : sidecar.items()) body[key] = value;

  bool ok = profile.residuals.boundary <= c.boundary_tol && profile.residuals.energy_identity <= 1e-6;
  if (c.compare) {
    const std::string other = c.method == "shoot" ? "quadrature" : "shoot";
    RunConfig matched = c;
    if (other == "quadrature") matched.mu = profile.mu;
    const auto reference = build_extremal(other, matched, n);
    const double diff = emdenfowler::sup_distance(profile.profile, reference.profile);
    body["compare"] = Json{{"method", other}, {"sup_norm_difference", diff}};
    err << "compare " << c.method << " vs " << other << ": sup-norm difference " << human(diff)
        << "\n";
    ok = ok && diff <= 1e-6;
  }

  emit(csv_path.string(), fs::to_csv(profile.profile), true, err);
  emit(sidecar_path.string(), io::dump(io::envelope("extremal_profile", body)), true, err);
  err << "extremal (" << c.method << "): p = " << human(profile.p) << ", L = "
      << human(profile.length) << ", mu = " << human(profile.mu) << ", A = "
      << human(profile.amplitude) << ", E = " << human(profile.energy)
      << ", energy identity residual " << human(profile.residuals.energy_identity) << "\n";
  return ok ? kSuccess : kNumericalFailure;
}

// ------------------------------------------------------------------- sweep

int cmd_sweep(const RunConfig& c, std::ostream& out, std::ostream& err) {
  require(std::isfinite(c.p_min) && c.p_min >= 1.0, "sweep: requires p-min >= 1");
  require(std::isfinite(c.p_max) && c.p_max > c.p_min, "sweep: requires p-max > p-min");
  require(c.steps >= 2, "sweep: requires steps >= 2");
  require(std::isfinite(c.length) && c.length > 0.0, "sweep: requires L > 0");
  require(c.n >= 64, "sweep: requires n >= 64");
  require(c.tol > 0.0, "sweep: requires tol > 0");
  require(resolved_format(c, "csv") == "csv", "sweep: only csv output is supported");

  std::vector<double> exponents(c.steps);
  for (std::size_t i = 0; i < c.steps; ++i) {
    exponents[i] = c.p_min + (c.p_max - c.p_min) * static_cast<double>(i) /
                                 static_cast<double>(c.steps - 1);
  }
  std::vector<std::optional<variational::ConstantReport>> rows(c.steps);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < c.steps; i = next++) {
      rows[i] = variational::maximize(exponents[i], c.length, {c.n, c.tol, c.max_iter});
    }
  };
  const unsigned threads = std::min<unsigned>(sweep_threads(), static_cast<unsigned>(c.steps));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  std::ostringstream csv;
  csv << io::constant_csv_header() << '\n';
  bool all_converged = true;
  for (const auto& row : rows) {
    csv << io::constant_csv_row(*row) << '\n';
    all_converged = all_converged && row->converged;
    err << "p = " << std::setw(12) << human(row->p) << "  C = " << std::setw(18)
        << human(row->c_maximized) << "  closed-form rel diff " << human(row->rel_diff_max_closed)
        << "\n";
  }
  emit(c.output, csv.str(), c.force, out);
  return all_converged ? kSuccess : kNumericalFailure;
}

// ------------------------------------------------------------------ bounds

int cmd_bounds(const RunConfig& c, std::ostream& out, std::ostream& err) {
  require(std::isfinite(c.p) && c.p > 1.0, "bounds: requires p > 1");
  require(std::isfinite(c.lambda) && c.lambda > 0.0, "bounds: requires lambda > 0");
  require(std::isfinite(c.length) && c.length > 0.0, "bounds: requires L > 0");
  const std::size_t n = c.n > 0 ? c.n : emdenfowler::kDefaultSteps;
  require(n >= 16 && n % 2 == 0, "bounds: requires an even n >= 16");

  const auto solution = emdenfowler::shoot(c.p, c.lambda, c.length, c.boundary_tol, n);
  const auto report =
      c.mode == "meanzero"
          ? inequalities::mean_zero_energy_bound(c.p, c.lambda, c.length, solution.energy)
          : inequalities::energy_lower_bound(c.p, c.lambda, c.length, solution.energy);

  Json body;
  body["mode"] = c.mode;
  body["p"] = c.p;
  body["lambda"] = c.lambda;
  body["L"] = c.length;
  body["energy"] = solution.energy;
  body["amplitude"] = solution.amplitude;
  body["report"] = io::to_json(report);
  emit(c.output, io::dump(io::envelope("energy_bound", body)), c.force, out);

  err << "bounds (" << c.mode << "): E = " << human(solution.energy) << ", E^((p-1)/2) = "
      << human(report.rhs) << ", threshold = " << human(report.lhs) << " -> "
      << (report.holds ? "holds" : "does not hold") << "\n";
  return report.holds ? kSuccess : kChecksFailed;
}

}  // namespace

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

unsigned sweep_threads() {
  if (const char* env = std::getenv("OPIAL_LAB_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && value > 0) return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Numerical toolkit for the Olech-Opial / Wirtinger / Emden-Fowler inequalities",
               "opial_lab"};
  app.require_subcommand(1);

  auto add_output = [&c](CLI::App* sub) {
    sub->add_option("-o,--output", c.output, "Output file (default: standard output)");
    sub->add_flag("--force", c.force, "Allow overwriting an existing output file");
  };

  auto* constant = app.add_subcommand("constant", "Optimal interpolation constant C_p(L), three routes");
  constant->add_option("--p", c.p, "Exponent p (> 1; p = 1 for the linear check)")->required();
  constant->add_option("--L", c.length, "Interval length");
  constant->add_option("--n", c.n, "Grid intervals (default 2048)");
  constant->add_option("--tol", c.tol, "Relative change of J at convergence");
  constant->add_option("--max-iter", c.max_iter, "Iteration cap");
  constant->add_option("--format", c.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  add_output(constant);

  auto* verify = app.add_subcommand("verify", "Evaluate an inequality over a seeded random corpus");
  verify->add_option("inequality", c.inequality, "wirtinger | opial | chain | interpolation | meanzero")
      ->required()
      ->check(CLI::IsMember({"wirtinger", "opial", "chain", "interpolation", "meanzero"}));
  verify->add_option("--seed", c.seed, "Corpus seed");
  verify->add_option("--samples", c.samples, "Number of random functions");
  verify->add_option("--K", c.modes, "Sine modes per function");
  verify->add_option("--decay", c.decay, "Coefficient decay exponent");
  verify->add_option("--L", c.length, "Interval length");
  verify->add_option("--p", c.p, "Exponent for the interpolation check");
  verify->add_option("--n", c.n, "Grid intervals for the interpolation constant (default 2048)");
  verify->add_flag("--even-modes", c.even_modes, "Use only even sine modes (zero-mean corpus)");
  verify->add_option("--format", c.format, "csv | json")->check(CLI::IsMember({"json", "csv"}));
  add_output(verify);

  auto* extremal = app.add_subcommand("extremal", "Emden-Fowler ground state profile (CSV + JSON sidecar)");
  extremal->add_option("--p", c.p, "Exponent p")->required();
  extremal->add_option("--mu", c.mu, "Multiplier mu in -u'' = mu u^p")->required();
  extremal->add_option("--L", c.length, "Interval length");
  extremal->add_option("--n", c.n, "Grid intervals (even, default 4000)");
  extremal->add_option("--tol", c.boundary_tol, "Accepted |u(L)|/A for shooting (default 1e-6)");
  extremal->add_option("--method", c.method, "shoot | quadrature")
      ->check(CLI::IsMember({"shoot", "quadrature"}));
  extremal->add_flag("--compare", c.compare, "Also run the other method and report the sup-norm difference");
  add_output(extremal);

  auto* sweep = app.add_subcommand("sweep", "C_p(L) over a range of p (CSV)");
  sweep->add_option("--p-min", c.p_min, "Smallest p (>= 1)");
  sweep->add_option("--p-max", c.p_max, "Largest p");
  sweep->add_option("--steps", c.steps, "Number of rows (>= 2)");
  sweep->add_option("--L", c.length, "Interval length");
  sweep->add_option("--n", c.n, "Grid intervals (default 2048)");
  sweep->add_option("--tol", c.tol, "Relative change of J at convergence");
  sweep->add_option("--format", c.format, "csv")->check(CLI::IsMember({"csv"}));
  add_output(sweep);

  auto* bounds = app.add_subcommand("bounds", "A priori energy lower bound for -u'' = lambda u^p");
  bounds->add_option("--p", c.p, "Exponent p (> 1)")->required();
  bounds->add_option("--lambda", c.lambda, "lambda > 0");
  bounds->add_option("--L", c.length, "Interval length");
  bounds->add_option("--n", c.n, "RK4 steps (even, default 4000)");
  bounds->add_option("--tol", c.boundary_tol, "Accepted |u(L)|/A for shooting (default 1e-6)");
  bounds->add_option("--mode", c.mode, "dirichlet | meanzero")
      ->check(CLI::IsMember({"dirichlet", "meanzero"}));
  add_output(bounds);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const CLI::App* failed = &app;
    for (const auto* sub : app.get_subcommands()) failed = sub;
    err << failed->help();
    return kUsageError;
  }

  try {
    if (constant->parsed()) {
      c.subcommand = "constant";
      if (c.n == 0) c.n = 2048;
      return cmd_constant(c, out, err);
    }
    if (verify->parsed()) {
      c.subcommand = "verify";
      return cmd_verify(c, out, err);
    }
    if (extremal->parsed()) {
      c.subcommand = "extremal";
      return cmd_extremal(c, out, err);
    }
    if (sweep->parsed()) {
      c.subcommand = "sweep";
      if (c.n == 0) c.n = 2048;
      return cmd_sweep(c, out, err);
    }
    c.subcommand = "bounds";
    return cmd_bounds(c, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  }
}

}  // namespace opiallab::cli
