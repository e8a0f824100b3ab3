#include "lmarkov_cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "lmarkov/bessel_asymptotics.hpp"
#include "lmarkov/bounds_catalog.hpp"
#include "lmarkov/csv.hpp"
#include "lmarkov/matrix_builder.hpp"
#include "lmarkov/oracle_quadrature.hpp"
#include "lmarkov/spectral.hpp"
#include "lmarkov/verify_harness.hpp"
#include "lmarkov_cli/output.hpp"

namespace lmarkov::cli {

namespace {

struct CommonOptions {
  std::string format = "table";
  std::string out_path;
  double tol = kDefaultSpectralTol;
};

struct ComputeOptions {
  int n = 0;
  double alpha = 0.0;
  int max_iter = 0;
  std::string dump_matrix;
  std::string dump_extremal;
};

struct BoundsOptions {
  int n = 0;
  double alpha = 0.0;
  bool computed = false;
};

struct VerifyOptions {
  std::string suite;
  int n_min = 3;
  int n_max = 30;
  int n = 0;
  std::vector<double> alpha_list;
  double alpha_min = -1.0;
  int trials = 100;
  std::uint64_t seed = 42;
};

struct AsymptoticOptions {
  double alpha = 0.0;
  int n_max = 1000;
};

// Result of one subcommand before it is written anywhere.
struct CommandResult {
  RecordTable table;
  int status = kExitOk;
};

void add_common(CLI::App& sub, CommonOptions& c, bool with_tol) {
  sub.add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "table"}))
      ->capture_default_str();
  sub.add_option("--out", c.out_path, "Write the report to this file instead of standard output");
  if (with_tol) {
    sub.add_option("--tol", c.tol, "Relative residual tolerance of the eigen-solver")->capture_default_str();
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + path);
  f << content;
  if (!f) throw std::runtime_error("write failed: " + path);
}

CommandResult cmd_compute(const ComputeOptions& o, const CommonOptions& c) {
  const AlphaParam alpha(o.alpha);
  const auto a = build_a(o.n, alpha);
  const auto r = mu_max_power(a, c.tol, o.max_iter);

  if (!o.dump_matrix.empty()) {
    std::ostringstream s;
    write_matrix_csv(s, a);
    write_file(o.dump_matrix, s.str());
  }
  if (!o.dump_extremal.empty()) {
    std::ostringstream s;
    write_expansion_csv(s, extremal_from_eigenvector(r, alpha));
    write_file(o.dump_extremal, s.str());
  }

  CommandResult out;
  out.table.columns = {"n", "alpha", "c", "c_sq", "residual", "iterations"};
  out.table.add_row({static_cast<long long>(o.n), o.alpha, std::sqrt(r.mu_max), r.mu_max, r.residual,
                     static_cast<long long>(r.iterations)});
  return out;
}

CommandResult cmd_bounds(const BoundsOptions& o, const CommonOptions& c, std::ostream& err) {
  const auto report = bounds_report(o.n, AlphaParam(o.alpha), o.computed, c.tol);
  CommandResult out;
  out.table.columns = {"n", "alpha", "id", "side", "value", "applicable", "hypothesis"};
  for (const auto& e : report.entries) {
    const char* side = bound_side(e.id) == BoundSide::lower   ? "lower"
                       : bound_side(e.id) == BoundSide::upper ? "upper"
                                                              : "exact";
    out.table.add_row({static_cast<long long>(o.n), o.alpha, std::string(to_string(e.id)), std::string(side),
                       e.value, e.applicable, e.hypothesis});
  }
  if (report.computed_c_sq) {
    out.table.add_row({static_cast<long long>(o.n), o.alpha, std::string("computed"), std::string("exact"),
                       *report.computed_c_sq, true, std::string("eigenvalue of A_n")});
  }
  for (const auto& v : report.violations) err << "violation: " << v << '\n';
  if (!report.sandwich_ok) out.status = kExitVerificationFailed;
  return out;
}

std::vector<double> cor13_eps() { return {1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8}; }
std::vector<double> cor13_alpha_big() { return {1e2, 1e3, 1e4}; }

CommandResult cmd_verify(const VerifyOptions& o, bool n_range_given, std::ostream& err) {
  std::vector<SweepReport> reports;
  if (o.suite == "cor13") {
    int lo = 1, hi = 10;
    if (o.n > 0) {
      lo = hi = o.n;
    } else if (n_range_given) {
      lo = o.n_min;
      hi = o.n_max;
    }
    const auto eps = cor13_eps();
    const auto big = cor13_alpha_big();
    SweepReport merged;
    merged.suite = "cor13";
    merged.worst_margin = std::numeric_limits<double>::infinity();
    for (int n = lo; n <= hi; ++n) {
      auto r = verify_cor13(n, eps, big);
      merged.worst_margin = std::min(merged.worst_margin, r.worst_margin);
      merged.all_pass = merged.all_pass && r.all_pass;
      for (auto& c : r.cases) merged.cases.push_back(std::move(c));
    }
    reports.push_back(std::move(merged));
  } else if (o.suite == "integral_lemma") {
    reports.push_back(verify_integral_lemma(o.trials, o.seed));
  } else {
    const Suite suite = parse_suite(o.suite);
    GridSpec grid = default_grid(suite);
    if (o.n_min > o.n_max) throw std::invalid_argument("--n-min must not exceed --n-max");
    grid.n_values.clear();
    for (int n = o.n_min; n <= o.n_max; ++n) grid.n_values.push_back(n);
    if (!o.alpha_list.empty()) grid.alpha_values = o.alpha_list;
    std::erase_if(grid.alpha_values, [&](double a) { return a < o.alpha_min; });
    reports.push_back(run_suite(suite, grid));
  }

  CommandResult out;
  out.table.columns = {"suite", "n", "alpha", "margin", "pass", "detail"};
  for (const auto& r : reports) {
    for (const auto& c : r.cases) {
      out.table.add_row({r.suite, static_cast<long long>(c.n), c.alpha, c.margin, c.pass, c.detail});
      if (!c.pass) {
        err << "FAIL " << r.suite << " n=" << c.n << " alpha=" << format_real(c.alpha)
            << " margin=" << format_real(c.margin) << " : " << c.detail << '\n';
      }
    }
    err << "suite=" << r.suite << " cases=" << r.cases.size() << " skipped=" << r.skipped
        << " worst_margin=" << format_real(r.worst_margin) << " all_pass=" << (r.all_pass ? "true" : "false")
        << (r.observational ? " (observational)" : "") << '\n';
    if (!r.all_pass) out.status = kExitVerificationFailed;
  }
  return out;
}

CommandResult cmd_asymptotic(const AsymptoticOptions& o, const CommonOptions& c, std::ostream& err) {
  const AlphaParam alpha(o.alpha);
  if (o.n_max < 8 || o.n_max > 4000) throw std::invalid_argument("--n-max must lie in [8, 4000]");

  double c_bessel = std::numeric_limits<double>::quiet_NaN();
  double zero = std::numeric_limits<double>::quiet_NaN();
  if (o.alpha >= 0.0) {
    const auto z = first_positive_zero(0.5 * (o.alpha - 1.0));
    zero = z.value;
    c_bessel = 1.0 / zero;
  } else {
    err << "note: Bessel constant not evaluated for alpha < 0\n";
  }

  const auto b = cor14_report(alpha);
  const std::vector<int> n_list = {o.n_max / 4, o.n_max / 2, o.n_max};
  const auto est = extrapolate_c(alpha, n_list, c.tol);
  const double rel_diff = std::fabs(est.value - c_bessel) / c_bessel;

  CommandResult out;
  out.table.columns = {"alpha",          "c_bessel",       "bessel_zero",      "cor14_lower_sq",
                       "cor14_upper_sq", "cor14_ratio",    "cbrt_branch",      "quadratic_branch",
                       "active_branch",  "alpha_star",     "n_max",            "c_extrapolated",
                       "c_previous",     "relative_diff"};
  out.table.add_row({o.alpha, c_bessel, zero, b.lower, b.upper, b.ratio, b.cbrt_branch, b.quadratic_branch,
                     std::string(b.cbrt_branch_active ? "cbrt" : "quadratic"), alpha_star(),
                     static_cast<long long>(o.n_max), est.value, est.previous, rel_diff});
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Markov-type inequality constants for the Laguerre weight", "lmarkov"};
  app.require_subcommand(1);

  CommonOptions common;
  ComputeOptions compute_opts;
  BoundsOptions bounds_opts;
  VerifyOptions verify_opts;
  AsymptoticOptions asym_opts;

  auto* compute = app.add_subcommand("compute", "Largest eigenvalue of A_n and the constant c_n(alpha)");
  compute->add_option("--n", compute_opts.n, "Polynomial degree")->required();
  compute->add_option("--alpha", compute_opts.alpha, "Laguerre parameter, > -1")->required();
  compute->add_option("--max-iter", compute_opts.max_iter, "Power-iteration cap; 0 means 200 n");
  compute->add_option("--dump-matrix", compute_opts.dump_matrix, "Write A_n as row,col,value CSV");
  compute->add_option("--dump-extremal", compute_opts.dump_extremal,
                      "Write the extremal polynomial's Laguerre coefficients as CSV");
  add_common(*compute, common, true);

  auto* bounds = app.add_subcommand("bounds", "Evaluate every closed-form bound");
  bounds->add_option("--n", bounds_opts.n, "Polynomial degree")->required();
  bounds->add_option("--alpha", bounds_opts.alpha, "Laguerre parameter, > -1")->required();
  bounds->add_flag("--computed", bounds_opts.computed, "Also compute c_n^2 and check every bound against it");
  add_common(*bounds, common, true);

  auto* verify = app.add_subcommand("verify", "Sweep a grid and check an inequality suite");
  verify->add_option("--suite", verify_opts.suite,
                     "lemma31, prop32, prop41, theoremA, theorem11, cor12, trace_frobenius, "
                     "bound_ordering, cor13 or integral_lemma")
      ->required();
  auto* n_min = verify->add_option("--n-min", verify_opts.n_min, "Smallest n (k for lemma31/prop32)")
                    ->capture_default_str();
  auto* n_max = verify->add_option("--n-max", verify_opts.n_max, "Largest n")->capture_default_str();
  verify->add_option("--n", verify_opts.n, "Single n (cor13 only)");
  verify->add_option("--alpha-list", verify_opts.alpha_list, "Comma-separated alpha values")->delimiter(',');
  verify->add_option("--alpha-min", verify_opts.alpha_min, "Drop grid alphas below this value");
  verify->add_option("--trials", verify_opts.trials, "Random trials (integral_lemma)")->capture_default_str();
  verify->add_option("--seed", verify_opts.seed, "Random seed (integral_lemma)")->capture_default_str();
  add_common(*verify, common, false);

  auto* asymptotic = app.add_subcommand("asymptotic", "Asymptotic constant c(alpha) and its estimates");
  asymptotic->add_option("--alpha", asym_opts.alpha, "Laguerre parameter, > -1")->required();
  asymptotic->add_option("--n-max", asym_opts.n_max, "Largest n used by the extrapolation")
      ->capture_default_str();
  add_common(*asymptotic, common, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    CommandResult result;
    if (compute->parsed()) {
      result = cmd_compute(compute_opts, common);
    } else if (bounds->parsed()) {
      result = cmd_bounds(bounds_opts, common, err);
    } else if (verify->parsed()) {
      result = cmd_verify(verify_opts, n_min->count() + n_max->count() > 0, err);
    } else {
      result = cmd_asymptotic(asym_opts, common, err);
    }

    std::ostringstream buffer;
    render(buffer, result.table, parse_format(common.format));
    if (common.out_path.empty()) {
      out << buffer.str();
    } else {
      write_file(common.out_path, buffer.str());
    }
    return result.status;
  } catch (const NonConvergence& e) {
    err << "error: " << e.what() << " (residual " << format_real(e.residual()) << " after " << e.iterations()
        << " iterations)\n";
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace lmarkov::cli
