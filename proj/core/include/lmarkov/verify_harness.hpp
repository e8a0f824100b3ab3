#pragma once

// Grid sweeps over (n, alpha) that check each proved inequality and identity
// and record a signed, normalized margin per grid point. A case passes when
// margin >= -1e-12. Grid points outside a claim's hypotheses are skipped and
// counted, never reported as passes.

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lmarkov {

enum class Suite {
  lemma31,          ///< Gamma-ratio upper bound, alpha >= 1 (grid n is k; all i < k)
  prop32,           ///< two-sided Gamma-ratio sandwich, both branches
  prop41,           ///< ||A_n||_inf bound, alpha >= 2
  theoremA,         ///< two-sided bound around computed c^2
  theorem11,        ///< Dorfler lower and the alpha >= 2 upper bound
  cor12,            ///< the factor-8 two-sided bound, alpha >= 2
  trace_frobenius,  ///< trace and Frobenius identities
  bound_ordering,   ///< observational: which closed-form bound is tighter
};

inline constexpr std::array<Suite, 8> kAllSuites = {
    Suite::lemma31,   Suite::prop32, Suite::prop41,          Suite::theoremA,
    Suite::theorem11, Suite::cor12,  Suite::trace_frobenius, Suite::bound_ordering,
};

std::string_view to_string(Suite suite);

/// Thrown by parse_suite for a name that is not a known suite.
class UnknownSuite : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Suite parse_suite(std::string_view name);

struct GridSpec {
  std::vector<int> n_values;
  std::vector<double> alpha_values;
  Suite suite;

  /// Throws std::invalid_argument on empty lists, n < 1 or alpha <= -1.
  void validate() const;
};

/// n in {3..30}, alpha in {-0.9, -0.5, 0, 0.5, 1, 2, 3, 5, 10, 25, 50, 100}.
GridSpec default_grid(Suite suite);

struct SweepCase {
  int n;
  double alpha;
  double margin;
  bool pass;
  std::string detail;
};

struct SweepReport {
  std::string suite;
  std::vector<SweepCase> cases;  ///< sorted by (n, alpha)
  double worst_margin = 0.0;     ///< +inf when there are no cases
  bool all_pass = true;
  int skipped = 0;
  bool observational = false;    ///< records a comparison rather than a theorem
};

inline constexpr double kCasePassThreshold = -1e-12;

/// Throws std::invalid_argument for an invalid grid. Spectral failures are
/// recorded as failing cases.
SweepReport run_suite(Suite suite, const GridSpec& grid);
inline SweepReport run_suite(const GridSpec& grid) { return run_suite(grid.suite, grid); }

/// Limits of (alpha+1) c_n^2 as alpha -> -1 and alpha c_n^2 as alpha -> inf.
/// (i) alpha = -1 + eps for each eps (decreasing, >= 1e-8): the relative gap
///     to n(n+1)/2 must not grow as eps shrinks, and must be <= 1e-3 once
///     eps <= 1e-6.
/// (ii) alpha in alpha_big (>= 100): alpha c_n^2 in [2n/3 - d, 3(n+1) + d],
///      d = 1e-6 * 3(n+1).
SweepReport verify_cor13(int n, std::span<const double> eps_list, std::span<const double> alpha_big);

/// Adaptive Simpson with Richardson correction on [a, b]; tol is absolute.
/// err_estimate (optional) receives the accumulated |S2 - S1| / 15.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        double* err_estimate = nullptr, int max_depth = 50);

/// One instance of the integral bracketing lemma for
/// f(t) = prod (t + shift_i)^{exponent_i} on [0, x]:
///   [(t + g_min) f(t)]_0^x / (s+1) <= int_0^x f <= (x + g_max) f(x) / (s+1).
struct IntegralLemmaCase {
  double integral;
  double integral_error;
  double lower;
  double upper;
};

IntegralLemmaCase integral_lemma_case(std::span<const double> exponents, std::span<const double> shifts,
                                      double x);

/// Random trials: r in {1,2,3} factors, exponents in (0, 3], shifts in
/// [0, 2], x in (0, 5]. Deterministic for a given seed.
SweepReport verify_integral_lemma(int trials, std::uint64_t seed);

/// CSV with header `suite,n,alpha,margin,pass,detail`; margins use 17
/// significant digits.
void write_sweep_csv(std::ostream& out, const SweepReport& report, bool header = true);

}  // namespace lmarkov
