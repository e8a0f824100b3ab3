#pragma once

// Bessel J_nu, its first positive zero, and the asymptotic Markov constant
// c(alpha) = lim_{n -> inf} c_n(alpha) / n = 1 / j_{(alpha-1)/2, 1}.

#include <span>
#include <vector>

#include "lmarkov/gamma_kernel.hpp"

namespace lmarkov {

/// J_nu(x) from the ascending series. Requires nu > -1 and 0 < x <= 100.
///
/// The leading factor (x/2)^nu / Gamma(nu + 1) is formed in log scale; the
/// normalized alternating sum runs in 100-digit binary floating point so the
/// cancellation for x up to ~50 does not reach double precision.
double bessel_j(double nu, double x);

struct BesselZero {
  double nu;
  double value;     ///< j_{nu,1}
  double residual;  ///< |J_nu(value)|
};

/// Scans upward from max(0.1, nu) in steps of 0.1 until J_nu changes sign,
/// then bisects to a bracket width of 1e-13. Requires nu >= -1/2.
/// Throws NonConvergence if no sign change is found below x = 100.
BesselZero first_positive_zero(double nu);

/// 1 / j_{(alpha-1)/2, 1}; requires alpha >= 0 so nu >= -1/2.
double asymptotic_constant(AlphaParam alpha);

/// Two-sided bound on c(alpha)^2 with the crossover at alpha*.
struct Cor14Bounds {
  double lower;          ///< 2 / ((alpha+1)(alpha+5))
  double upper;          ///< active branch below
  double ratio;          ///< sqrt(upper / lower), bounds on c (not c^2)
  double cbrt_branch;    ///< 1 / ((alpha+1) cbrt((alpha+3)(alpha+5)))
  double quadratic_branch;  ///< 4 / (alpha^2 + 10 alpha + 8)
  bool cbrt_branch_active;  ///< alpha <= alpha*
};

Cor14Bounds cor14_report(AlphaParam alpha);

/// Root of (a+1) cbrt((a+3)(a+5)) = (a^2 + 10 a + 8) / 4 on [10, 100],
/// bisected to 1e-8. Computed once and cached.
double alpha_star();

struct LimitEstimate {
  double value;                 ///< first-order Richardson from the two largest n
  double previous;              ///< same estimate from the preceding pair
  std::vector<double> scaled;   ///< c_n(alpha) / n for each n in the list
};

/// c_n(alpha) / n over an increasing n list (>= 3 entries, max <= 4000),
/// extrapolated under c_n / n = c + a / n + O(1/n^2). Solves for different n
/// run concurrently.
LimitEstimate extrapolate_c(AlphaParam alpha, std::span<const int> n_list, double tol = 1e-12);

inline double estimate_c_numeric(AlphaParam alpha, std::span<const int> n_list) {
  return extrapolate_c(alpha, n_list).value;
}

}  // namespace lmarkov
