#pragma once

// Laguerre normalization constants and Gamma-ratio estimates.
//
// Index convention: beta_m^2 = Gamma(m + alpha) / Gamma(m) for m >= 1, so
// that ||L_m^(alpha)||^2 = beta_{m+1}^2 under the weight t^alpha e^{-t}.
// Every Gamma quantity stays in log scale until the final exponential;
// ratios of betas are formed by telescoping products instead.

#include <vector>

namespace lmarkov {

/// Exponent of the Laguerre weight t^alpha e^{-t}. Integrable iff alpha > -1.
class AlphaParam {
 public:
  /// Throws std::invalid_argument unless value > -1 and finite.
  explicit AlphaParam(double value);

  double value() const noexcept { return value_; }

  /// alpha + 1. Exact in floating point for alpha in [-1, 1] (Sterbenz).
  double plus_one() const noexcept { return value_ + 1.0; }

 private:
  double value_;
};

/// ln Gamma(x) for x > 0. Stirling series after an upward shift to x >= 15;
/// absolute error below 1e-13 * max(1, |ln Gamma(x)|).
double log_gamma(double x);

/// ln(beta_m^2) = ln Gamma(m + alpha) - ln Gamma(m).
double log_beta_sq(int m, AlphaParam alpha);

/// beta_i / beta_k for 1 <= i <= k as prod_{nu=i}^{k-1} sqrt(nu / (nu + alpha)).
/// The product is accumulated left to right starting at nu = i, and returns
/// exactly 1 for i == k.
double beta_ratio(int i, int k, AlphaParam alpha);

/// Table of ln(beta_m^2) for m = 1..size.
class BetaTable {
 public:
  BetaTable(int size, AlphaParam alpha);

  AlphaParam alpha() const noexcept { return alpha_; }
  int size() const noexcept { return static_cast<int>(log_beta_sq_.size()); }

  /// 1-based, m in [1, size()].
  double log_beta_sq(int m) const;
  double beta(int m) const;

 private:
  AlphaParam alpha_;
  std::vector<double> log_beta_sq_;
};

/// RHS - LHS of the Gamma-ratio bound
///   (Gamma(i+a)/Gamma(i)) / (Gamma(k+a)/Gamma(k)) <= ((i+(a-1)/2) / (k+(a-1)/2))^a
/// valid for a >= 1 and i < k. Non-negative when the bound holds.
double lemma31_margin(int i, int k, AlphaParam alpha);

/// Two-sided Gamma-ratio sandwich with branch-dependent orientation.
///
/// With r = (Gamma(i+a)/Gamma(i)) / (Gamma(k+a)/Gamma(k)), p = (i/k)^a and
/// q = ((i+(a-1)/2) / (k+(a-1)/2))^a:
///   -1 < a <= 0 or a >= 1:  p <= r <= q   (outer = q, inner = p)
///    0 <  a <  1:           q <= r <= p   (outer = p, inner = q)
struct Prop32Margins {
  double outer_gap;  ///< outer - ratio
  double inner_gap;  ///< ratio - inner
  double ratio;
  double outer;
  double inner;
  bool reversed;     ///< true on the 0 < a < 1 branch
};

Prop32Margins prop32_margin(int i, int k, AlphaParam alpha);

/// Default pass threshold for signed margins: margin >= -kMarginTolerance * max(1, |scale|).
inline constexpr double kMarginTolerance = 1e-12;

inline bool margin_passes(double margin, double scale) {
  const double s = scale < 0 ? -scale : scale;
  return margin >= -kMarginTolerance * (s > 1.0 ? s : 1.0);
}

}  // namespace lmarkov
