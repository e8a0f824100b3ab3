#include "lmarkov/bessel_asymptotics.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lmarkov/parallel.hpp"
#include "lmarkov/spectral.hpp"

namespace lmarkov {

namespace {

using Wide = boost::multiprecision::cpp_bin_float_100;

constexpr double kScanStep = 0.1;
constexpr double kScanLimit = 100.0;
constexpr double kBracketWidth = 1e-13;
constexpr int kMaxSeriesTerms = 2000;

double cbrt_branch(double a) { return 1.0 / ((a + 1) * std::cbrt((a + 3) * (a + 5))); }
double quadratic_branch(double a) { return 4.0 / (a * a + 10 * a + 8); }

}  // namespace

double bessel_j(double nu, double x) {
  if (!(nu > -1.0) || !std::isfinite(nu)) throw std::invalid_argument("bessel_j: requires nu > -1");
  if (!(x > 0.0) || x > kScanLimit) throw std::invalid_argument("bessel_j: requires 0 < x <= 100");

  const double log_lead = nu * std::log(0.5 * x) - log_gamma(nu + 1.0);

  // sum_m (-1)^m (x/2)^{2m} Gamma(nu+1) / (m! Gamma(nu+m+1)), term ratio
  // -(x/2)^2 / (m (nu + m)).
  const Wide half_x = Wide(x) / 2;
  const Wide q = half_x * half_x;
  const Wide wnu(nu);
  Wide term = 1;
  Wide sum = 1;
  Wide largest = 1;
  const Wide rel_stop("1e-18");
  const Wide abs_stop("1e-60");
  for (int m = 1; m <= kMaxSeriesTerms; ++m) {
    const Wide denom = Wide(m) * (wnu + m);
    term *= -q / denom;
    sum += term;
    const Wide mag = abs(term);
    if (mag > largest) largest = mag;
    if (denom > q && (mag <= rel_stop * abs(sum) || mag <= abs_stop * largest)) break;
  }
  return std::exp(log_lead) * sum.convert_to<double>();
}

BesselZero first_positive_zero(double nu) {
  if (!(nu >= -0.5)) throw std::invalid_argument("first_positive_zero: requires nu >= -1/2");

  double lo = std::max(0.1, nu);
  double f_lo = bessel_j(nu, lo);
  double hi = lo;
  double f_hi = f_lo;
  while (true) {
    hi = lo + kScanStep;
    if (hi > kScanLimit) {
      throw NonConvergence("first_positive_zero: no sign change below x = 100", std::fabs(f_lo), 0);
    }
    f_hi = bessel_j(nu, hi);
    if (f_hi == 0.0 || (f_lo > 0) != (f_hi > 0)) break;
    lo = hi;
    f_lo = f_hi;
  }

  if (f_hi == 0.0) return {nu, hi, 0.0};
  while (hi - lo > kBracketWidth) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = bessel_j(nu, mid);
    if (f_mid == 0.0) return {nu, mid, 0.0};
    if ((f_mid > 0) == (f_lo > 0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  const double root = 0.5 * (lo + hi);
  return {nu, root, std::fabs(bessel_j(nu, root))};
}

double asymptotic_constant(AlphaParam alpha) {
  if (alpha.value() < 0.0) {
    throw std::invalid_argument(
        "asymptotic_constant: requires alpha >= 0 (zero finder certified for nu >= -1/2)");
  }
  return 1.0 / first_positive_zero(0.5 * (alpha.value() - 1.0)).value;
}

double alpha_star() {
  static const double cached = [] {
    auto gap = [](double a) { return (a + 1) * std::cbrt((a + 3) * (a + 5)) - (a * a + 10 * a + 8) / 4; };
    double lo = 10.0;
    double hi = 100.0;
    double g_lo = gap(lo);
    if ((g_lo > 0) == (gap(hi) > 0)) {
      throw std::runtime_error("alpha_star: no root in [10, 100]");
    }
    while (hi - lo > 1e-8) {
      const double mid = 0.5 * (lo + hi);
      const double g_mid = gap(mid);
      if ((g_mid > 0) == (g_lo > 0)) {
        lo = mid;
        g_lo = g_mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  }();
  return cached;
}

Cor14Bounds cor14_report(AlphaParam alpha) {
  const double a = alpha.value();
  Cor14Bounds out{};
  out.lower = 2.0 / ((a + 1) * (a + 5));
  out.cbrt_branch = cbrt_branch(a);
  out.quadratic_branch = quadratic_branch(a);
  out.cbrt_branch_active = a <= alpha_star();
  out.upper = out.cbrt_branch_active ? out.cbrt_branch : out.quadratic_branch;
  out.ratio = std::sqrt(out.upper / out.lower);
  return out;
}

LimitEstimate extrapolate_c(AlphaParam alpha, std::span<const int> n_list, double tol) {
  if (n_list.size() < 3) throw std::invalid_argument("extrapolate_c: need at least 3 values of n");
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] < 1 || (i > 0 && n_list[i] <= n_list[i - 1])) {
      throw std::invalid_argument("extrapolate_c: n list must be positive and strictly increasing");
    }
  }
  if (n_list.back() > 4000) throw std::invalid_argument("extrapolate_c: n must not exceed 4000");

  LimitEstimate out{};
  out.scaled = parallel_map(n_list.size(), [&](std::size_t i) {
    const int n = n_list[i];
    return markov_constant(n, alpha, tol) / n;
  });

  auto richardson = [&](std::size_t j) {
    const double n1 = n_list[j - 1];
    const double n2 = n_list[j];
    return (n2 * out.scaled[j] - n1 * out.scaled[j - 1]) / (n2 - n1);
  };
  const std::size_t last = n_list.size() - 1;
  out.value = richardson(last);
  out.previous = richardson(last - 1);
  return out;
}

}  // namespace lmarkov
