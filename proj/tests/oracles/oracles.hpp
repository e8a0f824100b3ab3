#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into lmarkov numerics; matrices are plain vectors of rows.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

/// ln(Gamma(m + alpha) / Gamma(m)) via std::lgamma.
inline double log_beta_sq(int m, double alpha) { return std::lgamma(m + alpha) - std::lgamma(m); }

inline double beta(int m, double alpha) { return std::exp(0.5 * log_beta_sq(m, alpha)); }

/// C_n with C(i, k) = beta_i / beta_{k+1} for i <= k (1-based), from lgamma.
inline Matrix c_factor(int n, double alpha) {
  Matrix c(n, std::vector<double>(n, 0.0));
  for (int i = 1; i <= n; ++i)
    for (int k = i; k <= n; ++k) c[i - 1][k - 1] = beta(i, alpha) / beta(k + 1, alpha);
  return c;
}

/// C^T C accumulated in long double.
inline Matrix gram(const Matrix& c) {
  const std::size_t n = c.size();
  Matrix a(n, std::vector<double>(n, 0.0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) {
      long double acc = 0.0L;
      for (std::size_t j = 0; j < n; ++j) acc += static_cast<long double>(c[j][r]) * c[j][s];
      a[r][s] = static_cast<double>(acc);
    }
  return a;
}

/// Turan's closed form c_n(0) = 1 / (2 sin(pi / (4n + 2))).
inline double turan_c(int n) { return 1.0 / (2.0 * std::sin(std::numbers::pi / (4.0 * n + 2.0))); }

/// Number of eigenvalues of the symmetric matrix a below mu, from the signs
/// of the LDL^T pivots of a - mu I (Sylvester inertia).
inline int count_below(const Matrix& a, double mu) {
  const std::size_t n = a.size();
  std::vector<std::vector<long double>> m(n, std::vector<long double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j] - (i == j ? mu : 0.0);
  int negatives = 0;
  for (std::size_t k = 0; k < n; ++k) {
    long double p = m[k][k];
    if (p == 0.0L) p = 1e-300L;
    if (p < 0) ++negatives;
    for (std::size_t i = k + 1; i < n; ++i) {
      const long double f = m[i][k] / p;
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return negatives;
}

/// Largest eigenvalue by bisection on the inertia count, inside [0, hi].
inline double largest_eigenvalue(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  double hi = 0.0;
  for (const auto& row : a) {
    double s = 0.0;
    for (double v : row) s += std::fabs(v);
    hi = std::max(hi, s);
  }
  double lo = 0.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (count_below(a, mid) == n) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Determinant by Gaussian elimination with partial pivoting.
inline long double det(std::vector<std::vector<long double>> m) {
  const std::size_t n = m.size();
  long double d = 1.0L;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::fabs(m[i][k]) > std::fabs(m[piv][k])) piv = i;
    if (m[piv][k] == 0.0L) return 0.0L;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      d = -d;
    }
    d *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const long double f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return d;
}

struct MinorSums {
  double e1, e2, e3;
};

/// Sums of the 1x1, 2x2 and 3x3 principal minors, i.e. the first three
/// elementary symmetric functions of the eigenvalues.
inline MinorSums principal_minor_sums(const Matrix& a) {
  const std::size_t n = a.size();
  long double e1 = 0, e2 = 0, e3 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    e1 += a[i][i];
    for (std::size_t j = i + 1; j < n; ++j) {
      e2 += static_cast<long double>(a[i][i]) * a[j][j] - static_cast<long double>(a[i][j]) * a[j][i];
      for (std::size_t k = j + 1; k < n; ++k) {
        const std::size_t idx[3] = {i, j, k};
        std::vector<std::vector<long double>> m(3, std::vector<long double>(3));
        for (int r = 0; r < 3; ++r)
          for (int s = 0; s < 3; ++s) m[r][s] = a[idx[r]][idx[s]];
        e3 += det(m);
      }
    }
  }
  return {static_cast<double>(e1), static_cast<double>(e2), static_cast<double>(e3)};
}

/// Partial sum of the power series of J_nu with `terms` terms, double precision.
inline double bessel_series(double nu, double x, int terms) {
  double sum = 0.0;
  for (int m = 0; m < terms; ++m) {
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    sum += sign * std::exp((2.0 * m + nu) * std::log(0.5 * x) - std::lgamma(m + 1.0) - std::lgamma(m + nu + 1.0));
  }
  return sum;
}

/// First sign change of f on (lo, hi] scanned with the given step, then
/// refined by bisection. Returns NaN when none is found.
template <class F>
double first_sign_change(F f, double lo, double hi, double step) {
  double a = lo, fa = f(a);
  for (double b = lo + step; b <= hi; b += step) {
    const double fb = f(b);
    if ((fa > 0) != (fb > 0)) {
      for (int it = 0; it < 100; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if ((fm > 0) == (fa > 0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      return 0.5 * (a + b);
    }
    a = b;
    fa = fb;
  }
  return std::nan("");
}

inline double rel_err(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

}  // namespace oracle
