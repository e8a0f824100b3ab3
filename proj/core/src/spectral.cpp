#include "lmarkov/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace lmarkov {

namespace {

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

SpectralResult power_iteration(const DenseMatrix& a, double tol, int max_iter) {
  if (!(tol >= 1e-14)) throw std::invalid_argument("power_iteration: tol must be >= 1e-14");
  const std::size_t n = a.size();
  if (n == 0) throw std::invalid_argument("power_iteration: empty matrix");
  if (max_iter <= 0) max_iter = 200 * static_cast<int>(n);

  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  double residual = std::numeric_limits<double>::infinity();
  for (int it = 0; it <= max_iter; ++it) {
    std::vector<double> w = multiply(a, v);
    const double mu = std::inner_product(v.begin(), v.end(), w.begin(), 0.0);
    double r2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = w[i] - mu * v[i];
      r2 += d * d;
    }
    residual = std::sqrt(r2);
    if (residual <= tol * mu) {
      return SpectralResult{mu, std::move(v), residual, it};
    }
    if (it == max_iter) break;
    const double wn = norm2(w);
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / wn;
  }
  throw NonConvergence("power iteration did not converge", residual, max_iter);
}

SpectralResult mu_max_power(const MarkovMatrix& a, double tol, int max_iter) {
  return power_iteration(a.dense(), tol, max_iter);
}

SymmetricEigen jacobi_eigen(DenseMatrix a, bool want_vectors, int max_sweeps) {
  const std::size_t n = a.size();
  DenseMatrix v;
  if (want_vectors) {
    v = DenseMatrix(n);
    for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;
  }

  double total = 0.0;
  for (double x : a.data()) total += x * x;
  const double eps = std::numeric_limits<double>::epsilon();
  const double target = eps * eps * total;

  double off = 0.0;
  bool converged = false;
  for (int sweep = 0; sweep <= max_sweeps; ++sweep) {
    off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off <= target) {
      converged = true;
      break;
    }
    if (sweep == max_sweeps) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::fabs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        if (want_vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const double vkp = v(k, p);
            const double vkq = v(k, q);
            v(k, p) = c * vkp - s * vkq;
            v(k, q) = s * vkp + c * vkq;
          }
        }
      }
    }
  }
  if (!converged) {
    throw NonConvergence("Jacobi eigensolver did not converge", std::sqrt(off), max_sweeps);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

  SymmetricEigen out;
  out.values.reserve(n);
  for (std::size_t j : order) out.values.push_back(a(j, j));
  if (want_vectors) {
    out.vectors = DenseMatrix(n);
    for (std::size_t col = 0; col < n; ++col)
      for (std::size_t k = 0; k < n; ++k) out.vectors(k, col) = v(k, order[col]);
  }
  return out;
}

std::vector<double> full_spectrum(const MarkovMatrix& a) {
  if (a.n() > kFullSpectrumMaxOrder) {
    throw std::invalid_argument("full_spectrum: n exceeds " + std::to_string(kFullSpectrumMaxOrder));
  }
  return jacobi_eigen(a.dense(), false).values;
}

double markov_constant(int n, AlphaParam alpha, double tol) {
  return std::sqrt(mu_max_power(build_a(n, alpha), tol).mu_max);
}

}  // namespace lmarkov
