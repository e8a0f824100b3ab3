#include "lmarkov/matrix_builder.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "lmarkov/csv.hpp"

namespace lmarkov {

std::vector<double> multiply(const DenseMatrix& m, std::span<const double> x) {
  const std::size_t n = m.size();
  if (x.size() != n) throw std::invalid_argument("multiply: dimension mismatch");
  std::vector<double> y(n, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    const auto row = m.row(r);
    double acc = 0.0;
    for (std::size_t c = 0; c < n; ++c) acc += row[c] * x[c];
    y[r] = acc;
  }
  return y;
}

namespace {

void require_order(int n) {
  if (n < 1) throw std::invalid_argument("matrix order n must be >= 1");
}

// step[nu] = sqrt(nu / (nu + alpha)) = beta_nu / beta_{nu+1}, nu = 1..n (index 0 unused).
std::vector<double> one_step_ratios(int n, AlphaParam alpha) {
  std::vector<double> step(static_cast<std::size_t>(n) + 1, 1.0);
  for (int nu = 1; nu <= n; ++nu) {
    step[static_cast<std::size_t>(nu)] = std::sqrt(static_cast<double>(nu) / (nu + alpha.value()));
  }
  return step;
}

}  // namespace

TriangularFactor build_c_factor(int n, AlphaParam alpha) {
  require_order(n);
  const auto step = one_step_ratios(n, alpha);
  const auto size = static_cast<std::size_t>(n);
  DenseMatrix c(size);
  // Row i (1-based): beta_i / beta_{k+1} = prod_{nu=i}^{k} step[nu]; same
  // multiplication order as beta_ratio(i, k + 1).
  for (std::size_t i = 1; i <= size; ++i) {
    double ratio = 1.0;
    for (std::size_t k = i; k <= size; ++k) {
      ratio *= step[k];
      c(i - 1, k - 1) = ratio;
    }
  }
  return TriangularFactor(alpha, std::move(c));
}

MarkovMatrix build_a(int n, AlphaParam alpha) {
  require_order(n);
  const auto step = one_step_ratios(n, alpha);
  const auto size = static_cast<std::size_t>(n);
  const double inv_alpha1 = 1.0 / alpha.plus_one();
  DenseMatrix a(size);
  for (std::size_t i = 1; i <= size; ++i) {
    const double diag = static_cast<double>(i) * inv_alpha1;
    a(i - 1, i - 1) = diag;
    // beta_{i+1} / beta_{k+1} = prod_{nu=i+1}^{k} step[nu]
    double ratio = 1.0;
    for (std::size_t k = i + 1; k <= size; ++k) {
      ratio *= step[k];
      const double v = ratio * diag;
      a(k - 1, i - 1) = v;
      a(i - 1, k - 1) = v;
    }
  }
  return MarkovMatrix(alpha, std::move(a));
}

double trace(const MarkovMatrix& a) {
  double sum = 0.0;
  for (std::size_t k = 0; k < a.dense().size(); ++k) sum += a(k, k);
  return sum;
}

double inf_norm(const MarkovMatrix& a) {
  double best = 0.0;
  for (std::size_t k = 0; k < a.dense().size(); ++k) {
    double row_sum = 0.0;
    for (double v : a.dense().row(k)) row_sum += v;
    if (row_sum > best) best = row_sum;
  }
  return best;
}

double frobenius_sq(const MarkovMatrix& a) {
  double sum = 0.0;
  for (double v : a.dense().data()) sum += v * v;
  return sum;
}

void write_matrix_csv(std::ostream& out, const MarkovMatrix& a) {
  out << "row,col,value\n";
  const std::size_t n = a.dense().size();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      out << (r + 1) << ',' << (c + 1) << ',' << format_real(a(r, c)) << '\n';
    }
  }
}

}  // namespace lmarkov
