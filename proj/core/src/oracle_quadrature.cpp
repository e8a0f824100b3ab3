#include "lmarkov/oracle_quadrature.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "lmarkov/csv.hpp"

namespace lmarkov {

namespace {

constexpr double kRescale = 1e100;
const double kLogRescale = std::log(kRescale);

struct RecurrenceAt {
  double log_sum_sq;  ///< ln sum_{j<m} p_j(x)^2 for the orthonormal p_j
  double pm;          ///< p_m(x), scaled
  double dpm;         ///< p_m'(x), same scaling as pm
};

// Orthonormal recurrence for the normalized Laguerre measure:
//   b_{j+1} p_{j+1} = (x - a_j) p_j - b_j p_{j-1},  a_j = 2j + alpha + 1,
//   b_j = sqrt(j (j + alpha)), p_0 = 1.
// Values are rescaled together whenever they grow past 1e100.
RecurrenceAt recurrence_at(int m, double alpha, double x) {
  double p_prev = 0.0, p = 1.0;
  double d_prev = 0.0, d = 0.0;
  double sum = 0.0;
  double log_scale = 0.0;
  for (int j = 0; j < m; ++j) {
    sum += p * p;
    const double aj = 2.0 * j + alpha + 1.0;
    const double bj = std::sqrt(j * (j + alpha));
    const double bj1 = std::sqrt((j + 1.0) * (j + 1.0 + alpha));
    const double p_next = ((x - aj) * p - bj * p_prev) / bj1;
    const double d_next = ((x - aj) * d + p - bj * d_prev) / bj1;
    p_prev = p;
    p = p_next;
    d_prev = d;
    d = d_next;
    if (std::fabs(p) > kRescale || std::fabs(d) > kRescale) {
      p_prev /= kRescale;
      p /= kRescale;
      d_prev /= kRescale;
      d /= kRescale;
      sum /= kRescale * kRescale;
      log_scale += kLogRescale;
    }
  }
  return {std::log(sum) + 2.0 * log_scale, p, d};
}

}  // namespace

QuadratureRule gauss_laguerre(int m, AlphaParam alpha) {
  if (m < 1 || m > 300) throw std::invalid_argument("gauss_laguerre: requires 1 <= m <= 300");
  const double a = alpha.value();
  const auto size = static_cast<std::size_t>(m);

  DenseMatrix jacobi(size);
  for (std::size_t j = 0; j < size; ++j) {
    jacobi(j, j) = 2.0 * static_cast<double>(j) + a + 1.0;
    if (j > 0) {
      const double off = std::sqrt(static_cast<double>(j) * (static_cast<double>(j) + a));
      jacobi(j - 1, j) = off;
      jacobi(j, j - 1) = off;
    }
  }
  std::vector<double> nodes = jacobi_eigen(std::move(jacobi), false).values;

  const double log_mu0 = log_gamma(alpha.plus_one());
  std::vector<double> weights(size);
  for (std::size_t j = 0; j < size; ++j) {
    double x = nodes[j];
    for (int step = 0; step < 3; ++step) {
      const auto r = recurrence_at(m, a, x);
      if (r.dpm == 0.0) break;
      const double dx = r.pm / r.dpm;
      // A Newton step larger than this would mean the eigenvalue was poor;
      // keep the eigenvalue instead of risking a jump to another root.
      if (!(std::fabs(dx) <= 1e-6 * (1.0 + x))) break;
      x -= dx;
      if (std::fabs(dx) <= 1e-16 * x) break;
    }
    nodes[j] = x;
    weights[j] = std::exp(log_mu0 - recurrence_at(m, a, x).log_sum_sq);
  }
  return QuadratureRule{alpha, std::move(nodes), std::move(weights)};
}

std::vector<double> laguerre_all(int m_max, AlphaParam alpha, double x) {
  if (m_max < 0) throw std::invalid_argument("laguerre_all: m_max must be >= 0");
  const double a = alpha.value();
  std::vector<double> out(static_cast<std::size_t>(m_max) + 1);
  out[0] = 1.0;
  if (m_max >= 1) out[1] = 1.0 + a - x;
  for (int k = 1; k < m_max; ++k) {
    const auto i = static_cast<std::size_t>(k);
    out[i + 1] = ((2.0 * k + 1.0 + a - x) * out[i] - (k + a) * out[i - 1]) / (k + 1.0);
  }
  return out;
}

double laguerre_eval(int m, AlphaParam alpha, double x) {
  if (m < 0) throw std::invalid_argument("laguerre_eval: m must be >= 0");
  return laguerre_all(m, alpha, x).back();
}

double expansion_eval(const LaguerreExpansion& p, double x, bool derivative) {
  const int n = p.degree();
  if (n == 0) return 0.0;
  double sum = 0.0;
  if (derivative) {
    const auto l = laguerre_all(n - 1, AlphaParam(p.alpha.value() + 1.0), x);
    for (int nu = 1; nu <= n; ++nu) sum -= p.coeffs[nu - 1] * l[nu - 1];
  } else {
    const auto l = laguerre_all(n, p.alpha, x);
    for (int nu = 1; nu <= n; ++nu) sum += p.coeffs[nu - 1] * l[nu];
  }
  return sum;
}

double parseval_norm_sq(const LaguerreExpansion& p) {
  double sum = 0.0;
  for (int nu = 1; nu <= p.degree(); ++nu) {
    const double a = p.coeffs[nu - 1];
    sum += a * a * std::exp(log_beta_sq(nu + 1, p.alpha));
  }
  return sum;
}

double rayleigh_quotient(const LaguerreExpansion& p, const QuadratureRule& rule) {
  if (static_cast<int>(rule.nodes.size()) < p.degree() + 1) {
    throw std::invalid_argument("rayleigh_quotient: rule too small for exact integration");
  }
  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
    const double v = expansion_eval(p, rule.nodes[j], false);
    const double d = expansion_eval(p, rule.nodes[j], true);
    num += rule.weights[j] * d * d;
    den += rule.weights[j] * v * v;
  }
  if (den == 0.0) throw std::invalid_argument("rayleigh_quotient: zero polynomial");
  return num / den;
}

double rayleigh_quotient(const LaguerreExpansion& p, int rule_size) {
  if (rule_size < p.degree() + 1) {
    throw std::invalid_argument("rayleigh_quotient: rule_size must be >= degree + 1");
  }
  return rayleigh_quotient(p, gauss_laguerre(rule_size, p.alpha));
}

LaguerreExpansion extremal_from_eigenvector(const SpectralResult& result, AlphaParam alpha) {
  const int n = static_cast<int>(result.eigenvector.size());
  if (n == 0) throw std::invalid_argument("extremal_from_eigenvector: empty eigenvector");
  const BetaTable betas(n + 1, alpha);
  LaguerreExpansion p{alpha, std::vector<double>(static_cast<std::size_t>(n))};
  for (int nu = 1; nu <= n; ++nu) {
    p.coeffs[nu - 1] = result.eigenvector[nu - 1] * std::exp(-0.5 * betas.log_beta_sq(nu + 1));
  }
  return p;
}

void write_expansion_csv(std::ostream& out, const LaguerreExpansion& p) {
  out << "nu,coefficient\n";
  for (int nu = 1; nu <= p.degree(); ++nu) {
    out << nu << ',' << format_real(p.coeffs[nu - 1]) << '\n';
  }
}

}  // namespace lmarkov
