#include "lmarkov/gamma_kernel.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lmarkov {

namespace {

// B_{2j} / (2j (2j - 1)) for j = 1..8.
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,         -1.0 / 360.0,      1.0 / 1260.0,
    -1.0 / 1680.0,      1.0 / 1188.0,      -691.0 / 360360.0,
    1.0 / 156.0,        -3617.0 / 122400.0,
};

constexpr double kHalfLogTwoPi = 0.91893853320467274178032973640562;

// Product of nu / (nu + alpha) for nu = i..k-1.
double gamma_ratio_product(int i, int k, double alpha) {
  double prod = 1.0;
  for (int nu = i; nu < k; ++nu) {
    prod *= static_cast<double>(nu) / (nu + alpha);
  }
  return prod;
}

void require_index_order(int i, int k, bool strict, const char* what) {
  if (i < 1) throw std::invalid_argument(std::string(what) + ": index i must be >= 1");
  if (strict ? i >= k : i > k) {
    throw std::invalid_argument(std::string(what) + (strict ? ": requires i < k" : ": requires i <= k"));
  }
}

}  // namespace

AlphaParam::AlphaParam(double value) : value_(value) {
  if (!std::isfinite(value) || !(value > -1.0)) {
    throw std::invalid_argument("alpha must be a finite value > -1, got " + std::to_string(value));
  }
}

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::invalid_argument("log_gamma: argument must be positive and finite");
  }
  if (x == 1.0 || x == 2.0) return 0.0;
  double shift = 1.0;
  while (x < 15.0) {
    shift *= x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv_sq = inv * inv;
  double series = 0.0;
  for (auto it = kStirling.rbegin(); it != kStirling.rend(); ++it) {
    series = series * inv_sq + *it;
  }
  series *= inv;
  const double value = (x - 0.5) * std::log(x) - x + kHalfLogTwoPi + series;
  return shift == 1.0 ? value : value - std::log(shift);
}

double log_beta_sq(int m, AlphaParam alpha) {
  if (m < 1) throw std::invalid_argument("log_beta_sq: m must be >= 1");
  if (alpha.value() == 0.0) return 0.0;
  return log_gamma(m + alpha.value()) - log_gamma(static_cast<double>(m));
}

double beta_ratio(int i, int k, AlphaParam alpha) {
  require_index_order(i, k, false, "beta_ratio");
  double prod = 1.0;
  for (int nu = i; nu < k; ++nu) {
    prod *= std::sqrt(static_cast<double>(nu) / (nu + alpha.value()));
  }
  return prod;
}

BetaTable::BetaTable(int size, AlphaParam alpha) : alpha_(alpha) {
  if (size < 1) throw std::invalid_argument("BetaTable: size must be >= 1");
  log_beta_sq_.reserve(static_cast<std::size_t>(size));
  for (int m = 1; m <= size; ++m) log_beta_sq_.push_back(lmarkov::log_beta_sq(m, alpha));
}

double BetaTable::log_beta_sq(int m) const {
  if (m < 1 || m > size()) throw std::out_of_range("BetaTable: index out of range");
  return log_beta_sq_[static_cast<std::size_t>(m - 1)];
}

double BetaTable::beta(int m) const { return std::exp(0.5 * log_beta_sq(m)); }

double lemma31_margin(int i, int k, AlphaParam alpha) {
  require_index_order(i, k, true, "lemma31_margin");
  const double a = alpha.value();
  if (a < 1.0) {
    throw std::invalid_argument("lemma31_margin: requires alpha >= 1 (use prop32_margin otherwise)");
  }
  const double lhs = gamma_ratio_product(i, k, a);
  const double half = 0.5 * (a - 1.0);
  const double rhs = std::pow((i + half) / (k + half), a);
  return rhs - lhs;
}

Prop32Margins prop32_margin(int i, int k, AlphaParam alpha) {
  require_index_order(i, k, true, "prop32_margin");
  const double a = alpha.value();
  const double ratio = gamma_ratio_product(i, k, a);
  const double power_bound = std::pow(static_cast<double>(i) / k, a);
  const double half = 0.5 * (a - 1.0);
  const double shifted_bound = std::pow((i + half) / (k + half), a);

  Prop32Margins out{};
  out.ratio = ratio;
  out.reversed = a > 0.0 && a < 1.0;
  out.outer = out.reversed ? power_bound : shifted_bound;
  out.inner = out.reversed ? shifted_bound : power_bound;
  out.outer_gap = out.outer - ratio;
  out.inner_gap = ratio - out.inner;
  return out;
}

}  // namespace lmarkov
