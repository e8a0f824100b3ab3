#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "lmarkov/matrix_builder.hpp"
#include "lmarkov/oracle_quadrature.hpp"
#include "lmarkov/spectral.hpp"
#include "oracles.hpp"

using namespace lmarkov;

TEST_CASE("gauss_laguerre examples") {
  const auto one = gauss_laguerre(1, AlphaParam(0.0));
  CHECK(one.nodes[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(one.weights[0] == doctest::Approx(1.0).epsilon(1e-15));

  const auto two = gauss_laguerre(2, AlphaParam(0.0));
  const double r2 = std::sqrt(2.0);
  CHECK(two.nodes[0] == doctest::Approx(2 - r2).epsilon(1e-14));
  CHECK(two.nodes[1] == doctest::Approx(2 + r2).epsilon(1e-14));
  CHECK(two.weights[0] == doctest::Approx((2 + r2) / 4).epsilon(1e-14));
  CHECK(two.weights[1] == doctest::Approx((2 - r2) / 4).epsilon(1e-14));

  for (int m : {1, 5, 40, 150, 300}) {
    const auto rule = gauss_laguerre(m, AlphaParam(1.0));
    CHECK(std::accumulate(rule.weights.begin(), rule.weights.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(gauss_laguerre(0, AlphaParam(0.0)), std::invalid_argument);
  CHECK_THROWS_AS(gauss_laguerre(301, AlphaParam(0.0)), std::invalid_argument);
}

TEST_CASE("gauss_laguerre integrates moments exactly up to degree 2m-1") {
  for (double a : {-0.5, 0.0, 1.0, 2.0, 10.0}) {
    for (int m : {3, 10, 25}) {
      const auto rule = gauss_laguerre(m, AlphaParam(a));
      for (int k = 0; k <= 2 * m - 1; k += 3) {
        long double sum = 0;
        for (int j = 0; j < m; ++j) sum += rule.weights[j] * std::pow(static_cast<long double>(rule.nodes[j]), k);
        const double want = std::lgamma(a + k + 1);
        CHECK(std::fabs(std::log(static_cast<double>(sum)) - want) <= 1e-11 * std::max(1.0, want));
      }
    }
  }
}

TEST_CASE("nodes ascend with positive nodes and weights") {
  for (double a : {-0.5, 3.0}) {
    const auto rule = gauss_laguerre(30, AlphaParam(a));
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      CHECK(rule.nodes[j] > 0.0);
      CHECK(rule.weights[j] > 0.0);
      if (j > 0) CHECK(rule.nodes[j - 1] < rule.nodes[j]);
    }
  }
}

TEST_CASE("laguerre_eval examples") {
  for (double x : {0.0, 0.7, 5.0}) CHECK(laguerre_eval(0, AlphaParam(1.5), x) == 1.0);
  CHECK(laguerre_eval(1, AlphaParam(0.0), 1.0) == 0.0);
  CHECK(laguerre_eval(2, AlphaParam(0.0), 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(laguerre_eval(-1, AlphaParam(0.0), 1.0), std::invalid_argument);
}

TEST_CASE("laguerre_eval against std::assoc_laguerre for integer alpha") {
  for (unsigned a : {0u, 1u, 3u}) {
    for (unsigned m : {1u, 4u, 12u}) {
      for (double x : {0.1, 1.0, 6.5, 20.0}) {
        const double want = std::assoc_laguerre(m, a, x);
        CHECK(laguerre_eval(m, AlphaParam(a), x) == doctest::Approx(want).epsilon(1e-11).scale(1.0));
      }
    }
  }
}

TEST_CASE("expansion_eval examples") {
  for (double a : {-0.5, 2.0}) {
    const LaguerreExpansion l1{AlphaParam(a), {1.0}};
    for (double x : {0.0, 1.5, 7.0}) CHECK(expansion_eval(l1, x, true) == doctest::Approx(-1.0).epsilon(1e-15));

    const LaguerreExpansion zero{AlphaParam(a), {0.0, 0.0, 0.0}};
    CHECK(expansion_eval(zero, 2.0, false) == 0.0);
    CHECK(expansion_eval(zero, 2.0, true) == 0.0);

    for (double x : {0.5, 1.0, 3.0}) {
      const auto l = laguerre_all(2, AlphaParam(a), x);
      CHECK(laguerre_eval(2, AlphaParam(a + 1), x) == doctest::Approx(l[0] + l[1] + l[2]).epsilon(1e-14));
    }
  }
}

TEST_CASE("derivative matches a central difference") {
  const LaguerreExpansion p{AlphaParam(0.7), {0.3, -1.2, 0.5, 2.0}};
  for (double x : {0.4, 2.0, 9.0}) {
    const double h = 1e-5;
    const double fd = (expansion_eval(p, x + h, false) - expansion_eval(p, x - h, false)) / (2 * h);
    CHECK(expansion_eval(p, x, true) == doctest::Approx(fd).epsilon(1e-7).scale(1.0));
  }
}

TEST_CASE("orthogonality under quadrature") {
  for (double a : {-0.5, 0.0, 1.0, 2.0, 10.0}) {
    const auto rule = gauss_laguerre(15, AlphaParam(a));
    for (int m = 0; m <= 10; ++m) {
      for (int mp = 0; mp <= 10; ++mp) {
        double sum = 0;
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
          sum += rule.weights[j] * laguerre_eval(m, AlphaParam(a), rule.nodes[j]) *
                 laguerre_eval(mp, AlphaParam(a), rule.nodes[j]);
        }
        const double norm_m = std::exp(0.5 * oracle::log_beta_sq(m + 1, a));
        const double norm_mp = std::exp(0.5 * oracle::log_beta_sq(mp + 1, a));
        INFO("alpha=" << a << " m=" << m << " m'=" << mp);
        if (m == mp) {
          CHECK(oracle::rel_err(sum, norm_m * norm_m) <= 1e-9);
        } else {
          CHECK(std::fabs(sum) / (norm_m * norm_mp) <= 1e-9);
          if (a <= 2.0) CHECK(std::fabs(sum) <= 1e-9);
        }
      }
    }
  }
}

TEST_CASE("parseval and the L_1 Rayleigh quotient") {
  for (double a : {-0.5, 0.0, 3.0}) {
    const LaguerreExpansion l1{AlphaParam(a), {1.0}};
    CHECK(parseval_norm_sq(l1) == doctest::Approx(std::tgamma(a + 2)).epsilon(1e-13));
    CHECK(rayleigh_quotient(l1, 2) == doctest::Approx(1.0 / (a + 1)).epsilon(1e-12));
  }
  const LaguerreExpansion zero{AlphaParam(1.0), {0.0, 0.0}};
  CHECK_THROWS_AS(rayleigh_quotient(zero, 5), std::invalid_argument);
  const LaguerreExpansion cubic{AlphaParam(1.0), {1.0, 1.0, 1.0}};
  CHECK_THROWS_AS(rayleigh_quotient(cubic, 3), std::invalid_argument);
}

TEST_CASE("extremal_from_eigenvector examples") {
  for (double a : {-0.5, 4.0}) {
    const auto r = mu_max_power(build_a(1, AlphaParam(a)));
    const auto p = extremal_from_eigenvector(r, AlphaParam(a));
    CHECK(p.coeffs[0] == doctest::Approx(1.0 / oracle::beta(2, a)).epsilon(1e-14));
    CHECK(parseval_norm_sq(p) == doctest::Approx(1.0).epsilon(1e-14));
  }

  const auto r2 = mu_max_power(build_a(2, AlphaParam(0.0)));
  const auto p2 = extremal_from_eigenvector(r2, AlphaParam(0.0));
  CHECK(p2.coeffs[1] / p2.coeffs[0] == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-10));
  CHECK(oracle::rel_err(rayleigh_quotient(p2, 3), (3 + std::sqrt(5.0)) / 2) <= 1e-10);

  const auto r5 = mu_max_power(build_a(5, AlphaParam(3.0)));
  const auto p5 = extremal_from_eigenvector(r5, AlphaParam(3.0));
  const auto rule = gauss_laguerre(8, AlphaParam(3.0));
  double quad = 0;
  for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
    const double v = expansion_eval(p5, rule.nodes[j], false);
    quad += rule.weights[j] * v * v;
  }
  CHECK(quad == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(parseval_norm_sq(p5) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("Rayleigh quotient of the extremal polynomial equals mu_max") {
  for (double a : {-0.5, 0.0, 1.0, 2.0, 10.0}) {
    for (int n : {1, 2, 7, 20, 35, 50}) {
      const auto r = mu_max_power(build_a(n, AlphaParam(a)));
      const auto p = extremal_from_eigenvector(r, AlphaParam(a));
      INFO("alpha=" << a << " n=" << n);
      CHECK(oracle::rel_err(rayleigh_quotient(p, n + 1), r.mu_max) <= 1e-8);
    }
  }
}

TEST_CASE("random expansions never beat mu_max") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss;
  const int n = 10;
  for (double a : {-0.5, 2.0}) {
    const double mu = mu_max_power(build_a(n, AlphaParam(a))).mu_max;
    const auto rule = gauss_laguerre(n + 1, AlphaParam(a));
    for (int t = 0; t < 100; ++t) {
      LaguerreExpansion p{AlphaParam(a), std::vector<double>(n)};
      for (auto& c : p.coeffs) c = gauss(rng);
      CHECK(rayleigh_quotient(p, rule) <= mu + 1e-8);
    }
  }
}

TEST_CASE("expansion CSV dump") {
  const LaguerreExpansion p{AlphaParam(0.0), {0.5, -2.0}};
  std::ostringstream out;
  write_expansion_csv(out, p);
  CHECK(out.str() == "nu,coefficient\n1,0.5\n2,-2\n");
}
