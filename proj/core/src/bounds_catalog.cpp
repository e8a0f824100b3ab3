#include "lmarkov/bounds_catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lmarkov/csv.hpp"
#include "lmarkov/spectral.hpp"

namespace lmarkov {

namespace {

struct BoundInfo {
  BoundId id;
  std::string_view name;
  BoundSide side;
  std::string_view hypothesis;
};

constexpr std::array<BoundInfo, 12> kInfo = {{
    {BoundId::turan_exact, "turan_exact", BoundSide::exact, "alpha = 0"},
    {BoundId::dorfler_lower, "dorfler_lower", BoundSide::lower, "alpha > -1, n >= 1"},
    {BoundId::dorfler_upper, "dorfler_upper", BoundSide::upper, "alpha > -1, n >= 1"},
    {BoundId::theoremA_lower, "theoremA_lower", BoundSide::lower, "n >= 3, n > (alpha+1)/6"},
    {BoundId::theoremA_upper, "theoremA_upper", BoundSide::upper, "n >= 3"},
    {BoundId::theorem11_upper, "theorem11_upper", BoundSide::upper, "alpha >= 2, n >= 3"},
    {BoundId::cor12_lower, "cor12_lower", BoundSide::lower, "alpha >= 2, n >= 3"},
    {BoundId::cor12_upper, "cor12_upper", BoundSide::upper, "alpha >= 2, n >= 3"},
    {BoundId::frob_upper, "frob_upper", BoundSide::upper, "alpha > -1, n >= 1"},
    {BoundId::newton_lower, "newton_lower", BoundSide::lower, "alpha > -1, n >= 1"},
    {BoundId::simple_upper, "simple_upper", BoundSide::upper, "n >= 3"},
    {BoundId::simple_lower, "simple_lower", BoundSide::lower, "n >= 3"},
}};

const BoundInfo& info(BoundId id) {
  for (const auto& entry : kInfo) {
    if (entry.id == id) return entry;
  }
  throw std::invalid_argument("unknown bound id");
}

// Dorfler's lower bound; identical algebraically to b1 - 2 b2 / b1.
double dorfler_lower_value(double n, double a) {
  return n * n / ((a + 1) * (a + 3)) +
         (2 * a * a + 5 * a + 6) * n / (3 * (a + 1) * (a + 2) * (a + 3)) +
         (a + 6) / (3 * (a + 2) * (a + 3));
}

}  // namespace

std::string_view to_string(BoundId id) { return info(id).name; }

BoundId parse_bound_id(std::string_view name) {
  for (const auto& entry : kInfo) {
    if (entry.name == name) return entry.id;
  }
  throw std::invalid_argument("unknown bound id: " + std::string(name));
}

BoundSide bound_side(BoundId id) { return info(id).side; }

std::string_view bound_hypothesis(BoundId id) { return info(id).hypothesis; }

CharPolyCoeffs charpoly_coeffs(int n, AlphaParam alpha) {
  if (n < 1) throw std::invalid_argument("charpoly_coeffs: n must be >= 1");
  const double a = alpha.value();
  const double a1 = alpha.plus_one();
  const double m = n;
  CharPolyCoeffs c{};
  c.b1 = m * (m + 1) / (2 * a1);
  c.b2 = (m - 1) * m * (m + 1) / (24 * a1 * (a + 2) * (a + 3)) * (3 * (a + 2) * m + 2 * (a + 6));
  c.b3 = (m - 2) * (m - 1) * m * (m + 1) *
         (5 * (a + 2) * (a + 4) * m * (m + 1) + 8 * (7 * a + 20) * m + 12 * (a + 20)) /
         (240 * a1 * (a + 2) * (a + 3) * (a + 4) * (a + 5));
  if (n < 3) c.b3 = 0.0;
  if (n < 2) c.b2 = 0.0;
  return c;
}

BoundEvaluation evaluate_bound(BoundId id, int n, AlphaParam alpha) {
  if (n < 1) throw std::invalid_argument("evaluate_bound: n must be >= 1");
  const double a = alpha.value();
  const double a1 = alpha.plus_one();
  const double m = n;
  const bool n_ge3 = n >= 3;

  switch (id) {
    case BoundId::turan_exact: {
      const double c = 1.0 / (2.0 * std::sin(std::numbers::pi / (4.0 * m + 2.0)));
      return {c * c, a == 0.0};
    }
    case BoundId::dorfler_lower:
      return {dorfler_lower_value(m, a), true};
    case BoundId::dorfler_upper:
      return {m * (m + 1) / (2 * a1), true};
    case BoundId::theoremA_lower:
      return {2 * (m + 2 * a / 3) * (m - a1 / 6) / (a1 * (a + 5)), n_ge3 && m > a1 / 6};
    case BoundId::theoremA_upper:
      return {(m + 1) * (m + 2 * a1 / 5) / (a1 * std::cbrt((a + 3) * (a + 5))), n_ge3};
    case BoundId::theorem11_upper:
      return {4 * (m + 1) * (m + 3 + 3 * a1 / 4) / (a * a + 10 * a + 8), n_ge3 && a >= 2};
    case BoundId::cor12_lower:
      return {(m + 1) * (m + a + 4) / (2 * a1 * (a + 8)), n_ge3 && a >= 2};
    case BoundId::cor12_upper:
      return {4 * (m + 1) * (m + a + 4) / (a1 * (a + 8)), n_ge3 && a >= 2};
    case BoundId::frob_upper: {
      const auto b = charpoly_coeffs(n, alpha);
      return {std::sqrt(b.b1 * b.b1 - 2 * b.b2), true};
    }
    case BoundId::newton_lower: {
      const auto b = charpoly_coeffs(n, alpha);
      return {b.b1 - 2 * b.b2 / b.b1, true};
    }
    case BoundId::simple_upper:
      return {(m + 1) * std::sqrt(m * (m + 2 * a1 / 3)) / (a1 * std::sqrt(2 * (a + 3))), n_ge3};
    case BoundId::simple_lower: {
      double shift;
      if (a < 0) {
        shift = 7.0 / 8.0;
      } else if (a <= 1) {
        shift = 1.0;
      } else {
        shift = (2 * a + 1) / 3;
      }
      return {m * (m + shift) / (a1 * (a + 3)), n_ge3};
    }
  }
  throw std::invalid_argument("evaluate_bound: unknown bound id");
}

const BoundEntry& BoundsReport::at(BoundId id) const {
  for (const auto& e : entries) {
    if (e.id == id) return e;
  }
  throw std::out_of_range("BoundsReport: id not present");
}

BoundsReport bounds_report(int n, AlphaParam alpha, bool include_computed, double tol) {
  BoundsReport report{n, alpha, {}, std::nullopt, true, {}};
  report.entries.reserve(kAllBoundIds.size());
  for (BoundId id : kAllBoundIds) {
    const auto ev = evaluate_bound(id, n, alpha);
    report.entries.push_back({id, ev.value, ev.applicable, std::string(bound_hypothesis(id))});
  }

  auto flag = [&](std::string msg) {
    report.sandwich_ok = false;
    report.violations.push_back(std::move(msg));
  };

  for (const auto& lo : report.entries) {
    if (!lo.applicable || bound_side(lo.id) == BoundSide::upper) continue;
    for (const auto& hi : report.entries) {
      if (!hi.applicable || bound_side(hi.id) == BoundSide::lower || &lo == &hi) continue;
      const double slack = kSandwichTolerance * std::max(1.0, std::fabs(hi.value));
      if (lo.value > hi.value + slack) {
        flag(std::string(to_string(lo.id)) + " > " + std::string(to_string(hi.id)));
      }
    }
  }

  if (include_computed) {
    const double c_sq = mu_max_power(build_a(n, alpha), tol).mu_max;
    report.computed_c_sq = c_sq;
    for (const auto& e : report.entries) {
      if (!e.applicable) continue;
      const double scale = std::max(1.0, std::fabs(e.value));
      const auto side = bound_side(e.id);
      bool ok = true;
      if (side == BoundSide::exact) {
        ok = std::fabs(e.value - c_sq) <= kExactTolerance * scale;
      } else if (side == BoundSide::lower) {
        ok = e.value <= c_sq + kSandwichTolerance * scale;
      } else {
        ok = c_sq <= e.value + kSandwichTolerance * scale;
      }
      if (!ok) {
        flag(std::string(to_string(e.id)) + " violated: bound " + format_real(e.value) +
             " vs computed " + format_real(c_sq));
      }
    }
  }
  return report;
}

}  // namespace lmarkov
