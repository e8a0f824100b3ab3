#pragma once

// Closed-form bounds on c_n(alpha)^2. Every id is normalized to bound the
// square of the Markov constant, so all values share one comparison scale.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lmarkov/gamma_kernel.hpp"

namespace lmarkov {

enum class BoundId {
  turan_exact,
  dorfler_lower,
  dorfler_upper,
  theoremA_lower,
  theoremA_upper,
  theorem11_upper,
  cor12_lower,
  cor12_upper,
  frob_upper,
  newton_lower,
  simple_upper,
  simple_lower,
};

inline constexpr std::array<BoundId, 12> kAllBoundIds = {
    BoundId::turan_exact,    BoundId::dorfler_lower, BoundId::dorfler_upper,
    BoundId::theoremA_lower, BoundId::theoremA_upper, BoundId::theorem11_upper,
    BoundId::cor12_lower,    BoundId::cor12_upper,   BoundId::frob_upper,
    BoundId::newton_lower,   BoundId::simple_upper,  BoundId::simple_lower,
};

enum class BoundSide { lower, upper, exact };

std::string_view to_string(BoundId id);
/// Throws std::invalid_argument for an unknown name.
BoundId parse_bound_id(std::string_view name);
BoundSide bound_side(BoundId id);
/// Human-readable hypothesis under which the bound is proved.
std::string_view bound_hypothesis(BoundId id);

struct BoundEvaluation {
  double value;
  bool applicable;
};

/// Value of the bound on c_n(alpha)^2 plus whether (n, alpha) satisfies its
/// hypotheses. The value is computed even when the bound is inapplicable.
BoundEvaluation evaluate_bound(BoundId id, int n, AlphaParam alpha);

/// First three characteristic-polynomial coefficients of A_n:
/// b1 = sum mu_i, b2 = sum_{i<j} mu_i mu_j, b3 = sum_{i<j<k} mu_i mu_j mu_k.
struct CharPolyCoeffs {
  double b1;
  double b2;
  double b3;
};

CharPolyCoeffs charpoly_coeffs(int n, AlphaParam alpha);

struct BoundEntry {
  BoundId id;
  double value;
  bool applicable;
  std::string hypothesis;
};

struct BoundsReport {
  int n;
  AlphaParam alpha;
  std::vector<BoundEntry> entries;  ///< one per id, in kAllBoundIds order
  std::optional<double> computed_c_sq;
  bool sandwich_ok = true;
  std::vector<std::string> violations;

  const BoundEntry& at(BoundId id) const;
};

/// Relative slack used when checking computed c^2 against closed-form bounds.
inline constexpr double kSandwichTolerance = 1e-12;
/// turan_exact must agree with the computed value this closely (relative).
inline constexpr double kExactTolerance = 1e-10;

/// Evaluates all twelve ids. With include_computed, attaches c^2 from the
/// spectral solver and checks every applicable lower <= c^2 <= upper;
/// violations are listed, not thrown. Spectral failures propagate.
BoundsReport bounds_report(int n, AlphaParam alpha, bool include_computed,
                           double tol = 1e-12);

}  // namespace lmarkov
