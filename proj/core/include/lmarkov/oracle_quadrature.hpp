#pragma once

// Independent check of the eigenvalue route: rebuild the extremal polynomial
// from the dominant eigenvector and measure ||p'||^2 / ||p||^2 in the
// weighted norm with Gauss-Laguerre quadrature. Nothing here reads A_n.

#include <iosfwd>
#include <vector>

#include "lmarkov/gamma_kernel.hpp"
#include "lmarkov/spectral.hpp"

namespace lmarkov {

struct QuadratureRule {
  AlphaParam alpha;
  std::vector<double> nodes;    ///< ascending
  std::vector<double> weights;
};

/// Golub-Welsch rule with m nodes for t^alpha e^{-t} on (0, inf), 1 <= m <= 300.
///
/// Nodes are the eigenvalues of the symmetric tridiagonal Jacobi matrix
/// (diagonal 2j + alpha + 1, off-diagonal sqrt(j (j + alpha))), polished by
/// Newton steps on the three-term recurrence. The weight of a node is
/// Gamma(alpha + 1) times the squared first component of its unit
/// eigenvector; that eigenvector is rebuilt from the recurrence at the node
/// so tiny weights keep full relative accuracy.
QuadratureRule gauss_laguerre(int m, AlphaParam alpha);

/// L_m^{(alpha)}(x) by forward recurrence.
double laguerre_eval(int m, AlphaParam alpha, double x);

/// L_0^{(alpha)}(x), ..., L_{m_max}^{(alpha)}(x).
std::vector<double> laguerre_all(int m_max, AlphaParam alpha, double x);

/// p = sum_{nu=1}^{n} a_nu L_nu^{(alpha)}; coeffs[0] holds a_1. No constant term.
struct LaguerreExpansion {
  AlphaParam alpha;
  std::vector<double> coeffs;

  int degree() const noexcept { return static_cast<int>(coeffs.size()); }
};

/// p(x), or p'(x) = -sum a_nu L_{nu-1}^{(alpha+1)}(x) when derivative is set.
double expansion_eval(const LaguerreExpansion& p, double x, bool derivative);

/// ||p||^2 by orthogonality: sum a_nu^2 beta_{nu+1}^2.
double parseval_norm_sq(const LaguerreExpansion& p);

/// Quadrature ratio ||p'||^2 / ||p||^2 using rule_size >= degree + 1 nodes.
/// Throws std::invalid_argument for the zero polynomial.
double rayleigh_quotient(const LaguerreExpansion& p, int rule_size);

/// Same ratio on a prebuilt rule (must be exact to degree 2n).
double rayleigh_quotient(const LaguerreExpansion& p, const QuadratureRule& rule);

/// a_nu = t_nu / beta_{nu+1} from the unit eigenvector t of A_n.
LaguerreExpansion extremal_from_eigenvector(const SpectralResult& result, AlphaParam alpha);

/// CSV dump with header `nu,coefficient`, 17 significant digits.
void write_expansion_csv(std::ostream& out, const LaguerreExpansion& p);

}  // namespace lmarkov
