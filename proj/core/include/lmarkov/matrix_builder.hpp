#pragma once

// The upper triangular factor C_n and the Gram matrix A_n = C_n^T C_n whose
// largest eigenvalue is the squared Markov constant c_n(alpha)^2.
//
// Accessors are 0-based; entry (r, c) corresponds to the 1-based pair
// (r + 1, c + 1) in the usual a_{k,i} notation.

#include <iosfwd>
#include <utility>

#include "lmarkov/dense_matrix.hpp"
#include "lmarkov/gamma_kernel.hpp"

namespace lmarkov {

/// Entry (i, k), i <= k, holds beta_i / beta_{k+1}; entries below the
/// diagonal are zero.
class TriangularFactor {
 public:
  TriangularFactor(AlphaParam alpha, DenseMatrix entries)
      : alpha_(alpha), entries_(std::move(entries)) {}

  int n() const noexcept { return static_cast<int>(entries_.size()); }
  AlphaParam alpha() const noexcept { return alpha_; }
  double operator()(std::size_t r, std::size_t c) const { return entries_(r, c); }
  const DenseMatrix& dense() const noexcept { return entries_; }

 private:
  AlphaParam alpha_;
  DenseMatrix entries_;
};

/// Dense symmetric positive definite A_n. Immutable once built.
class MarkovMatrix {
 public:
  MarkovMatrix(AlphaParam alpha, DenseMatrix entries)
      : alpha_(alpha), entries_(std::move(entries)) {}

  int n() const noexcept { return static_cast<int>(entries_.size()); }
  AlphaParam alpha() const noexcept { return alpha_; }
  double operator()(std::size_t r, std::size_t c) const { return entries_(r, c); }
  const DenseMatrix& dense() const noexcept { return entries_; }

 private:
  AlphaParam alpha_;
  DenseMatrix entries_;
};

TriangularFactor build_c_factor(int n, AlphaParam alpha);

/// Builds A_n from its diagonal a_{k,k} = k / (alpha + 1) and the ratio
/// multipliers a_{k,i} = (beta_{i+1} / beta_{k+1}) a_{i,i} for i < k.
/// O(n^2); the explicit product C_n^T C_n is never formed.
MarkovMatrix build_a(int n, AlphaParam alpha);

double trace(const MarkovMatrix& a);

/// Maximum row sum. All entries of A_n are positive, so no absolute values.
double inf_norm(const MarkovMatrix& a);

/// Sum of squared entries, i.e. tr(A_n^2).
double frobenius_sq(const MarkovMatrix& a);

/// CSV dump with header `row,col,value`, 1-based indices, row-major,
/// 17 significant digits.
void write_matrix_csv(std::ostream& out, const MarkovMatrix& a);

}  // namespace lmarkov
