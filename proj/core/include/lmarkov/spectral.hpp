#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lmarkov/dense_matrix.hpp"
#include "lmarkov/matrix_builder.hpp"

namespace lmarkov {

/// An iterative solver stopped without meeting its tolerance.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, double residual, int iterations)
      : std::runtime_error(what), residual_(residual), iterations_(iterations) {}

  double residual() const noexcept { return residual_; }
  int iterations() const noexcept { return iterations_; }

 private:
  double residual_;
  int iterations_;
};

struct SpectralResult {
  double mu_max = 0.0;
  std::vector<double> eigenvector;  ///< unit Euclidean norm, positive entries
  double residual = 0.0;            ///< ||A v - mu v||
  int iterations = 0;
};

inline constexpr double kDefaultSpectralTol = 1e-12;

/// Power iteration from the normalized all-ones vector with a Rayleigh
/// quotient estimate. Stops once ||A v - mu v|| <= tol * mu.
///
/// max_iter <= 0 selects the default of 200 n. Throws NonConvergence with the
/// last residual when the budget runs out, std::invalid_argument if tol < 1e-14.
SpectralResult mu_max_power(const MarkovMatrix& a, double tol = kDefaultSpectralTol,
                            int max_iter = 0);

/// Same iteration on an arbitrary symmetric matrix with a positive dominant
/// eigenvector.
SpectralResult power_iteration(const DenseMatrix& a, double tol, int max_iter);

struct SymmetricEigen {
  std::vector<double> values;  ///< ascending
  DenseMatrix vectors;         ///< column j pairs with values[j]; empty if not requested
};

/// Cyclic Jacobi rotations. Throws NonConvergence after max_sweeps.
SymmetricEigen jacobi_eigen(DenseMatrix a, bool want_vectors, int max_sweeps = 100);

inline constexpr int kFullSpectrumMaxOrder = 500;

/// All eigenvalues of A_n in increasing order; n <= kFullSpectrumMaxOrder.
std::vector<double> full_spectrum(const MarkovMatrix& a);

/// c_n(alpha) = sqrt(mu_max(A_n)).
double markov_constant(int n, AlphaParam alpha, double tol = kDefaultSpectralTol);

}  // namespace lmarkov
