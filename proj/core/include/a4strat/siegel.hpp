#pragma once

#include <complex>
#include <random>

#include <Eigen/Core>

#include "a4strat/symplectic.hpp"

namespace a4strat {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kSymmetryTolerance = 1e-12;
inline constexpr double kSingularDetThreshold = 1e-8;

/// A point of the Siegel upper half space: symmetric tau with Im(tau) positive definite.
class SiegelPoint {
 public:
  /// Symmetrizes and certifies the input. Throws DomainError when the matrix is not
  /// square, asymmetric beyond kSymmetryTolerance, or Im(tau) is not positive definite.
  static SiegelPoint from_matrix(const ComplexMatrix& tau);

  int genus() const noexcept { return static_cast<int>(tau_.rows()); }
  const ComplexMatrix& tau() const noexcept { return tau_; }
  Eigen::MatrixXd imag() const { return tau_.imag(); }
  double min_im_eigenvalue() const noexcept { return lambda_min_; }

 private:
  SiegelPoint(ComplexMatrix tau, double lambda_min) : tau_(std::move(tau)), lambda_min_(lambda_min) {}

  ComplexMatrix tau_;
  double lambda_min_;
};

SiegelPoint validate_siegel(const ComplexMatrix& tau);
double min_im_eigenvalue(const SiegelPoint& tau);

/// i * 1_g.
SiegelPoint scalar_point(int genus, double imaginary = 1.0);

SiegelPoint block_diag(const SiegelPoint& upper, const SiegelPoint& lower);

/// Result of (A tau + B)(C tau + D)^{-1} together with det(C tau + D).
struct SiegelActionResult {
  SiegelPoint point;
  Complex det;
};

/// Throws SingularTransformError when |det(C tau + D)| < kSingularDetThreshold.
SiegelActionResult siegel_action_with_det(const SymplecticInteger& gamma, const SiegelPoint& tau);
SiegelPoint siegel_action(const SymplecticInteger& gamma, const SiegelPoint& tau);

/// Re(tau) symmetric uniform in [-1/2, 1/2]; Im(tau) = 1_g + spread * P P^T / g with P
/// standard normal, so lambda_min >= 1.
SiegelPoint random_siegel_point(int genus, std::mt19937_64& rng, double spread = 0.3);

/// True when the off-diagonal blocks around the split after `k` rows vanish exactly.
bool is_block_split(const SiegelPoint& tau, int k, double tol = 0.0);

/// Principal submatrix rows/cols [first, first+count).
SiegelPoint sub_block(const SiegelPoint& tau, int first, int count);

}  // namespace a4strat
