#include "a4strat/siegel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/LU>

#include "a4strat/errors.hpp"
#include "a4strat/linalg.hpp"

namespace a4strat {

SiegelPoint SiegelPoint::from_matrix(const ComplexMatrix& tau) {
  if (tau.rows() != tau.cols() || tau.rows() == 0) {
    throw DomainError("period matrix must be square and non-empty");
  }
  const double asym = (tau - tau.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTolerance) {
    std::ostringstream msg;
    msg << "period matrix is not symmetric (max |tau - tau^T| = " << asym << ")";
    throw DomainError(msg.str());
  }
  ComplexMatrix sym = 0.5 * (tau + tau.transpose());
  const Eigen::MatrixXd im = sym.imag();
  if (!im.allFinite() || !sym.real().allFinite()) throw DomainError("period matrix has non-finite entries");

  // A positive Gershgorin bound certifies definiteness without the iteration;
  // lambda_min itself always comes from Jacobi.
  const double gershgorin = gershgorin_lower_bound(im);
  const double lambda = std::max(jacobi_eigenvalues(im).front(), gershgorin);
  if (!(lambda > 0.0)) {
    std::ostringstream msg;
    msg << "Im(tau) is not positive definite (lambda_min = " << lambda << ")";
    throw DomainError(msg.str());
  }
  return SiegelPoint(std::move(sym), lambda);
}

SiegelPoint validate_siegel(const ComplexMatrix& tau) { return SiegelPoint::from_matrix(tau); }

double min_im_eigenvalue(const SiegelPoint& tau) { return tau.min_im_eigenvalue(); }

SiegelPoint scalar_point(int genus, double imaginary) {
  if (genus < 1) throw DomainError("genus must be positive");
  return SiegelPoint::from_matrix(Complex(0.0, imaginary) * ComplexMatrix::Identity(genus, genus));
}

SiegelPoint block_diag(const SiegelPoint& upper, const SiegelPoint& lower) {
  const int g1 = upper.genus();
  const int g2 = lower.genus();
  ComplexMatrix tau = ComplexMatrix::Zero(g1 + g2, g1 + g2);
  tau.topLeftCorner(g1, g1) = upper.tau();
  tau.bottomRightCorner(g2, g2) = lower.tau();
  return SiegelPoint::from_matrix(tau);
}

SiegelActionResult siegel_action_with_det(const SymplecticInteger& gamma, const SiegelPoint& tau) {
  if (gamma.genus() != tau.genus()) throw DomainError("siegel_action: genus mismatch");
  const ComplexMatrix a = gamma.a().cast<double>().cast<Complex>();
  const ComplexMatrix b = gamma.b().cast<double>().cast<Complex>();
  const ComplexMatrix c = gamma.c().cast<double>().cast<Complex>();
  const ComplexMatrix d = gamma.d().cast<double>().cast<Complex>();

  const ComplexMatrix denom = c * tau.tau() + d;
  // X (C tau + D) = A tau + B  <=>  (C tau + D)^T X^T = (A tau + B)^T.
  Eigen::PartialPivLU<ComplexMatrix> lu(denom.transpose());
  const Complex det = lu.determinant();
  if (!(std::abs(det) >= kSingularDetThreshold)) {
    std::ostringstream msg;
    msg << "C tau + D is near-singular (|det| = " << std::abs(det) << ")";
    throw SingularTransformError(msg.str(), std::abs(det));
  }
  const ComplexMatrix numer = a * tau.tau() + b;
  const ComplexMatrix image = lu.solve(numer.transpose()).transpose();
  return SiegelActionResult{SiegelPoint::from_matrix(0.5 * (image + image.transpose())), det};
}

SiegelPoint siegel_action(const SymplecticInteger& gamma, const SiegelPoint& tau) {
  return siegel_action_with_det(gamma, tau).point;
}

SiegelPoint random_siegel_point(int genus, std::mt19937_64& rng, double spread) {
  if (genus < 1) throw DomainError("genus must be positive");
  std::uniform_real_distribution<double> uniform(-0.5, 0.5);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd re(genus, genus);
  Eigen::MatrixXd p(genus, genus);
  for (int i = 0; i < genus; ++i) {
    for (int j = i; j < genus; ++j) re(i, j) = re(j, i) = uniform(rng);
    for (int j = 0; j < genus; ++j) p(i, j) = normal(rng);
  }
  const Eigen::MatrixXd im =
      Eigen::MatrixXd::Identity(genus, genus) + (spread / genus) * (p * p.transpose());
  ComplexMatrix tau(genus, genus);
  for (int i = 0; i < genus; ++i)
    for (int j = 0; j < genus; ++j) tau(i, j) = Complex(re(i, j), im(i, j));
  return SiegelPoint::from_matrix(tau);
}

bool is_block_split(const SiegelPoint& tau, int k, double tol) {
  const int g = tau.genus();
  if (k < 1 || k >= g) return false;
  return tau.tau().topRightCorner(k, g - k).cwiseAbs().maxCoeff() <= tol;
}

SiegelPoint sub_block(const SiegelPoint& tau, int first, int count) {
  if (first < 0 || count < 1 || first + count > tau.genus()) throw DomainError("sub_block out of range");
  return SiegelPoint::from_matrix(tau.tau().block(first, first, count, count));
}

}  // namespace a4strat
