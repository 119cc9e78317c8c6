#include "a4strat/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "a4strat/errors.hpp"

namespace a4strat {

std::vector<double> jacobi_eigenvalues(const Eigen::MatrixXd& symmetric, double rel_tol, int max_sweeps) {
  if (symmetric.rows() != symmetric.cols()) throw DomainError("jacobi_eigenvalues needs a square matrix");
  Eigen::MatrixXd a = 0.5 * (symmetric + symmetric.transpose());
  const Eigen::Index n = a.rows();

  auto off_norm = [&] {
    double s = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
    return std::sqrt(2.0 * s);
  };
  const double scale = std::max(a.norm(), 1e-300);

  for (int sweep = 0; sweep < max_sweeps && off_norm() > rel_tol * scale; ++sweep) {
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Rotation annihilating a(p, q); the smaller root for t keeps it stable.
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }

  std::vector<double> eig(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = a(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

double gershgorin_lower_bound(const Eigen::MatrixXd& symmetric) {
  double bound = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < symmetric.rows(); ++i) {
    double radius = 0.0;
    for (Eigen::Index j = 0; j < symmetric.cols(); ++j)
      if (j != i) radius += std::abs(symmetric(i, j));
    bound = std::min(bound, symmetric(i, i) - radius);
  }
  return bound;
}

}  // namespace a4strat
