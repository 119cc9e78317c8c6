#pragma once

#include <vector>

#include <Eigen/Core>

namespace a4strat {

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, ascending.
/// Intended for the small (g <= 8) matrices met here.
std::vector<double> jacobi_eigenvalues(const Eigen::MatrixXd& symmetric, double rel_tol = 1e-14,
                                       int max_sweeps = 100);

/// min_i (a_ii - sum_{j != i} |a_ij|).
double gershgorin_lower_bound(const Eigen::MatrixXd& symmetric);

}  // namespace a4strat
