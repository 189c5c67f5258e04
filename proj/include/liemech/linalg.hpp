#pragma once

#include <Eigen/Dense>

namespace liemech {

/// Rank by singular values with a cutoff relative to the largest one.
int svd_rank(const Eigen::MatrixXd& m, double rel_cutoff = 1e-9);

/// Orthonormal kernel basis (columns), same relative cutoff.
Eigen::MatrixXd kernel_basis(const Eigen::MatrixXd& m,
                             double rel_cutoff = 1e-9);

/// Minimum-norm least squares solution of m x = b.
Eigen::VectorXd lsq_solve(const Eigen::MatrixXd& m, const Eigen::VectorXd& b,
                          double rel_cutoff = 1e-12);

}  // namespace liemech
