#pragma once

#include <Eigen/Dense>

namespace liemech {

/// Matrix exponential by scaling-and-squaring with a truncated series core.
/// The argument is halved until its Frobenius norm is at most 0.5.
Eigen::MatrixXd expm(const Eigen::MatrixXd& a);

}  // namespace liemech
