#include "liemech/linalg.hpp"

namespace liemech {

int svd_rank(const Eigen::MatrixXd& m, double rel_cutoff) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  // absolute floor guards numerically-zero matrices on O(1)-scale data
  if (sv.size() == 0 || sv[0] <= 1e-13) return 0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > rel_cutoff * sv[0]) ++rank;
  return rank;
}

Eigen::MatrixXd kernel_basis(const Eigen::MatrixXd& m, double rel_cutoff) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const int cols = static_cast<int>(m.cols());
  int rank = 0;
  if (sv.size() > 0 && sv[0] > 0.0)
    for (int i = 0; i < sv.size(); ++i)
      if (sv[i] > rel_cutoff * sv[0]) ++rank;
  return svd.matrixV().rightCols(cols - rank);
}

Eigen::VectorXd lsq_solve(const Eigen::MatrixXd& m, const Eigen::VectorXd& b,
                          double rel_cutoff) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(rel_cutoff);
  return svd.solve(b);
}

}  // namespace liemech
