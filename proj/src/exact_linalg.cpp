#include "qhsing/exact_linalg.hpp"

namespace qhsing {

std::vector<int> row_reduce(RatMatrix& a) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  std::vector<int> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (a(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) a.row(pivot).swap(a.row(r));
    Rat inv = Rat(1) / a(r, c);
    for (Eigen::Index j = c; j < cols; ++j) a(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rat f = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

int rank(RatMatrix a) { return static_cast<int>(row_reduce(a).size()); }

LinearSolution solve_linear(RatMatrix a, RatVector b) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  RatMatrix aug(rows, cols + 1);
  aug.leftCols(cols) = a;
  aug.col(cols) = b;
  std::vector<int> pivots = row_reduce(aug);

  LinearSolution sol;
  if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) {
    return sol;  // a row 0 = 1 appeared: inconsistent
  }
  sol.consistent = true;
  sol.unique = static_cast<Eigen::Index>(pivots.size()) == cols;
  sol.x = RatVector::Zero(cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    sol.x(pivots[i]) = aug(static_cast<Eigen::Index>(i), cols);
  }
  return sol;
}

}  // namespace qhsing
