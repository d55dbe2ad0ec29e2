#pragma once

#include <vector>

#include "qhsing/numeric.hpp"

namespace qhsing {

/// In-place reduced row echelon form over the rationals (exact, no
/// pivot-size heuristics needed). Returns the pivot column indices.
std::vector<int> row_reduce(RatMatrix& a);

int rank(RatMatrix a);

struct LinearSolution {
  bool consistent = false;
  bool unique = false;
  RatVector x;  // particular solution, free variables set to zero
};

LinearSolution solve_linear(RatMatrix a, RatVector b);

}  // namespace qhsing
