#pragma once

#include "qcs/qcycle_set.hpp"
#include "qcs/solution.hpp"

namespace qcs {

  // r(x, y) = (sigma_x^{-1}(y), sigma_x^{-1}(y) : x).
  SolutionMap qcs_to_solution(QCycleSet const& X);

  // x.y = lambda_x^{-1}(y), x:y = rho_{lambda_y^{-1}(x)}(y). Throws
  // Error(not_left_nondegenerate) if some lambda_x is not a bijection and
  // Error(invalid_structure) if the resulting tables fail the axioms (which
  // happens exactly when r violates the braid relation).
  QCycleSet solution_to_qcs(SolutionMap const& s);

}  // namespace qcs
