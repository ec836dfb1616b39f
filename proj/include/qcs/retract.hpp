#pragma once

#include <cstddef>
#include <vector>

#include "qcs/qcycle_set.hpp"
#include "qcs/solution.hpp"

namespace qcs {

  // Quotient of X by a partition given as point -> class index (classes
  // numbered 0..k-1). The class tables are read off arbitrary
  // representatives and then re-checked: every representative choice must
  // agree and the result must pass verify_qcycle, otherwise
  // Error(quotient_not_qcycle_set) names the offending witness.
  QCycleSet quotient_by(QCycleSet const&              X,
                        std::vector<point_type> const& class_of);

  struct RetractQuotient {
    std::vector<std::vector<point_type>> classes;
    QCycleSet                            quotient;
    std::vector<point_type>              class_of;
  };

  // Classes of x ~ y iff sigma_x = sigma_y and delta_x = delta_y, numbered
  // by least representative. Throws Error(not_regular) or
  // Error(quotient_not_qcycle_set).
  RetractQuotient retract(QCycleSet const& X);

  struct RetractTower {
    std::vector<QCycleSet> levels;  // levels[0] is the input
    bool                   stabilized    = false;
    bool                   irretractable = false;
  };

  // Applies retract until the size stops shrinking or max_steps quotients
  // have been taken.
  RetractTower retract_tower(QCycleSet const& X, std::size_t max_steps);

  // The induced solution on retract classes,
  //   rbar(xbar, ybar) = (class of lambda_x(y), class of lambda_x(y) : x).
  // Requires s bijective and (left and right) non-degenerate, else
  // Error(not_nondegenerate); Error(ill_defined) if some representative
  // choice disagrees.
  SolutionMap retract_solution(SolutionMap const& s);

  // Whether the retract relation of solution_to_qcs(s) equals
  // {(x, y) : lambda_x = lambda_y and rho_x = rho_y}. Same preconditions as
  // retract_solution.
  bool retract_matches_lambda_rho(SolutionMap const& s);

  // x ~ y iff sigma_x = sigma_y and delta_x = delta_y, as class indices
  // numbered by least representative. No regularity requirement.
  std::vector<point_type> retract_classes(QCycleSet const& X);

  // Whether a partition (point -> class) is compatible with both operations.
  bool is_congruence(QCycleSet const& X, std::vector<point_type> const& class_of);

}  // namespace qcs
