#pragma once

#include <vector>

#include "qcs/dynamical_pair.hpp"
#include "qcs/perm.hpp"
#include "qcs/qcycle_set.hpp"

namespace qcs {

  // Checks that every theta_x is an automorphism of S (Error(not_automorphism))
  // and that theta_{x.y} theta_x = theta_{y:x} theta_y for all x, y
  // (Error(compatibility_failed), witness in the message).
  void check_semidirect_data(QCycleSet const& X, QCycleSet const& S, std::vector<Perm> const& theta);

  // The pair over X with fibre S:
  //   a_{(x,y)}(s,t)  = theta_{x.y}(s) . theta_{y:x}(t)
  //   a'_{(x,y)}(s,t) = theta_{x:y}(s) : theta_{y.x}(t)
  DynamicalPair semidirect_pair(QCycleSet const& X, QCycleSet const& S, std::vector<Perm> const& theta);

  // build_extension(semidirect_pair(X, S, theta)); points (x, s) are x * |S| + s.
  QCycleSet semidirect_product(QCycleSet const& X, QCycleSet const& S, std::vector<Perm> const& theta);

}  // namespace qcs
