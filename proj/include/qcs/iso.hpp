#pragma once

#include <optional>
#include <vector>

#include "qcs/perm.hpp"
#include "qcs/qcycle_set.hpp"

namespace qcs {

  // A relabelling pi with pi(x.y) = pi(x).pi(y) and pi(x:y) = pi(x):pi(y),
  // or nullopt if X and Y are not isomorphic. The search is exact
  // backtracking restricted to points with equal invariants (cycle type of
  // sigma_x, image/fixed-point profile of delta_x, squaring-map data).
  std::optional<Perm> are_isomorphic(QCycleSet const& X, QCycleSet const& Y);

  // Every automorphism of X, sorted by image sequence.
  std::vector<Perm> automorphisms(QCycleSet const& X);

  // The least relabelling of X in "block order": the cells of the relabelled
  // tables are compared in the order they become determined as labels
  // 0, 1, 2, ... are placed, i.e. for label k the cells
  //   dot(j,k), dot(k,j), colon(j,k), colon(k,j) for j < k, then
  //   dot(k,k), colon(k,k).
  // X and Y are isomorphic iff canonical_form(X) == canonical_form(Y).
  // Cost is at most n! leaves; rigid structures prune far earlier.
  QCycleSet canonical_form(QCycleSet const& X);

  // Per-point isomorphism invariants used to prune the searches above.
  std::vector<std::vector<std::size_t>> point_invariants(QCycleSet const& X);

}  // namespace qcs
