#pragma once

#include <cstddef>
#include <vector>

#include "qcs/perm.hpp"
#include "qcs/qcycle_set.hpp"
#include "qcs/solution.hpp"

namespace qcs {

  inline constexpr std::size_t default_group_budget = 1'000'000;

  struct GeneratorLabel {
    enum class Kind { sigma, delta, lambda, eta, automorphism, other };
    Kind       kind;
    point_type index;

    friend bool operator==(GeneratorLabel const&, GeneratorLabel const&) = default;
  };

  // A permutation group given by labelled generators, with its full element
  // list (sorted) and orbit partition. Elements are found by breadth-first
  // multiplication by generators; more than `budget` elements throws
  // Error(budget_exceeded).
  class GenPermGroup {
   public:
    GenPermGroup(std::size_t                 degree,
                 std::vector<Perm>           generators,
                 std::vector<GeneratorLabel> labels,
                 std::size_t                 budget = default_group_budget);

    [[nodiscard]] std::size_t degree() const noexcept {
      return _degree;
    }
    [[nodiscard]] std::vector<Perm> const& generators() const noexcept {
      return _generators;
    }
    [[nodiscard]] std::vector<GeneratorLabel> const& labels() const noexcept {
      return _labels;
    }
    [[nodiscard]] std::vector<Perm> const& elements() const noexcept {
      return _elements;
    }
    [[nodiscard]] std::size_t order() const noexcept {
      return _elements.size();
    }
    // Orbits sorted by least point, each sorted.
    [[nodiscard]] std::vector<std::vector<point_type>> const& orbits()
        const noexcept {
      return _orbits;
    }
    [[nodiscard]] bool contains(Perm const& p) const;

   private:
    std::size_t                          _degree;
    std::vector<Perm>                    _generators;
    std::vector<GeneratorLabel>          _labels;
    std::vector<Perm>                    _elements;
    std::vector<std::vector<point_type>> _orbits;
  };

  // The group generated by all sigma_x and delta_x. Throws
  // Error(not_regular) if some delta_x is not a bijection.
  GenPermGroup perm_group(QCycleSet const& X,
                          std::size_t      budget = default_group_budget);

  // eta_x(y) = rho_{lambda_y^{-1}(x)}(y) for each x, as image sequences.
  // Throws Error(not_left_nondegenerate).
  std::vector<std::vector<point_type>> eta_maps(SolutionMap const& s);

  // The group generated by the lambda_x and eta_x of a left non-degenerate
  // solution; requires every eta_x to be bijective (Error(not_regular)).
  GenPermGroup lambda_eta_group(SolutionMap const& s,
                                std::size_t budget = default_group_budget);

  // The substructure on a subset closed under every sigma_x and delta_x,
  // relabelled to {0, ..., |Y| - 1} in increasing order of the original
  // points. Throws Error(not_regular) or Error(not_invariant) naming the
  // generator g and the point y with g(y) outside Y.
  QCycleSet restrict_to_invariant(QCycleSet const&              X,
                                  std::vector<point_type> const& subset);

  // The automorphism group of X (generators = all automorphisms).
  GenPermGroup automorphism_group(QCycleSet const& X);

}  // namespace qcs
