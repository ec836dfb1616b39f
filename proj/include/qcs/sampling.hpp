#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "qcs/dynamical_pair.hpp"

namespace qcs {

  // alpha rows are uniform random permutations; alpha' rows are uniform
  // random maps, or random permutations when `bijective_prime` is set.
  DynamicalPair random_pair(QCycleSet const& base,
                            std::size_t      m,
                            std::mt19937_64& rng,
                            bool             bijective_prime);

  struct PairSampleStats {
    std::size_t samples             = 0;
    std::size_t pairs_valid         = 0;  // verify_dynamical_pair ok
    std::size_t equivalence_holds   = 0;
    std::size_t regularity_checked  = 0;  // valid samples
    std::size_t regularity_holds    = 0;
    std::vector<std::size_t> failures;    // sample indices

    [[nodiscard]] bool ok() const noexcept {
      return failures.empty();
    }
  };

  // Draws `count` pairs: base uniformly from `bases`, fibre size uniform in
  // [1, max_m], alpha' bijective on every other draw. Checks
  // extension_equivalence and, on valid pairs, that the extension is
  // regular iff the base is regular and every alpha' row is a permutation.
  PairSampleStats sample_extension_equivalence(std::vector<QCycleSet> const& bases,
                                               std::size_t                   max_m,
                                               std::size_t                   count,
                                               std::uint64_t                 seed);

  bool regularity_criterion(DynamicalPair const& d);

}  // namespace qcs
