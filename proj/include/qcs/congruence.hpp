#pragma once

#include <cstddef>
#include <vector>

#include "qcs/qcycle_set.hpp"

namespace qcs {

  // A partition of the carrier. Blocks are numbered by least member and
  // each block is sorted, so equal partitions compare equal.
  class CongruencePartition {
   public:
    CongruencePartition() = default;
    // Accepts any labelling of points by block and renumbers it.
    explicit CongruencePartition(std::vector<point_type> const& labels);

    static CongruencePartition discrete(std::size_t n);
    static CongruencePartition full(std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept {
      return _block_of.size();
    }
    [[nodiscard]] std::size_t block_count() const noexcept {
      return _blocks.size();
    }
    [[nodiscard]] std::vector<std::vector<point_type>> const& blocks() const noexcept {
      return _blocks;
    }
    [[nodiscard]] std::vector<point_type> const& block_of() const noexcept {
      return _block_of;
    }
    [[nodiscard]] point_type block_of(point_type x) const {
      return _block_of.at(x);
    }
    // All blocks have the same size.
    [[nodiscard]] bool is_uniform() const noexcept;
    [[nodiscard]] bool is_discrete() const noexcept {
      return _blocks.size() == _block_of.size();
    }
    [[nodiscard]] bool is_full() const noexcept {
      return _blocks.size() <= 1;
    }

    friend bool operator==(CongruencePartition const&, CongruencePartition const&) = default;
    friend auto operator<=>(CongruencePartition const& a, CongruencePartition const& b) {
      return a._block_of <=> b._block_of;
    }

   private:
    std::vector<point_type>              _block_of;
    std::vector<std::vector<point_type>> _blocks;
  };

  // Largest structure size accepted by enumerate_congruences / is_simple.
  inline constexpr std::size_t congruence_size_guard = 12;

  // Smallest congruence (for both operations) containing `start` with the
  // extra pair a ~ b merged.
  CongruencePartition congruence_closure(QCycleSet const&           X,
                                         CongruencePartition const& start,
                                         point_type                 a,
                                         point_type                 b);

  // Every congruence whose quotient has bijective dot rows, discrete and
  // full ones included, sorted. Throws Error(cap_exceeded) above the guard.
  std::vector<CongruencePartition> enumerate_congruences(QCycleSet const& X);

  // Congruences with equal-size blocks other than the discrete and full one.
  std::vector<CongruencePartition> proper_uniform_congruences(QCycleSet const& X);

  // True iff no proper uniform congruence exists.
  bool is_simple(QCycleSet const& X);

}  // namespace qcs
