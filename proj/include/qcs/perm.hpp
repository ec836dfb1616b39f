#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "qcs/error.hpp"

namespace qcs {

  // A bijection of {0, ..., n - 1} stored by its image sequence.
  class Perm {
   public:
    Perm() = default;

    // Throws Error(not_a_permutation) unless images is a bijection.
    explicit Perm(std::vector<point_type> images);

    static Perm identity(std::size_t n);

    // Builds a permutation from disjoint cycles, e.g. {{0, 1, 3}}.
    static Perm from_cycles(
        std::size_t                                              n,
        std::initializer_list<std::initializer_list<point_type>> cycles);

    [[nodiscard]] std::size_t degree() const noexcept {
      return _images.size();
    }

    [[nodiscard]] point_type operator()(point_type x) const {
      return _images[x];
    }

    [[nodiscard]] std::span<point_type const> images() const noexcept {
      return _images;
    }

    [[nodiscard]] bool is_identity() const noexcept;

    // Cycle lengths in non-increasing order, fixed points included.
    [[nodiscard]] std::vector<std::size_t> cycle_type() const;

    friend auto operator<=>(Perm const&, Perm const&) = default;
    friend bool operator==(Perm const&, Perm const&)  = default;

   private:
    std::vector<point_type> _images;
  };

  // compose(p, q) applies q first, then p.
  Perm        compose(Perm const& p, Perm const& q);
  Perm        inverse(Perm const& p);
  std::size_t order(Perm const& p);

  bool is_bijection(std::span<point_type const> images) noexcept;

  std::ostream& operator<<(std::ostream& os, Perm const& p);

  struct PermHash {
    std::size_t operator()(Perm const& p) const noexcept;
  };

}  // namespace qcs
