#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "qcs/error.hpp"
#include "qcs/perm.hpp"

namespace qcs {

  // An n x n binary operation table on {0, ..., n - 1}; entry (x, y) is the
  // result with left argument x and right argument y. Rows need not be
  // bijective.
  class OpTable {
   public:
    OpTable() = default;
    explicit OpTable(std::size_t n) : _n(n), _entries(n * n, 0) {}

    // Throws Error(out_of_range) if entries has the wrong size or holds a
    // value >= n.
    OpTable(std::size_t n, std::vector<point_type> entries);

    static OpTable from_rows(std::vector<std::vector<point_type>> const& rows);

    template <typename F>
    static OpTable generate(std::size_t n, F&& f) {
      std::vector<point_type> entries(n * n);
      for (point_type x = 0; x < n; ++x) {
        for (point_type y = 0; y < n; ++y) {
          entries[x * n + y] = static_cast<point_type>(f(x, y));
        }
      }
      return OpTable(n, std::move(entries));
    }

    // Right projection x o y = y.
    static OpTable projection(std::size_t n);

    [[nodiscard]] std::size_t degree() const noexcept {
      return _n;
    }

    [[nodiscard]] point_type operator()(point_type x, point_type y) const {
      return _entries[x * _n + y];
    }

    void set(point_type x, point_type y, point_type value);

    [[nodiscard]] std::span<point_type const> row(point_type x) const {
      return std::span<point_type const>(_entries).subspan(x * _n, _n);
    }

    [[nodiscard]] std::span<point_type const> entries() const noexcept {
      return _entries;
    }

    [[nodiscard]] bool row_is_bijective(point_type x) const {
      return is_bijection(row(x));
    }

    [[nodiscard]] bool all_rows_bijective() const;

    // Throws Error(not_a_permutation) if the row is not bijective.
    [[nodiscard]] Perm row_perm(point_type x) const;

    std::vector<std::vector<point_type>> to_rows() const;

    friend auto operator<=>(OpTable const&, OpTable const&) = default;
    friend bool operator==(OpTable const&, OpTable const&)  = default;

   private:
    std::size_t             _n = 0;
    std::vector<point_type> _entries;
  };

}  // namespace qcs
