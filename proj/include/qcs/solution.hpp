#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "qcs/report.hpp"

namespace qcs {

  // A map r on X x X for X = {0, ..., n - 1}, stored in full so that
  // degenerate maps remain representable. Writing r(x, y) = (l, r'),
  // lambda_x(y) = l and rho_y(x) = r'.
  class SolutionMap {
   public:
    using pair_type = std::pair<point_type, point_type>;

    SolutionMap() = default;

    // r[x * n + y] = r(x, y). Throws Error(out_of_range).
    SolutionMap(std::size_t n, std::vector<pair_type> r);

    template <typename F>
    static SolutionMap generate(std::size_t n, F&& f) {
      std::vector<pair_type> r(n * n);
      for (point_type x = 0; x < n; ++x) {
        for (point_type y = 0; y < n; ++y) {
          r[x * n + y] = f(x, y);
        }
      }
      return SolutionMap(n, std::move(r));
    }

    // r(x, y) = (y, x).
    static SolutionMap swap(std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept {
      return _n;
    }

    [[nodiscard]] pair_type operator()(point_type x, point_type y) const {
      return _r[x * _n + y];
    }

    [[nodiscard]] point_type lambda(point_type x, point_type y) const {
      return _r[x * _n + y].first;
    }

    [[nodiscard]] point_type rho(point_type y, point_type x) const {
      return _r[x * _n + y].second;
    }

    // r as a self-map of the n^2 points, pair (x, y) encoded as x * n + y.
    [[nodiscard]] std::vector<std::size_t> as_flat_map() const;

    [[nodiscard]] std::vector<pair_type> const& table() const noexcept {
      return _r;
    }

    friend auto operator<=>(SolutionMap const&, SolutionMap const&) = default;
    friend bool operator==(SolutionMap const&, SolutionMap const&)  = default;

   private:
    std::size_t            _n = 0;
    std::vector<pair_type> _r;
  };

  // Braid relation r1 r2 r1 = r2 r1 r2 over all n^3 triples.
  VerificationReport verify_solution(SolutionMap const& s);

  bool is_bijective_solution(SolutionMap const& s);
  bool is_left_nondeg(SolutionMap const& s);
  bool is_right_nondeg(SolutionMap const& s);

  // r^a == r^b as maps on n^2 points; r^0 is the identity.
  bool solution_power_eq(SolutionMap const& s, std::size_t a, std::size_t b);

  // Smallest a such that r^a = r^b for some b < a, as (a, b). Returns
  // nullopt-like (0, 0) if no relation holds with a <= bound.
  std::pair<std::size_t, std::size_t> minimal_power_relation(
      SolutionMap const& s,
      std::size_t        bound);

}  // namespace qcs
