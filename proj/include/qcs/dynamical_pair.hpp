#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "qcs/qcycle_set.hpp"
#include "qcs/report.hpp"

namespace qcs {

  // Fibre data (alpha, alpha') over a base q-cycle set X with fibre
  // S = {0, ..., m - 1}. alpha_{(x,y)}(s, -) is meant to be a permutation
  // of S; alpha'_{(x,y)}(s, -) is an arbitrary self-map of S.
  class DynamicalPair {
   public:
    DynamicalPair() = default;

    // Tables are indexed ((x * n + y) * m + s) * m + t. Throws
    // Error(out_of_range) on wrong sizes or values >= m.
    DynamicalPair(QCycleSet               base,
                  std::size_t             m,
                  std::vector<point_type> alpha,
                  std::vector<point_type> alpha_prime);

    template <typename F, typename G>
    static DynamicalPair generate(QCycleSet base, std::size_t m, F&& alpha, G&& alpha_prime) {
      auto const              n = base.size();
      std::vector<point_type> a(n * n * m * m), ap(n * n * m * m);
      std::size_t             i = 0;
      for (point_type x = 0; x < n; ++x) {
        for (point_type y = 0; y < n; ++y) {
          for (point_type s = 0; s < m; ++s) {
            for (point_type t = 0; t < m; ++t, ++i) {
              a[i]  = static_cast<point_type>(alpha(x, y, s, t));
              ap[i] = static_cast<point_type>(alpha_prime(x, y, s, t));
            }
          }
        }
      }
      return DynamicalPair(std::move(base), m, std::move(a), std::move(ap));
    }

    [[nodiscard]] QCycleSet const& base() const noexcept {
      return _base;
    }
    [[nodiscard]] std::size_t fiber_size() const noexcept {
      return _m;
    }
    [[nodiscard]] point_type alpha(point_type x, point_type y, point_type s, point_type t) const {
      return _alpha[index(x, y, s, t)];
    }
    [[nodiscard]] point_type alpha_prime(point_type x, point_type y, point_type s, point_type t) const {
      return _alpha_prime[index(x, y, s, t)];
    }
    [[nodiscard]] std::span<point_type const> alpha_row(point_type x, point_type y, point_type s) const {
      return std::span<point_type const>(_alpha).subspan(index(x, y, s, 0), _m);
    }
    [[nodiscard]] std::span<point_type const> alpha_prime_row(point_type x, point_type y, point_type s) const {
      return std::span<point_type const>(_alpha_prime).subspan(index(x, y, s, 0), _m);
    }

    friend bool operator==(DynamicalPair const&, DynamicalPair const&) = default;

   private:
    [[nodiscard]] std::size_t index(point_type x, point_type y, point_type s, point_type t) const {
      return ((std::size_t(x) * _base.size() + y) * _m + s) * _m + t;
    }

    QCycleSet               _base;
    std::size_t             _m = 0;
    std::vector<point_type> _alpha;
    std::vector<point_type> _alpha_prime;
  };

  // Checks that every alpha row is a permutation and the equations
  //   ugd1: a_{(x.y),(x.z)}(a_{(x,y)}(s,t), a_{(x,z)}(s,u))
  //          = a_{(y:x),(y.z)}(a'_{(y,x)}(t,s), a_{(y,z)}(t,u))
  //   ugd2: a'_{(x:y),(x:z)}(a'_{(x,y)}(s,t), a'_{(x,z)}(s,u))
  //          = a'_{(y.x),(y:z)}(a_{(y,x)}(t,s), a'_{(y,z)}(t,u))
  //   ugd3: a'_{(x.y),(x.z)}(a_{(x,y)}(s,t), a_{(x,z)}(s,u))
  //          = a_{(y:x),(y:z)}(a'_{(y,x)}(t,s), a'_{(y,z)}(t,u))
  // for all x, y, z in the base and s, t, u in the fibre. Witnesses are
  // (x, y, z, s, t, u).
  VerificationReport verify_dynamical_pair(DynamicalPair const& d);

  // The product operations on X x S, with (x, s) flattened to x * m + s:
  //   (x,s).(y,t) = (x.y, a_{(x,y)}(s,t)),  (x,s):(y,t) = (x:y, a'_{(x,y)}(s,t)).
  // No validity check.
  std::pair<OpTable, OpTable> product_tables(DynamicalPair const& d);

  // The dynamical extension. Throws Error(invalid_pair) unless
  // verify_dynamical_pair(d) is ok.
  QCycleSet build_extension(DynamicalPair const& d);

  // (pair verifies) == (product tables form a q-cycle set).
  bool extension_equivalence(DynamicalPair const& d);

}  // namespace qcs
