#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qcs/constructions.hpp"
#include "qcs/dynamical_pair.hpp"

namespace qcs {

  // Z/m_1 x ... x Z/m_k with elements encoded in mixed radix, first
  // coordinate most significant.
  class FiniteAbelianGroup {
   public:
    explicit FiniteAbelianGroup(std::vector<std::uint32_t> moduli);

    [[nodiscard]] std::size_t size() const noexcept {
      return _size;
    }
    [[nodiscard]] point_type encode(std::vector<std::int64_t> const& coords) const;
    [[nodiscard]] std::vector<std::uint32_t> decode(point_type a) const;
    [[nodiscard]] point_type add(point_type a, point_type b) const;
    [[nodiscard]] point_type negate(point_type a) const;
    [[nodiscard]] point_type sub(point_type a, point_type b) const {
      return add(a, negate(b));
    }

   private:
    std::vector<std::uint32_t> _moduli;
    std::size_t                _size = 1;
  };

  // alpha(s, t) = alpha'(s, t) = t.
  DynamicalPair trivial_pair(QCycleSet const& base, std::size_t m);

  // Over a cycle set X and A = prod Z/m_i:
  //   alpha_{(x,y)}(s,t) = t + (x == y ? a : b),
  //   alpha'_{(x,y)}(s,t) = t + (x == y ? a2 : b2).
  // Throws Error(not_cycle_set).
  DynamicalPair constant_cocycle_pair(QCycleSet const&                 X,
                                      std::vector<std::uint32_t> const& moduli,
                                      std::vector<std::int64_t> const&  a,
                                      std::vector<std::int64_t> const&  b,
                                      std::vector<std::int64_t> const&  a2,
                                      std::vector<std::int64_t> const&  b2);

  // Over the trivial cycle set on base_size points with fibre G x G,
  // G = prod Z/m_i, (s1, s2) encoded as s1 * |G| + s2:
  //   alpha:  (t1 + t2 - s2, t2) if x == y,  (t1, t2 + s1) otherwise
  //   alpha': (t1 - t2 + s2, t2) if x == y,  (t1, t2 + s1) otherwise
  DynamicalPair gxg_pair(std::size_t base_size, std::vector<std::uint32_t> const& moduli);

  // Over the semi-brace q-cycle set of (B, f) with fibre B:
  //   alpha_{(x,y)}(s,t) = x^{-1} t,  alpha'_{(x,y)}(s,t) = f(t).
  // Throws Error(not_endomorphism).
  DynamicalPair semibrace_pair(FiniteGroup const& group, std::vector<point_type> const& f);
  // Same, taking the group as a raw table; throws Error(not_a_group).
  DynamicalPair semibrace_pair(OpTable const& group_table, std::vector<point_type> const& f);

  // Over the quasi-normal q-cycle set of a semigroup (x.y = y, x:y = yx)
  // with fibre the same carrier: alpha(s,t) = t, alpha'_{(x,y)}(s,t) = tx.
  // Throws Error(not_left_quasi_normal).
  DynamicalPair quasinormal_pair(OpTable const& semigroup);

  // Pointwise evaluation of the cycle set on Z, x.y = y - min{0, x},
  // extended by the Klein four-group with
  //   alpha_{(i,j)}((a,b),(c,d)) = (c, d - (a - c)) if i == j,
  //                                (c - b, d)       otherwise,
  // and alpha' = alpha. Only closed-form evaluation is offered: the
  // operation is not closed on any finite window of Z.
  struct ZPoint {
    std::int64_t x;
    std::uint32_t a;
    std::uint32_t b;
    friend bool operator==(ZPoint const&, ZPoint const&) = default;
  };

  ZPoint z_example_dot(ZPoint const& p, ZPoint const& q);

  struct ZExampleWitness {
    ZPoint square_of_minus2;   // q(-2, (0,0))
    ZPoint square_of_minus1;   // q(-1, (0,0))
    bool   degenerate;         // the two squares coincide
    ZPoint sample;             // (5, (0,0))
    ZPoint sigma_minus2_sample;
    ZPoint sigma_minus1_sample;
    bool   sigmas_differ;      // (-2,(0,0)) and (-1,(0,0)) are not retract-equivalent
  };

  ZExampleWitness z_example_witness();

}  // namespace qcs
