#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qcs/op_table.hpp"
#include "qcs/qcycle_set.hpp"
#include "qcs/solution.hpp"

namespace qcs {

  // A finite group given by its multiplication table.
  class FiniteGroup {
   public:
    // Throws Error(not_a_group) unless the table is associative with a
    // two-sided identity and inverses.
    explicit FiniteGroup(OpTable table);

    static FiniteGroup cyclic(std::size_t n);
    // S_3 on the six permutations of {0,1,2} in lexicographic order of
    // their image sequences; element 0 is the identity, element 2 is (0 1).
    static FiniteGroup symmetric3();

    [[nodiscard]] std::size_t size() const noexcept {
      return _table.degree();
    }
    [[nodiscard]] point_type mul(point_type a, point_type b) const {
      return _table(a, b);
    }
    [[nodiscard]] point_type identity() const noexcept {
      return _identity;
    }
    [[nodiscard]] point_type inverse(point_type a) const {
      return _inverse[a];
    }
    [[nodiscard]] OpTable const& table() const noexcept {
      return _table;
    }

    [[nodiscard]] bool is_endomorphism(std::vector<point_type> const& f) const;

   private:
    OpTable                 _table;
    point_type              _identity = 0;
    std::vector<point_type> _inverse;
  };

  // First (x, y, z) with (xy)z != x(yz), if any.
  std::optional<std::vector<point_type>> associativity_witness(OpTable const& t);
  // First (x, y, z) with xyz != xzyz, if any (assumes associativity).
  std::optional<std::vector<point_type>> left_quasi_normal_witness(
      OpTable const& t);

  // ({0,1}, min).
  OpTable meet_semilattice2();
  // xy = x.
  OpTable left_zero_semigroup(std::size_t n);

  // x.y = x:y = y.
  QCycleSet trivial_qcycle_set(std::size_t n);

  // On Z/mZ: x.y = y + k, x:y = y. Solution r(x, y) = (y - k, x).
  QCycleSet shift_qcycle_set(std::size_t m, std::size_t k);

  // On Z/3Z with a = (0 1): x.y = a(y), x:y = y for x in {0, 1};
  // 2.y = y, 2:y = a(y). Solution satisfies r^4 = id.
  QCycleSet z3_transposition_qcycle_set();

  // x.y = y, x:y = k. Not regular for n > 1; r(x, y) = (y, k), r^3 = r^2.
  QCycleSet constant_qcycle_set(std::size_t n, point_type k);

  // From a left quasi-normal semigroup (xyz = xzyz): x.y = y, x:y = yx.
  // Solution r(x, y) = (y, xy) with r^5 = r^3. Throws
  // Error(not_left_quasi_normal) with the witness triple.
  QCycleSet quasinormal_qcycle_set(OpTable const& semigroup);

  // From a group B and an endomorphism f: a.b = a^{-1} b f(a), a:b = f(b).
  // Regular iff f is bijective; q = q' = f. Throws Error(not_endomorphism).
  QCycleSet semibrace_qcycle_set(FiniteGroup const&             group,
                                 std::vector<point_type> const& f);

  // The order-4 q-cycle set with sigma_0 = (1 3), sigma_1 = (0 3),
  // sigma_2 = (0 1 3), sigma_3 = (0 1), delta_2 = (0 1 3) and every other
  // delta the identity. It is simple.
  QCycleSet simple4_qcycle_set();

}  // namespace qcs
