#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "qcs/op_table.hpp"
#include "qcs/perm.hpp"
#include "qcs/report.hpp"

namespace qcs {

  // Checks row bijectivity of dot and the three axioms (laws axiom-1, axiom-2, axiom-3):
  //   (x.y).(x.z) = (y:x).(y.z)
  //   (x:y):(x:z) = (y.x):(y:z)
  //   (x.y):(x.z) = (y:x).(y:z)
  // for all x, y, z. Every violation is reported, not just the first.
  // Throws Error(degree_mismatch) if the tables differ in degree.
  VerificationReport verify_qcycle(OpTable const& dot, OpTable const& colon);

  // A finite q-cycle set on {0, ..., n - 1}. sigma_x(y) = x.y is always a
  // bijection; delta_x(y) = x:y need not be.
  class QCycleSet {
   public:
    struct unchecked_t {};
    static constexpr unchecked_t unchecked{};

    QCycleSet() = default;

    // Throws Error(invalid_structure) with the first violation unless the
    // tables form a q-cycle set.
    QCycleSet(OpTable dot, OpTable colon);

    // For callers that have already verified the tables (the enumeration
    // engine, quotients that re-verify on their own). Row bijectivity of
    // dot is still required.
    QCycleSet(unchecked_t, OpTable dot, OpTable colon);

    [[nodiscard]] std::size_t size() const noexcept {
      return _dot.degree();
    }

    [[nodiscard]] OpTable const& dot() const noexcept {
      return _dot;
    }

    [[nodiscard]] OpTable const& colon() const noexcept {
      return _colon;
    }

    [[nodiscard]] point_type dot(point_type x, point_type y) const {
      return _dot(x, y);
    }

    [[nodiscard]] point_type colon(point_type x, point_type y) const {
      return _colon(x, y);
    }

    // sigma_x^{-1}(y).
    [[nodiscard]] point_type sigma_inverse(point_type x, point_type y) const {
      return _dot_inverse[x * size() + y];
    }

    [[nodiscard]] Perm sigma(point_type x) const {
      return _dot.row_perm(x);
    }

    // Throws Error(not_a_permutation) when delta_x is not bijective.
    [[nodiscard]] Perm delta(point_type x) const {
      return _colon.row_perm(x);
    }

    friend bool operator==(QCycleSet const& a, QCycleSet const& b) {
      return a._dot == b._dot && a._colon == b._colon;
    }

    friend auto operator<=>(QCycleSet const& a, QCycleSet const& b) {
      if (auto c = a._dot <=> b._dot; c != 0) {
        return c;
      }
      return a._colon <=> b._colon;
    }

   private:
    void init_inverse();

    OpTable                 _dot;
    OpTable                 _colon;
    std::vector<point_type> _dot_inverse;
  };

  struct SquaringMaps {
    std::vector<point_type> q;        // x.x
    std::vector<point_type> q_prime;  // x:x
  };

  SquaringMaps squaring_maps(QCycleSet const& X);

  bool is_regular(QCycleSet const& X);
  bool is_nondegenerate(QCycleSet const& X);
  bool is_cycle_set(QCycleSet const& X);

  // A valid q-cycle set given by tables already known to satisfy the axioms
  // is rebuilt under a relabelling pi: the new table has
  // T'[pi(x)][pi(y)] = pi(T[x][y]).
  QCycleSet relabel(QCycleSet const& X, Perm const& pi);

}  // namespace qcs
