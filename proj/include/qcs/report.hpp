#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qcs/error.hpp"

namespace qcs {

  // The law a violation falsifies.
  enum class Law {
    row_bijectivity,
    axiom_1,
    axiom_2,
    axiom_3,
    braid,
    alpha_bijectivity,
    ugd1,
    ugd2,
    ugd3,
    homomorphism_dot,
    homomorphism_colon,
    surjectivity,
    fiber_uniformity
  };

  std::string_view to_string(Law law) noexcept;

  // witness holds the quantified variables in the order the law names them,
  // e.g. (x, y, z) for the axioms, (x, y, y') for a non-injective row, (x, y, z, s, t, u) for the
  // dynamical-pair equations. lhs and rhs hold the two evaluated sides when
  // the law is an equation.
  struct Violation {
    Law                     law;
    std::vector<point_type> witness;
    std::vector<point_type> lhs;
    std::vector<point_type> rhs;

    friend bool operator==(Violation const&, Violation const&) = default;
  };

  class VerificationReport {
   public:
    [[nodiscard]] bool ok() const noexcept {
      return _violations.empty();
    }

    [[nodiscard]] std::vector<Violation> const& violations() const noexcept {
      return _violations;
    }

    [[nodiscard]] bool has(Law law) const noexcept;

    void add(Violation v) {
      _violations.push_back(std::move(v));
    }

    void merge(VerificationReport const& other);

    // First violation in readable form, or "ok".
    [[nodiscard]] std::string summary() const;

   private:
    std::vector<Violation> _violations;
  };

  std::ostream& operator<<(std::ostream& os, Violation const& v);

}  // namespace qcs
