#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qcs {

  using point_type = std::uint32_t;

  enum class ErrorKind {
    degree_mismatch,
    out_of_range,
    not_a_permutation,
    invalid_structure,
    not_left_nondegenerate,
    not_nondegenerate,
    not_regular,
    not_invariant,
    quotient_not_qcycle_set,
    ill_defined,
    budget_exceeded,
    invalid_pair,
    not_cycle_set,
    not_a_group,
    not_endomorphism,
    not_left_quasi_normal,
    invalid_covering,
    not_automorphism,
    compatibility_failed,
    cap_exceeded,
    parse_error
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  // All library failures surface as qcs::Error; kind() identifies the
  // contract that was broken, what() carries the witness in readable form.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message),
          _kind(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

}  // namespace qcs
