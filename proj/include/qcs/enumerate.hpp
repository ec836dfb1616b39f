#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qcs/qcycle_set.hpp"
#include "qcs/solution.hpp"

namespace qcs {

  struct EnumFilter {
    bool regular        = false;
    bool nondegenerate  = false;
    bool cycle_set_only = false;
    bool up_to_iso      = false;

    friend bool operator==(EnumFilter const&, EnumFilter const&) = default;
  };

  struct EnumStats {
    std::uint64_t nodes        = 0;  // dot-row and colon-cell assignments
    std::uint64_t dot_prunes   = 0;
    std::uint64_t colon_prunes = 0;
    std::uint64_t leaves       = 0;  // complete tables handed to verify_qcycle
    std::uint64_t labeled      = 0;  // labelled structures passing the filter

    EnumStats& operator+=(EnumStats const& o) noexcept;
    friend bool operator==(EnumStats const&, EnumStats const&) = default;
  };

  struct EnumResult {
    std::size_t            order = 0;
    EnumFilter             filter;
    std::vector<QCycleSet> structures;  // canonical forms when up_to_iso
    std::size_t            count = 0;
    EnumStats              stats;
  };

  inline constexpr std::size_t default_cap_general   = 4;
  inline constexpr std::size_t default_cap_cycle_set = 5;
  inline constexpr std::size_t hard_cap              = 6;

  struct EnumOptions {
    // Overrides the default cap; raising it needs ack_long_run.
    std::optional<std::size_t> cap;
    bool                       ack_long_run = false;
    std::size_t                threads      = 1;
    std::size_t                prefix_depth = 1;
  };

  // Throws Error(cap_exceeded) if n is not allowed under `opts`.
  void check_cap(std::size_t n, EnumFilter const& f, EnumOptions const& opts);

  // A search subtree: the first prefix.size() dot rows fixed to the given
  // permutations (indices into the lexicographic list of all n! of them).
  struct WorkUnit {
    std::vector<std::uint32_t> prefix;
  };

  // n!^prefix_depth units covering the whole search, in lexicographic order.
  std::vector<WorkUnit> split_search(std::size_t n, EnumFilter const& f, std::size_t prefix_depth);

  struct UnitResult {
    std::vector<QCycleSet> structures;  // sorted, duplicates removed
    EnumStats              stats;
  };

  UnitResult run_unit(std::size_t n, EnumFilter const& f, WorkUnit const& unit);

  // Every q-cycle set of order n passing the filter, verified and sorted
  // by table contents. Output and stats do not depend on opts.threads.
  EnumResult enumerate_qcs(std::size_t n, EnumFilter const& f, EnumOptions const& opts = {});

  struct SolutionEnumResult {
    std::size_t              order = 0;
    std::vector<SolutionMap> solutions;
    std::size_t              count = 0;
  };

  // Left non-degenerate solutions of order n via the q-cycle set
  // correspondence, optionally only the bijective ones.
  SolutionEnumResult enumerate_solutions(std::size_t        n,
                                         bool               require_bijective,
                                         bool               up_to_iso = true,
                                         EnumOptions const& opts      = {});

}  // namespace qcs
