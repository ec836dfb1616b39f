#pragma once

// Brute-force counters used as an independent check of the enumeration
// engine. Deliberately shares no code with the qcs library: tables are
// plain vectors, every candidate is generated and tested with no pruning.

#include <cstddef>
#include <cstdint>

namespace qcs_oracle {

  struct Counts {
    std::uint64_t labeled = 0;
    std::uint64_t classes = 0;  // up to relabelling
  };

  struct QcsCounts {
    Counts all;
    Counts regular;
    Counts nondegenerate;
  };

  // All pairs (dot, colon) with bijective dot rows, n^(n*n) colon tables
  // per dot table. Intended for n <= 3.
  QcsCounts count_qcycle_sets(std::size_t n);

  // All dot tables with bijective rows, colon = dot. Intended for n <= 4.
  Counts count_cycle_sets(std::size_t n);

  struct SolutionCounts {
    Counts        left_nondegenerate;     // braid relation + bijective lambda rows
    Counts        bijective;              // ... and r bijective
    std::uint64_t bijective_not_right_nondegenerate = 0;
  };

  // All r-tables with bijective lambda rows and arbitrary second
  // components. Intended for n <= 3.
  SolutionCounts count_solutions(std::size_t n);

}  // namespace qcs_oracle
