// Regenerates tests/frozen_counts.hpp from the brute-force oracle:
//   qcs_freeze_counts > tests/frozen_counts.hpp

#include <cstdio>
#include <initializer_list>

#include "qcs_oracle/naive.hpp"

int main() {
  using namespace qcs_oracle;
  std::puts("#pragma once");
  std::puts("");
  std::puts("// Generated by tools/freeze_counts.cpp from the brute-force oracle in");
  std::puts("// oracle/naive.cpp (no pruning, every table tested). Do not edit by hand;");
  std::puts("// `qcs enumerate --oracle` re-derives the same numbers.");
  std::puts("");
  std::puts("#include <cstdint>");
  std::puts("");
  std::puts("namespace frozen {");
  std::puts("");
  std::puts("  struct Count {");
  std::puts("    std::uint64_t labeled;");
  std::puts("    std::uint64_t classes;");
  std::puts("  };");
  std::puts("");
  std::puts("  // q-cycle sets by order 1..3: every dot table with bijective rows times");
  std::puts("  // every colon table.");
  for (auto const* name : {"all", "regular", "nondegenerate"}) {
    std::printf("  inline constexpr Count qcs_%s[] = {", name);
    for (std::size_t n = 1; n <= 3; ++n) {
      auto       c = count_qcycle_sets(n);
      auto const v = name[0] == 'a' ? c.all : name[0] == 'r' ? c.regular : c.nondegenerate;
      std::printf("%s{%llu, %llu}", n > 1 ? ", " : "", (unsigned long long) v.labeled,
                  (unsigned long long) v.classes);
    }
    std::puts("};");
  }
  std::puts("");
  std::puts("  // Cycle sets by order 1..4: every dot table with bijective rows, colon = dot.");
  std::printf("  inline constexpr Count cycle_sets[] = {");
  for (std::size_t n = 1; n <= 4; ++n) {
    auto c = count_cycle_sets(n);
    std::printf("%s{%llu, %llu}", n > 1 ? ", " : "", (unsigned long long) c.labeled,
                (unsigned long long) c.classes);
  }
  std::puts("};");
  std::puts("");
  std::puts("  // Solutions by order 1..3: every r-table with bijective lambda rows.");
  SolutionCounts s[3];
  for (std::size_t n = 1; n <= 3; ++n) {
    s[n - 1] = count_solutions(n);
  }
  std::printf("  inline constexpr Count left_nondegenerate_solutions[] = {");
  for (std::size_t i = 0; i < 3; ++i) {
    std::printf("%s{%llu, %llu}", i ? ", " : "", (unsigned long long) s[i].left_nondegenerate.labeled,
                (unsigned long long) s[i].left_nondegenerate.classes);
  }
  std::puts("};");
  std::printf("  inline constexpr Count bijective_solutions[] = {");
  for (std::size_t i = 0; i < 3; ++i) {
    std::printf("%s{%llu, %llu}", i ? ", " : "", (unsigned long long) s[i].bijective.labeled,
                (unsigned long long) s[i].bijective.classes);
  }
  std::puts("};");
  std::printf("  inline constexpr std::uint64_t bijective_not_right_nondegenerate[] = {");
  for (std::size_t i = 0; i < 3; ++i) {
    std::printf("%s%llu", i ? ", " : "", (unsigned long long) s[i].bijective_not_right_nondegenerate);
  }
  std::puts("};");
  std::puts("");
  std::puts("}  // namespace frozen");
  return 0;
}
