#include "qcs_oracle/naive.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

namespace qcs_oracle {

  namespace {
    using Table = std::vector<unsigned>;  // row-major n x n

    std::vector<std::vector<unsigned>> all_perms(std::size_t n) {
      std::vector<std::vector<unsigned>> out;
      std::vector<unsigned>              p(n);
      std::iota(p.begin(), p.end(), 0U);
      do {
        out.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      return out;
    }

    // Advances an odometer with digits in [0, base); false after the last.
    bool next_digits(std::vector<unsigned>& d, unsigned base) {
      for (auto i = d.size(); i-- > 0;) {
        if (++d[i] < base) {
          return true;
        }
        d[i] = 0;
      }
      return false;
    }

    bool axioms_hold(std::size_t n, Table const& D, Table const& C) {
      auto d = [&](unsigned x, unsigned y) { return D[x * n + y]; };
      auto c = [&](unsigned x, unsigned y) { return C[x * n + y]; };
      for (unsigned x = 0; x < n; ++x) {
        for (unsigned y = 0; y < n; ++y) {
          for (unsigned z = 0; z < n; ++z) {
            if (d(d(x, y), d(x, z)) != d(c(y, x), d(y, z))
                || c(c(x, y), c(x, z)) != c(d(y, x), c(y, z))
                || c(d(x, y), d(x, z)) != d(c(y, x), c(y, z))) {
              return false;
            }
          }
        }
      }
      return true;
    }

    bool rows_bijective(std::size_t n, Table const& T) {
      for (std::size_t x = 0; x < n; ++x) {
        std::vector<bool> seen(n, false);
        for (std::size_t y = 0; y < n; ++y) {
          if (seen[T[x * n + y]]) {
            return false;
          }
          seen[T[x * n + y]] = true;
        }
      }
      return true;
    }

    bool diagonal_bijective(std::size_t n, Table const& T) {
      std::vector<bool> seen(n, false);
      for (std::size_t x = 0; x < n; ++x) {
        if (seen[T[x * n + x]]) {
          return false;
        }
        seen[T[x * n + x]] = true;
      }
      return true;
    }

    // Least row-major encoding of the relabelled tables over all n!
    // relabellings, T'[p x][p y] = p T[x][y].
    std::vector<unsigned> min_key(std::size_t n, std::vector<Table> const& tables) {
      std::vector<unsigned> best;
      for (auto const& p : all_perms(n)) {
        std::vector<unsigned> key;
        for (auto const& T : tables) {
          Table R(n * n);
          for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
              R[p[x] * n + p[y]] = p[T[x * n + y]];
            }
          }
          key.insert(key.end(), R.begin(), R.end());
        }
        if (best.empty() || key < best) {
          best = std::move(key);
        }
      }
      return best;
    }

    struct Tally {
      std::uint64_t                     labeled = 0;
      std::set<std::vector<unsigned>>   keys;
      void add(std::size_t n, std::vector<Table> const& tables) {
        ++labeled;
        keys.insert(min_key(n, tables));
      }
      [[nodiscard]] Counts counts() const {
        return {labeled, keys.size()};
      }
    };

    // Every table whose rows are permutations.
    template <typename F>
    void for_each_perm_table(std::size_t n, F&& f) {
      auto const            perms = all_perms(n);
      std::vector<unsigned> choice(n, 0);
      Table                 D(n * n);
      do {
        for (std::size_t x = 0; x < n; ++x) {
          std::copy(perms[choice[x]].begin(), perms[choice[x]].end(), D.begin() + x * n);
        }
        f(D);
      } while (next_digits(choice, static_cast<unsigned>(perms.size())));
    }
  }  // namespace

  QcsCounts count_qcycle_sets(std::size_t n) {
    Tally all, reg, nondeg;
    for_each_perm_table(n, [&](Table const& D) {
      Table C(n * n, 0);
      do {
        if (!axioms_hold(n, D, C)) {
          continue;
        }
        all.add(n, {D, C});
        if (rows_bijective(n, C)) {
          reg.add(n, {D, C});
          if (diagonal_bijective(n, D) && diagonal_bijective(n, C)) {
            nondeg.add(n, {D, C});
          }
        }
      } while (next_digits(C, static_cast<unsigned>(n)));
    });
    return {all.counts(), reg.counts(), nondeg.counts()};
  }

  Counts count_cycle_sets(std::size_t n) {
    Tally t;
    for_each_perm_table(n, [&](Table const& D) {
      if (axioms_hold(n, D, D)) {
        t.add(n, {D});
      }
    });
    return t.counts();
  }

  SolutionCounts count_solutions(std::size_t n) {
    Tally          left, bij;
    std::uint64_t  bad = 0;
    for_each_perm_table(n, [&](Table const& L) {
      Table R(n * n, 0);  // R[x][y] = second component of r(x, y)
      do {
        auto r = [&](unsigned x, unsigned y) {
          return std::pair<unsigned, unsigned>{L[x * n + y], R[x * n + y]};
        };
        bool braid = true;
        for (unsigned x = 0; x < n && braid; ++x) {
          for (unsigned y = 0; y < n && braid; ++y) {
            for (unsigned z = 0; z < n && braid; ++z) {
              // r1 r2 r1 versus r2 r1 r2 on (x, y, z)
              auto [a1, b1] = r(x, y);
              auto [b2, c2] = r(b1, z);
              auto [a3, b3] = r(a1, b2);
              auto [p1, q1] = r(y, z);
              auto [o2, p2] = r(x, p1);
              auto [p3, q3] = r(p2, q1);
              braid         = a3 == o2 && b3 == p3 && c2 == q3;
            }
          }
        }
        if (!braid) {
          continue;
        }
        // encode r as the n^2 x n^2 image table
        Table image(n * n);
        for (unsigned x = 0; x < n; ++x) {
          for (unsigned y = 0; y < n; ++y) {
            image[x * n + y] = L[x * n + y] * static_cast<unsigned>(n) + R[x * n + y];
          }
        }
        left.add(n, {L, R});
        std::vector<unsigned> sorted = image;
        std::sort(sorted.begin(), sorted.end());
        bool bijective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        if (bijective) {
          bij.add(n, {L, R});
          // rho_y(x) = R[x][y]; right non-degenerate iff every column of R is a bijection
          for (unsigned y = 0; y < n; ++y) {
            std::vector<bool> seen(n, false);
            bool              ok = true;
            for (unsigned x = 0; x < n; ++x) {
              ok = ok && !seen[R[x * n + y]];
              seen[R[x * n + y]] = true;
            }
            if (!ok) {
              ++bad;
              break;
            }
          }
        }
      } while (next_digits(R, static_cast<unsigned>(n)));
    });
    return {left.counts(), bij.counts(), bad};
  }

}  // namespace qcs_oracle
