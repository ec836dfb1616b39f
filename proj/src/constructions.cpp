#include "qcs/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace qcs {

  std::optional<std::vector<point_type>> associativity_witness(OpTable const& t) {
    auto const n = static_cast<point_type>(t.degree());
    for (point_type x = 0; x < n; ++x) {
      for (point_type y = 0; y < n; ++y) {
        for (point_type z = 0; z < n; ++z) {
          if (t(t(x, y), z) != t(x, t(y, z))) {
            return std::vector<point_type>{x, y, z};
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::vector<point_type>> left_quasi_normal_witness(
      OpTable const& t) {
    auto const n = static_cast<point_type>(t.degree());
    for (point_type x = 0; x < n; ++x) {
      for (point_type y = 0; y < n; ++y) {
        for (point_type z = 0; z < n; ++z) {
          if (t(t(x, y), z) != t(t(t(x, z), y), z)) {
            return std::vector<point_type>{x, y, z};
          }
        }
      }
    }
    return std::nullopt;
  }

  FiniteGroup::FiniteGroup(OpTable table) : _table(std::move(table)) {
    auto const n = static_cast<point_type>(_table.degree());
    if (n == 0) {
      throw Error(ErrorKind::not_a_group, "empty table");
    }
    if (auto w = associativity_witness(_table)) {
      throw Error(ErrorKind::not_a_group,
                  "not associative at (" + std::to_string((*w)[0]) + ","
                      + std::to_string((*w)[1]) + ","
                      + std::to_string((*w)[2]) + ")");
    }
    auto const is_identity = [&](point_type e) {
      for (point_type a = 0; a < n; ++a) {
        if (_table(e, a) != a || _table(a, e) != a) {
          return false;
        }
      }
      return true;
    };
    point_type e = 0;
    while (e < n && !is_identity(e)) {
      ++e;
    }
    if (e == n) {
      throw Error(ErrorKind::not_a_group, "no identity element");
    }
    _identity = e;
    _inverse.assign(n, n);
    for (point_type a = 0; a < n; ++a) {
      for (point_type b = 0; b < n; ++b) {
        if (_table(a, b) == e && _table(b, a) == e) {
          _inverse[a] = b;
          break;
        }
      }
      if (_inverse[a] == n) {
        throw Error(ErrorKind::not_a_group,
                    "element " + std::to_string(a) + " has no inverse");
      }
    }
  }

  FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    return FiniteGroup(OpTable::generate(
        n, [n](point_type a, point_type b) { return (a + b) % n; }));
  }

  FiniteGroup FiniteGroup::symmetric3() {
    std::vector<std::vector<point_type>> elems;
    std::vector<point_type>              p{0, 1, 2};
    do {
      elems.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto const index_of = [&](std::vector<point_type> const& q) {
      return static_cast<point_type>(
          std::find(elems.begin(), elems.end(), q) - elems.begin());
    };
    return FiniteGroup(OpTable::generate(6, [&](point_type a, point_type b) {
      std::vector<point_type> c(3);
      for (std::size_t i = 0; i < 3; ++i) {
        c[i] = elems[a][elems[b][i]];  // a after b
      }
      return index_of(c);
    }));
  }

  bool FiniteGroup::is_endomorphism(std::vector<point_type> const& f) const {
    auto const n = static_cast<point_type>(size());
    if (f.size() != n) {
      return false;
    }
    for (auto v : f) {
      if (v >= n) {
        return false;
      }
    }
    for (point_type a = 0; a < n; ++a) {
      for (point_type b = 0; b < n; ++b) {
        if (f[mul(a, b)] != mul(f[a], f[b])) {
          return false;
        }
      }
    }
    return true;
  }

  OpTable meet_semilattice2() {
    return OpTable::generate(
        2, [](point_type x, point_type y) { return std::min(x, y); });
  }

  OpTable left_zero_semigroup(std::size_t n) {
    return OpTable::generate(n, [](point_type x, point_type) { return x; });
  }

  QCycleSet trivial_qcycle_set(std::size_t n) {
    return QCycleSet(OpTable::projection(n), OpTable::projection(n));
  }

  QCycleSet shift_qcycle_set(std::size_t m, std::size_t k) {
    return QCycleSet(
        OpTable::generate(
            m, [m, k](point_type, point_type y) { return (y + k) % m; }),
        OpTable::projection(m));
  }

  QCycleSet z3_transposition_qcycle_set() {
    auto const alpha = [](point_type y) -> point_type {
      return y == 2 ? 2 : 1 - y;
    };
    return QCycleSet(OpTable::generate(3,
                                       [&](point_type x, point_type y) {
                                         return x < 2 ? alpha(y) : y;
                                       }),
                     OpTable::generate(3, [&](point_type x, point_type y) {
                       return x < 2 ? y : alpha(y);
                     }));
  }

  QCycleSet constant_qcycle_set(std::size_t n, point_type k) {
    if (k >= n) {
      throw Error(ErrorKind::out_of_range, "constant exceeds carrier");
    }
    return QCycleSet(
        OpTable::projection(n),
        OpTable::generate(n, [k](point_type, point_type) { return k; }));
  }

  QCycleSet quasinormal_qcycle_set(OpTable const& semigroup) {
    auto const to_string = [](std::vector<point_type> const& w) {
      return "(" + std::to_string(w[0]) + "," + std::to_string(w[1]) + ","
             + std::to_string(w[2]) + ")";
    };
    if (auto w = associativity_witness(semigroup)) {
      throw Error(ErrorKind::not_left_quasi_normal,
                  "not associative at " + to_string(*w));
    }
    if (auto w = left_quasi_normal_witness(semigroup)) {
      throw Error(ErrorKind::not_left_quasi_normal,
                  "xyz != xzyz at " + to_string(*w));
    }
    auto const n = semigroup.degree();
    return QCycleSet(OpTable::projection(n),
                     OpTable::generate(n, [&](point_type x, point_type y) {
                       return semigroup(y, x);
                     }));
  }

  QCycleSet semibrace_qcycle_set(FiniteGroup const&             group,
                                 std::vector<point_type> const& f) {
    if (!group.is_endomorphism(f)) {
      throw Error(ErrorKind::not_endomorphism,
                  "map is not an endomorphism of the group");
    }
    auto const n = group.size();
    return QCycleSet(OpTable::generate(n,
                                       [&](point_type a, point_type b) {
                                         return group.mul(
                                             group.mul(group.inverse(a), b),
                                             f[a]);
                                       }),
                     OpTable::generate(
                         n, [&](point_type, point_type b) { return f[b]; }));
  }

  QCycleSet simple4_qcycle_set() {
    std::vector<Perm> sigma{Perm::from_cycles(4, {{1, 3}}),
                            Perm::from_cycles(4, {{0, 3}}),
                            Perm::from_cycles(4, {{0, 1, 3}}),
                            Perm::from_cycles(4, {{0, 1}})};
    std::vector<Perm> delta{Perm::identity(4),
                            Perm::identity(4),
                            Perm::from_cycles(4, {{0, 1, 3}}),
                            Perm::identity(4)};
    return QCycleSet(
        OpTable::generate(
            4, [&](point_type x, point_type y) { return sigma[x](y); }),
        OpTable::generate(
            4, [&](point_type x, point_type y) { return delta[x](y); }));
  }

}  // namespace qcs
