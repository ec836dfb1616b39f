#include "qcs/iso.hpp"

#include <algorithm>
#include <limits>

namespace qcs {

  namespace {

    constexpr point_type unset = std::numeric_limits<point_type>::max();

    std::vector<std::size_t> functional_profile(std::span<point_type const> row,
                                                point_type                   self) {
      std::size_t const        n = row.size();
      std::vector<std::size_t> indegree(n, 0);
      std::size_t              fixed = 0;
      for (std::size_t y = 0; y < n; ++y) {
        ++indegree[row[y]];
        fixed += (row[y] == y);
      }
      std::sort(indegree.begin(), indegree.end(), std::greater<>());
      indegree.push_back(fixed);
      indegree.push_back(row[self] == self);
      return indegree;
    }

    // Backtracking search for structure-preserving bijections X -> Y.
    class IsoSearch {
     public:
      IsoSearch(QCycleSet const& X, QCycleSet const& Y, bool all)
          : _x(X),
            _y(Y),
            _n(static_cast<point_type>(X.size())),
            _all(all),
            _inv_x(point_invariants(X)),
            _inv_y(point_invariants(Y)),
            _map(_n, unset),
            _rev(_n, unset) {}

      void run() {
        if (_x.size() != _y.size()) {
          return;
        }
        auto a = _inv_x, b = _inv_y;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
          return;
        }
        search(0);
      }

      std::vector<Perm>& found() {
        return _found;
      }

     private:
      bool consistent(point_type a) const {
        auto const pa = _map[a];
        for (point_type b = 0; b < _n; ++b) {
          auto const pb = _map[b];
          if (pb == unset) {
            continue;
          }
          if (!check(a, b, pa, pb) || !check(b, a, pb, pa)) {
            return false;
          }
        }
        return true;
      }

      bool check(point_type a, point_type b, point_type pa, point_type pb) const {
        for (int op = 0; op < 2; ++op) {
          auto const c  = op == 0 ? _x.dot(a, b) : _x.colon(a, b);
          auto const pc = op == 0 ? _y.dot(pa, pb) : _y.colon(pa, pb);
          if (_map[c] != unset) {
            if (_map[c] != pc) {
              return false;
            }
          } else if (_rev[pc] != unset) {
            return false;
          }
        }
        return true;
      }

      bool full_check() const {
        for (point_type a = 0; a < _n; ++a) {
          for (point_type b = 0; b < _n; ++b) {
            if (_y.dot(_map[a], _map[b]) != _map[_x.dot(a, b)]
                || _y.colon(_map[a], _map[b]) != _map[_x.colon(a, b)]) {
              return false;
            }
          }
        }
        return true;
      }

      void search(point_type a) {
        if (_done) {
          return;
        }
        if (a == _n) {
          if (full_check()) {
            _found.emplace_back(_map);
            _done = !_all;
          }
          return;
        }
        for (point_type c = 0; c < _n; ++c) {
          if (_rev[c] != unset || _inv_x[a] != _inv_y[c]) {
            continue;
          }
          _map[a] = c;
          _rev[c] = a;
          if (consistent(a)) {
            search(a + 1);
          }
          _map[a] = unset;
          _rev[c] = unset;
          if (_done) {
            return;
          }
        }
      }

      QCycleSet const&                      _x;
      QCycleSet const&                      _y;
      point_type                            _n;
      bool                                  _all;
      bool                                  _done = false;
      std::vector<std::vector<std::size_t>> _inv_x;
      std::vector<std::vector<std::size_t>> _inv_y;
      std::vector<point_type>               _map;
      std::vector<point_type>               _rev;
      std::vector<Perm>                     _found;
    };

    struct Cell {
      bool       colon;
      point_type i;
      point_type j;
    };

    std::vector<Cell> block_order(point_type n) {
      std::vector<Cell> cells;
      for (point_type k = 0; k < n; ++k) {
        for (point_type j = 0; j < k; ++j) {
          cells.push_back({false, j, k});
          cells.push_back({false, k, j});
          cells.push_back({true, j, k});
          cells.push_back({true, k, j});
        }
        cells.push_back({false, k, k});
        cells.push_back({true, k, k});
      }
      return cells;
    }

    class CanonicalSearch {
     public:
      explicit CanonicalSearch(QCycleSet const& X)
          : _x(X),
            _n(static_cast<point_type>(X.size())),
            _cells(block_order(_n)),
            _tau(_n, unset),
            _label(_n, unset) {}

      std::vector<point_type> const& run() {
        search(0);
        return _best;
      }

      std::vector<Cell> const& cells() const {
        return _cells;
      }

     private:
      point_type old_value(Cell const& c) const {
        auto const a = _tau[c.i], b = _tau[c.j];
        return c.colon ? _x.colon(a, b) : _x.dot(a, b);
      }

      // 1: prune, 0: undecided or strictly better, 2: complete and equal.
      int compare_prefix(point_type k) const {
        if (_best.empty()) {
          return 0;
        }
        std::size_t const upto = std::size_t(k + 1) * (k + 1) * 2;
        for (std::size_t idx = 0; idx < upto; ++idx) {
          auto const lab = _label[old_value(_cells[idx])];
          if (lab == unset) {
            return _best[idx] < k + 1 ? 1 : 0;
          }
          if (lab < _best[idx]) {
            return 0;
          }
          if (lab > _best[idx]) {
            return 1;
          }
        }
        return 2;
      }

      void search(point_type k) {
        if (k == _n) {
          std::vector<point_type> seq(_cells.size());
          for (std::size_t idx = 0; idx < seq.size(); ++idx) {
            seq[idx] = _label[old_value(_cells[idx])];
          }
          if (_best.empty() || seq < _best) {
            _best = std::move(seq);
          }
          return;
        }
        for (point_type c = 0; c < _n; ++c) {
          if (_label[c] != unset) {
            continue;
          }
          _tau[k]   = c;
          _label[c] = k;
          auto const cmp = compare_prefix(k);
          if (cmp == 0 || (cmp == 2 && k + 1 < _n)) {
            search(k + 1);
          }
          _label[c] = unset;
          _tau[k]   = unset;
        }
      }

      QCycleSet const&        _x;
      point_type              _n;
      std::vector<Cell>       _cells;
      std::vector<point_type> _tau;
      std::vector<point_type> _label;
      std::vector<point_type> _best;
    };

  }  // namespace

  std::vector<std::vector<std::size_t>> point_invariants(QCycleSet const& X) {
    auto const                            n  = static_cast<point_type>(X.size());
    auto const                            sq = squaring_maps(X);
    std::vector<std::size_t>              q_pre(n, 0), qp_pre(n, 0);
    for (point_type x = 0; x < n; ++x) {
      ++q_pre[sq.q[x]];
      ++qp_pre[sq.q_prime[x]];
    }
    std::vector<std::vector<std::size_t>> result(n);
    for (point_type x = 0; x < n; ++x) {
      auto& inv = result[x];
      inv       = X.sigma(x).cycle_type();
      inv.push_back(n);  // separator
      auto prof = functional_profile(X.colon().row(x), x);
      inv.insert(inv.end(), prof.begin(), prof.end());
      inv.push_back(sq.q[x] == x);
      inv.push_back(sq.q_prime[x] == x);
      inv.push_back(q_pre[x]);
      inv.push_back(qp_pre[x]);
      std::size_t fixes_x = 0;
      for (point_type y = 0; y < n; ++y) {
        fixes_x += (X.dot(y, x) == x) + 2 * (X.colon(y, x) == x);
      }
      inv.push_back(fixes_x);
    }
    return result;
  }

  std::optional<Perm> are_isomorphic(QCycleSet const& X, QCycleSet const& Y) {
    IsoSearch s(X, Y, false);
    s.run();
    if (s.found().empty()) {
      return std::nullopt;
    }
    return s.found().front();
  }

  std::vector<Perm> automorphisms(QCycleSet const& X) {
    IsoSearch s(X, X, true);
    s.run();
    auto result = std::move(s.found());
    std::sort(result.begin(), result.end());
    return result;
  }

  QCycleSet canonical_form(QCycleSet const& X) {
    CanonicalSearch s(X);
    auto const&     best = s.run();
    auto const      n    = X.size();
    OpTable         dot(n), colon(n);
    auto const&     cells = s.cells();
    for (std::size_t idx = 0; idx < cells.size(); ++idx) {
      auto const& c = cells[idx];
      (c.colon ? colon : dot).set(c.i, c.j, best[idx]);
    }
    return QCycleSet(QCycleSet::unchecked, std::move(dot), std::move(colon));
  }

}  // namespace qcs
