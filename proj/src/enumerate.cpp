#include "qcs/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <string>
#include <thread>

#include "qcs/convert.hpp"
#include "qcs/iso.hpp"

namespace qcs {

  EnumStats& EnumStats::operator+=(EnumStats const& o) noexcept {
    nodes += o.nodes;
    dot_prunes += o.dot_prunes;
    colon_prunes += o.colon_prunes;
    leaves += o.leaves;
    labeled += o.labeled;
    return *this;
  }

  void check_cap(std::size_t n, EnumFilter const& f, EnumOptions const& opts) {
    auto const dflt  = f.cycle_set_only ? default_cap_cycle_set : default_cap_general;
    auto const limit = opts.cap.value_or(dflt);
    if (limit > hard_cap) {
      throw Error(ErrorKind::cap_exceeded,
                  "cap " + std::to_string(limit) + " is above the hard limit "
                      + std::to_string(hard_cap));
    }
    if (limit > dflt && !opts.ack_long_run) {
      throw Error(ErrorKind::cap_exceeded,
                  "raising the cap above " + std::to_string(dflt)
                      + " needs --ack-long-run");
    }
    if (n == 0 || n > limit) {
      throw Error(ErrorKind::cap_exceeded,
                  "order " + std::to_string(n) + " is outside 1.." + std::to_string(limit));
    }
  }

  namespace {
    constexpr int undefined = -1;

    struct PermTables {
      std::vector<std::vector<point_type>> perms;  // lexicographic
      std::vector<std::uint32_t>           inv;
      std::vector<std::uint32_t>           comp;  // comp[i * k + j] = perms[i] o perms[j]

      explicit PermTables(std::size_t n) {
        std::vector<point_type> p(n);
        std::iota(p.begin(), p.end(), 0);
        do {
          perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        auto const k = perms.size();
        auto       index_of = [&](std::vector<point_type> const& q) {
          return static_cast<std::uint32_t>(
              std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
        };
        inv.resize(k);
        comp.resize(k * k);
        std::vector<point_type> q(n);
        for (std::size_t i = 0; i < k; ++i) {
          for (point_type x = 0; x < n; ++x) {
            q[perms[i][x]] = x;
          }
          inv[i] = index_of(q);
          for (std::size_t j = 0; j < k; ++j) {
            for (point_type x = 0; x < n; ++x) {
              q[x] = perms[i][perms[j][x]];
            }
            comp[i * k + j] = index_of(q);
          }
        }
      }

      [[nodiscard]] std::uint32_t compose(std::uint32_t i, std::uint32_t j) const {
        return comp[i * perms.size() + j];
      }
    };

    class Search {
     public:
      Search(std::size_t n, EnumFilter const& f, PermTables const& pt, WorkUnit const& unit)
          : _n(n),
            _f(f),
            _pt(pt),
            _prefix(unit.prefix),
            _row(n),
            _colon(n * n, undefined),
            _domain(n * n),
            _used(n, 0) {}

      UnitResult run() {
        assign_row(0);
        UnitResult r;
        r.structures.assign(_found.begin(), _found.end());
        r.stats = _stats;
        return r;
      }

     private:
      [[nodiscard]] point_type dot(point_type x, point_type y) const {
        return _pt.perms[_row[x]][y];
      }
      [[nodiscard]] int colon(point_type x, point_type y) const {
        return _colon[x * _n + y];
      }

      void assign_row(point_type k) {
        if (k == _n) {
          dot_complete();
          return;
        }
        auto const total = static_cast<std::uint32_t>(_pt.perms.size());
        auto const lo    = k < _prefix.size() ? _prefix[k] : 0;
        auto const hi    = k < _prefix.size() ? _prefix[k] + 1 : total;
        for (auto p = lo; p < hi; ++p) {
          ++_stats.nodes;
          _row[k] = p;
          if (_f.cycle_set_only && !cycle_rows_consistent(k)) {
            ++_stats.dot_prunes;
            continue;
          }
          assign_row(k + 1);
        }
      }

      // sigma_{x.y} sigma_x = sigma_{y.x} sigma_y wherever all four rows are set
      [[nodiscard]] bool cycle_rows_consistent(point_type k) const {
        for (point_type x = 0; x <= k; ++x) {
          for (point_type y = 0; y <= k; ++y) {
            auto const a = dot(x, y), b = dot(y, x);
            if (x != y && a <= k && b <= k
                && _pt.compose(_row[a], _row[x]) != _pt.compose(_row[b], _row[y])) {
              return false;
            }
          }
        }
        return true;
      }

      void dot_complete() {
        if (_f.cycle_set_only) {
          for (point_type x = 0; x < _n; ++x) {
            for (point_type y = 0; y < _n; ++y) {
              _colon[x * _n + y] = static_cast<int>(dot(x, y));
            }
          }
          leaf();
          return;
        }
        // axiom-1, (x.y).(x.z) = (y:x).(y.z), forces sigma_{y:x} = sigma_{x.y} sigma_x sigma_y^{-1}.
        for (point_type x = 0; x < _n; ++x) {
          for (point_type y = 0; y < _n; ++y) {
            auto const target
                = _pt.compose(_pt.compose(_row[dot(x, y)], _row[x]), _pt.inv[_row[y]]);
            auto& dom = _domain[y * _n + x];
            dom.clear();
            for (point_type w = 0; w < _n; ++w) {
              if (_row[w] == target) {
                dom.push_back(w);
              }
            }
            if (dom.empty()) {
              ++_stats.dot_prunes;
              return;
            }
          }
        }
        assign_cell(0);
      }

      void assign_cell(std::size_t cell) {
        if (cell == _n * _n) {
          leaf();
          return;
        }
        auto const row  = static_cast<point_type>(cell / _n);
        bool const perm = _f.regular || _f.nondegenerate;
        for (auto w : _domain[cell]) {
          if (perm && (_used[row] >> w & 1U)) {
            continue;
          }
          ++_stats.nodes;
          _colon[cell] = static_cast<int>(w);
          if (colon_consistent()) {
            _used[row] |= 1U << w;
            assign_cell(cell + 1);
            _used[row] &= ~(1U << w);
          } else {
            ++_stats.colon_prunes;
          }
        }
        _colon[cell] = undefined;
      }

      // axiom-3 then axiom-2 on every triple whose operands are all set.
      [[nodiscard]] bool colon_consistent() const {
        for (point_type x = 0; x < _n; ++x) {
          for (point_type y = 0; y < _n; ++y) {
            for (point_type z = 0; z < _n; ++z) {
              auto const yx = colon(y, x), yz = colon(y, z);
              if (yx != undefined && yz != undefined) {
                auto const l = colon(dot(x, y), dot(x, z));
                if (l != undefined && static_cast<point_type>(l) != dot(yx, yz)) {
                  return false;
                }
              }
              auto const xy = colon(x, y), xz = colon(x, z);
              if (xy != undefined && xz != undefined && yz != undefined) {
                auto const l = colon(xy, xz);
                auto const r = colon(dot(y, x), yz);
                if (l != undefined && r != undefined && l != r) {
                  return false;
                }
              }
            }
          }
        }
        return true;
      }

      void leaf() {
        ++_stats.leaves;
        std::vector<point_type> c(_colon.begin(), _colon.end());
        auto dt = OpTable::generate(_n, [&](point_type x, point_type y) { return dot(x, y); });
        OpTable ct(_n, std::move(c));
        if (!verify_qcycle(dt, ct).ok()) {
          return;
        }
        QCycleSet X(QCycleSet::unchecked, std::move(dt), std::move(ct));
        if ((_f.regular && !is_regular(X)) || (_f.nondegenerate && !is_nondegenerate(X))) {
          return;
        }
        ++_stats.labeled;
        _found.insert(_f.up_to_iso ? canonical_form(X) : std::move(X));
      }

      std::size_t                          _n;
      EnumFilter                           _f;
      PermTables const&                    _pt;
      std::vector<std::uint32_t>           _prefix;
      std::vector<std::uint32_t>           _row;
      std::vector<int>                     _colon;
      std::vector<std::vector<point_type>> _domain;
      std::vector<std::uint32_t>           _used;
      EnumStats                            _stats;
      std::set<QCycleSet>                  _found;
    };

    std::size_t factorial(std::size_t n) {
      std::size_t r = 1;
      for (std::size_t i = 2; i <= n; ++i) {
        r *= i;
      }
      return r;
    }
  }  // namespace

  std::vector<WorkUnit> split_search(std::size_t n, EnumFilter const&, std::size_t prefix_depth) {
    if (prefix_depth > n) {
      throw Error(ErrorKind::out_of_range, "prefix depth exceeds the order");
    }
    auto const            k = static_cast<std::uint32_t>(factorial(n));
    std::vector<WorkUnit> units{WorkUnit{}};
    for (std::size_t d = 0; d < prefix_depth; ++d) {
      std::vector<WorkUnit> next;
      next.reserve(units.size() * k);
      for (auto const& u : units) {
        for (std::uint32_t p = 0; p < k; ++p) {
          auto v = u;
          v.prefix.push_back(p);
          next.push_back(std::move(v));
        }
      }
      units = std::move(next);
    }
    return units;
  }

  UnitResult run_unit(std::size_t n, EnumFilter const& f, WorkUnit const& unit) {
    PermTables pt(n);
    return Search(n, f, pt, unit).run();
  }

  EnumResult enumerate_qcs(std::size_t n, EnumFilter const& f, EnumOptions const& opts) {
    check_cap(n, f, opts);
    PermTables const pt(n);
    auto const       units = split_search(n, f, std::min(opts.prefix_depth, n));
    std::vector<UnitResult> results(units.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (auto i = next++; i < units.size(); i = next++) {
        results[i] = Search(n, f, pt, units[i]).run();
      }
    };
    auto const threads = std::max<std::size_t>(1, std::min(opts.threads, units.size()));
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back(worker);
      }
      for (auto& t : pool) {
        t.join();
      }
    }

    EnumResult out;
    out.order  = n;
    out.filter = f;
    for (auto& r : results) {
      out.stats += r.stats;
      std::move(r.structures.begin(), r.structures.end(), std::back_inserter(out.structures));
    }
    std::sort(out.structures.begin(), out.structures.end());
    out.structures.erase(std::unique(out.structures.begin(), out.structures.end()),
                         out.structures.end());
    out.count = out.structures.size();
    return out;
  }

  SolutionEnumResult enumerate_solutions(std::size_t        n,
                                         bool               require_bijective,
                                         bool               up_to_iso,
                                         EnumOptions const& opts) {
    EnumFilter f;
    f.up_to_iso = up_to_iso;
    auto qs     = enumerate_qcs(n, f, opts);
    SolutionEnumResult out;
    out.order = n;
    for (auto const& X : qs.structures) {
      auto s = qcs_to_solution(X);
      if (!require_bijective || is_bijective_solution(s)) {
        out.solutions.push_back(std::move(s));
      }
    }
    out.count = out.solutions.size();
    return out;
  }

}  // namespace qcs
