#include "qcs/congruence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <string>

#include "qcs/retract.hpp"

namespace qcs {

  CongruencePartition::CongruencePartition(std::vector<point_type> const& labels)
      : _block_of(labels.size()) {
    std::vector<point_type> renumber;
    std::vector<point_type> seen_label;
    for (point_type x = 0; x < labels.size(); ++x) {
      auto it = std::find(seen_label.begin(), seen_label.end(), labels[x]);
      if (it == seen_label.end()) {
        seen_label.push_back(labels[x]);
        _blocks.emplace_back();
        it = seen_label.end() - 1;
      }
      auto const b = static_cast<point_type>(it - seen_label.begin());
      _block_of[x] = b;
      _blocks[b].push_back(x);
    }
  }

  CongruencePartition CongruencePartition::discrete(std::size_t n) {
    std::vector<point_type> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    return CongruencePartition(labels);
  }

  CongruencePartition CongruencePartition::full(std::size_t n) {
    return CongruencePartition(std::vector<point_type>(n, 0));
  }

  bool CongruencePartition::is_uniform() const noexcept {
    return std::all_of(_blocks.begin(), _blocks.end(), [this](auto const& b) {
      return b.size() == _blocks.front().size();
    });
  }

  namespace {
    struct UnionFind {
      std::vector<point_type> parent;
      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
      }
      point_type find(point_type x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      bool unite(point_type a, point_type b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        parent[std::max(a, b)] = std::min(a, b);
        return true;
      }
    };

    void check_guard(QCycleSet const& X) {
      if (X.size() > congruence_size_guard) {
        throw Error(ErrorKind::cap_exceeded,
                    "congruence search is limited to "
                        + std::to_string(congruence_size_guard) + " points");
      }
    }
  }  // namespace

  CongruencePartition congruence_closure(QCycleSet const&           X,
                                         CongruencePartition const& start,
                                         point_type                 a,
                                         point_type                 b) {
    auto const n = static_cast<point_type>(X.size());
    if (start.size() != n || a >= n || b >= n) {
      throw Error(ErrorKind::out_of_range, "partition does not match the structure");
    }
    UnionFind uf(n);
    for (auto const& block : start.blocks()) {
      for (auto x : block) {
        uf.unite(block.front(), x);
      }
    }
    uf.unite(a, b);
    // Compatibility only needs checking against a representative of each
    // class, so iterate x ~ root(x) until nothing merges.
    bool changed = true;
    while (changed) {
      changed = false;
      for (point_type x = 0; x < n; ++x) {
        auto const y = uf.find(x);
        if (x == y) {
          continue;
        }
        for (point_type z = 0; z < n; ++z) {
          changed |= uf.unite(X.dot(x, z), X.dot(y, z));
          changed |= uf.unite(X.dot(z, x), X.dot(z, y));
          changed |= uf.unite(X.colon(x, z), X.colon(y, z));
          changed |= uf.unite(X.colon(z, x), X.colon(z, y));
        }
      }
    }
    std::vector<point_type> labels(n);
    for (point_type x = 0; x < n; ++x) {
      labels[x] = uf.find(x);
    }
    return CongruencePartition(labels);
  }

  std::vector<CongruencePartition> enumerate_congruences(QCycleSet const& X) {
    check_guard(X);
    auto const                    n = static_cast<point_type>(X.size());
    std::set<CongruencePartition> seen{CongruencePartition::discrete(n)};
    std::deque<CongruencePartition> queue(seen.begin(), seen.end());
    while (!queue.empty()) {
      auto c = std::move(queue.front());
      queue.pop_front();
      for (point_type a = 0; a < n; ++a) {
        for (point_type b = a + 1; b < n; ++b) {
          if (c.block_of(a) == c.block_of(b)) {
            continue;
          }
          auto joined = congruence_closure(X, c, a, b);
          if (seen.insert(joined).second) {
            queue.push_back(std::move(joined));
          }
        }
      }
    }
    std::vector<CongruencePartition> result;
    for (auto const& c : seen) {
      auto const& bo = c.block_of();
      bool        ok = true;
      for (point_type x = 0; x < n && ok; ++x) {
        std::vector<bool> hit(c.block_count(), false);
        for (auto const& block : c.blocks()) {
          hit[bo[X.dot(x, block.front())]] = true;
        }
        ok = std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
      }
      if (ok) {
        result.push_back(c);
      }
    }
    return result;
  }

  std::vector<CongruencePartition> proper_uniform_congruences(QCycleSet const& X) {
    std::vector<CongruencePartition> result;
    for (auto& c : enumerate_congruences(X)) {
      if (c.is_uniform() && !c.is_discrete() && !c.is_full()) {
        result.push_back(std::move(c));
      }
    }
    return result;
  }

  bool is_simple(QCycleSet const& X) {
    return proper_uniform_congruences(X).empty();
  }

}  // namespace qcs
