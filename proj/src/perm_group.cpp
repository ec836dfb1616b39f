#include "qcs/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "qcs/convert.hpp"
#include "qcs/iso.hpp"

namespace qcs {

  namespace {
    std::string label_name(GeneratorLabel const& l) {
      switch (l.kind) {
        case GeneratorLabel::Kind::sigma: return "sigma_" + std::to_string(l.index);
        case GeneratorLabel::Kind::delta: return "delta_" + std::to_string(l.index);
        case GeneratorLabel::Kind::lambda: return "lambda_" + std::to_string(l.index);
        case GeneratorLabel::Kind::eta: return "eta_" + std::to_string(l.index);
        case GeneratorLabel::Kind::automorphism:
          return "aut_" + std::to_string(l.index);
        case GeneratorLabel::Kind::other: return "g_" + std::to_string(l.index);
      }
      return "g";
    }

    point_type find_root(std::vector<point_type>& parent, point_type x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    }
  }  // namespace

  GenPermGroup::GenPermGroup(std::size_t                 degree,
                             std::vector<Perm>           generators,
                             std::vector<GeneratorLabel> labels,
                             std::size_t                 budget)
      : _degree(degree),
        _generators(std::move(generators)),
        _labels(std::move(labels)) {
    if (_labels.size() != _generators.size()) {
      throw Error(ErrorKind::degree_mismatch,
                  "one label per generator required");
    }
    for (auto const& g : _generators) {
      if (g.degree() != degree) {
        throw Error(ErrorKind::degree_mismatch, "generator has wrong degree");
      }
    }
    std::unordered_set<Perm, PermHash> seen;
    std::vector<Perm>                  frontier{Perm::identity(degree)};
    seen.insert(frontier.front());
    // Right multiplication by generators reaches every product of
    // generators; in a finite group that is the whole generated group.
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (auto const& g : _generators) {
        auto next = compose(frontier[i], g);
        if (seen.insert(next).second) {
          if (seen.size() > budget) {
            throw Error(ErrorKind::budget_exceeded,
                        "group closure exceeded " + std::to_string(budget)
                            + " elements");
          }
          frontier.push_back(std::move(next));
        }
      }
    }
    _elements = std::move(frontier);
    std::sort(_elements.begin(), _elements.end());

    std::vector<point_type> parent(degree);
    std::iota(parent.begin(), parent.end(), point_type(0));
    for (auto const& g : _generators) {
      for (point_type x = 0; x < degree; ++x) {
        auto a = find_root(parent, x), b = find_root(parent, g(x));
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      }
    }
    std::vector<std::size_t> slot(degree, degree);
    for (point_type x = 0; x < degree; ++x) {
      auto r = find_root(parent, x);
      if (slot[r] == degree) {
        slot[r] = _orbits.size();
        _orbits.emplace_back();
      }
      _orbits[slot[r]].push_back(x);
    }
  }

  bool GenPermGroup::contains(Perm const& p) const {
    return std::binary_search(_elements.begin(), _elements.end(), p);
  }

  GenPermGroup perm_group(QCycleSet const& X, std::size_t budget) {
    if (!is_regular(X)) {
      throw Error(ErrorKind::not_regular,
                  "the permutation group needs every delta_x bijective");
    }
    std::vector<Perm>           gens;
    std::vector<GeneratorLabel> labels;
    for (point_type x = 0; x < X.size(); ++x) {
      gens.push_back(X.sigma(x));
      labels.push_back({GeneratorLabel::Kind::sigma, x});
    }
    for (point_type x = 0; x < X.size(); ++x) {
      gens.push_back(X.delta(x));
      labels.push_back({GeneratorLabel::Kind::delta, x});
    }
    return GenPermGroup(X.size(), std::move(gens), std::move(labels), budget);
  }

  std::vector<std::vector<point_type>> eta_maps(SolutionMap const& s) {
    if (!is_left_nondeg(s)) {
      throw Error(ErrorKind::not_left_nondegenerate,
                  "eta maps need every lambda_x bijective");
    }
    auto const              n = static_cast<point_type>(s.size());
    std::vector<point_type> lambda_inv(std::size_t(n) * n);
    for (point_type y = 0; y < n; ++y) {
      for (point_type z = 0; z < n; ++z) {
        lambda_inv[y * n + s.lambda(y, z)] = z;
      }
    }
    std::vector<std::vector<point_type>> eta(n, std::vector<point_type>(n));
    for (point_type x = 0; x < n; ++x) {
      for (point_type y = 0; y < n; ++y) {
        eta[x][y] = s.rho(lambda_inv[y * n + x], y);
      }
    }
    return eta;
  }

  GenPermGroup lambda_eta_group(SolutionMap const& s, std::size_t budget) {
    auto const                  eta = eta_maps(s);
    auto const                  n   = static_cast<point_type>(s.size());
    std::vector<Perm>           gens;
    std::vector<GeneratorLabel> labels;
    for (point_type x = 0; x < n; ++x) {
      std::vector<point_type> row(n);
      for (point_type y = 0; y < n; ++y) {
        row[y] = s.lambda(x, y);
      }
      gens.emplace_back(std::move(row));
      labels.push_back({GeneratorLabel::Kind::lambda, x});
    }
    for (point_type x = 0; x < n; ++x) {
      if (!is_bijection(eta[x])) {
        throw Error(ErrorKind::not_regular,
                    "eta_" + std::to_string(x) + " is not bijective");
      }
      gens.emplace_back(eta[x]);
      labels.push_back({GeneratorLabel::Kind::eta, x});
    }
    return GenPermGroup(n, std::move(gens), std::move(labels), budget);
  }

  QCycleSet restrict_to_invariant(QCycleSet const&              X,
                                  std::vector<point_type> const& subset) {
    if (!is_regular(X)) {
      throw Error(ErrorKind::not_regular,
                  "invariant subsets are defined for regular q-cycle sets");
    }
    auto const              n = static_cast<point_type>(X.size());
    std::vector<point_type> index(n, n);
    std::vector<point_type> members;
    for (auto y : subset) {
      if (y >= n) {
        throw Error(ErrorKind::out_of_range, "subset point outside carrier");
      }
      index[y] = 0;
    }
    for (point_type y = 0; y < n; ++y) {
      if (index[y] == 0) {
        index[y] = static_cast<point_type>(members.size());
        members.push_back(y);
      }
    }
    for (point_type x = 0; x < n; ++x) {
      for (auto y : members) {
        for (int op = 0; op < 2; ++op) {
          auto const image = op == 0 ? X.dot(x, y) : X.colon(x, y);
          if (index[image] == n) {
            GeneratorLabel g{op == 0 ? GeneratorLabel::Kind::sigma
                                     : GeneratorLabel::Kind::delta,
                             x};
            throw Error(ErrorKind::not_invariant,
                        label_name(g) + " maps " + std::to_string(y) + " to "
                            + std::to_string(image) + " outside the subset");
          }
        }
      }
    }
    auto const m = members.size();
    return QCycleSet(
        OpTable::generate(m,
                          [&](point_type a, point_type b) {
                            return index[X.dot(members[a], members[b])];
                          }),
        OpTable::generate(m, [&](point_type a, point_type b) {
          return index[X.colon(members[a], members[b])];
        }));
  }

  GenPermGroup automorphism_group(QCycleSet const& X) {
    auto                        auts = automorphisms(X);
    std::vector<GeneratorLabel> labels;
    for (point_type i = 0; i < auts.size(); ++i) {
      labels.push_back({GeneratorLabel::Kind::automorphism, i});
    }
    return GenPermGroup(X.size(), std::move(auts), std::move(labels));
  }

}  // namespace qcs
