#include "qcs/retract.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "qcs/convert.hpp"

namespace qcs {

  namespace {
    std::size_t class_count(std::vector<point_type> const& class_of) {
      return class_of.empty()
                 ? 0
                 : *std::max_element(class_of.begin(), class_of.end()) + 1;
    }

    std::string pair_str(point_type a, point_type b) {
      return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }

    void require_nondegenerate_solution(SolutionMap const& s) {
      if (!is_bijective_solution(s) || !is_left_nondeg(s)
          || !is_right_nondeg(s)) {
        throw Error(ErrorKind::not_nondegenerate,
                    "expected a bijective non-degenerate solution");
      }
    }
  }  // namespace

  std::vector<point_type> retract_classes(QCycleSet const& X) {
    auto const n = static_cast<point_type>(X.size());
    std::map<std::pair<std::vector<point_type>, std::vector<point_type>>,
             point_type>
                            index;
    std::vector<point_type> class_of(n);
    for (point_type x = 0; x < n; ++x) {
      auto d = X.dot().row(x);
      auto c = X.colon().row(x);
      auto key = std::make_pair(std::vector<point_type>(d.begin(), d.end()),
                                std::vector<point_type>(c.begin(), c.end()));
      auto [it, inserted] =
          index.emplace(std::move(key), static_cast<point_type>(index.size()));
      class_of[x] = it->second;
    }
    return class_of;
  }

  bool is_congruence(QCycleSet const&              X,
                     std::vector<point_type> const& class_of) {
    auto const n = static_cast<point_type>(X.size());
    for (point_type x = 0; x < n; ++x) {
      for (point_type y = 0; y < n; ++y) {
        if (class_of[x] != class_of[y]) {
          continue;
        }
        for (point_type z = 0; z < n; ++z) {
          if (class_of[X.dot(x, z)] != class_of[X.dot(y, z)]
              || class_of[X.dot(z, x)] != class_of[X.dot(z, y)]
              || class_of[X.colon(x, z)] != class_of[X.colon(y, z)]
              || class_of[X.colon(z, x)] != class_of[X.colon(z, y)]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  QCycleSet quotient_by(QCycleSet const&              X,
                        std::vector<point_type> const& class_of) {
    auto const n = static_cast<point_type>(X.size());
    if (class_of.size() != n) {
      throw Error(ErrorKind::degree_mismatch, "partition has wrong size");
    }
    auto const              k = class_count(class_of);
    std::vector<point_type> rep(k, n);
    for (point_type x = 0; x < n; ++x) {
      if (rep[class_of[x]] == n) {
        rep[class_of[x]] = x;
      }
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (rep[c] == n) {
        throw Error(ErrorKind::out_of_range, "partition skips a class index");
      }
    }
    OpTable dot(k), colon(k);
    for (point_type a = 0; a < k; ++a) {
      for (point_type b = 0; b < k; ++b) {
        dot.set(a, b, class_of[X.dot(rep[a], rep[b])]);
        colon.set(a, b, class_of[X.colon(rep[a], rep[b])]);
      }
    }
    for (point_type x = 0; x < n; ++x) {
      for (point_type y = 0; y < n; ++y) {
        auto const a = class_of[x], b = class_of[y];
        if (class_of[X.dot(x, y)] != dot(a, b)
            || class_of[X.colon(x, y)] != colon(a, b)) {
          throw Error(ErrorKind::quotient_not_qcycle_set,
                      "class operation depends on representatives at "
                          + pair_str(x, y));
        }
      }
    }
    auto report = verify_qcycle(dot, colon);
    if (!report.ok()) {
      throw Error(ErrorKind::quotient_not_qcycle_set,
                  "quotient tables fail: " + report.summary());
    }
    return QCycleSet(QCycleSet::unchecked, std::move(dot), std::move(colon));
  }

  RetractQuotient retract(QCycleSet const& X) {
    if (!is_regular(X)) {
      throw Error(ErrorKind::not_regular,
                  "the retract relation is defined for regular q-cycle sets");
    }
    auto class_of = retract_classes(X);
    auto quotient = quotient_by(X, class_of);
    std::vector<std::vector<point_type>> classes(quotient.size());
    for (point_type x = 0; x < X.size(); ++x) {
      classes[class_of[x]].push_back(x);
    }
    return {std::move(classes), std::move(quotient), std::move(class_of)};
  }

  RetractTower retract_tower(QCycleSet const& X, std::size_t max_steps) {
    RetractTower tower;
    tower.levels.push_back(X);
    for (std::size_t step = 0; step < max_steps; ++step) {
      auto next = retract(tower.levels.back()).quotient;
      if (next.size() == tower.levels.back().size()) {
        tower.stabilized    = true;
        tower.irretractable = (step == 0);
        return tower;
      }
      tower.levels.push_back(std::move(next));
    }
    return tower;
  }

  SolutionMap retract_solution(SolutionMap const& s) {
    require_nondegenerate_solution(s);
    auto const X        = solution_to_qcs(s);
    auto const class_of = retract(X).class_of;
    auto const k        = class_count(class_of);
    auto const n        = static_cast<point_type>(s.size());
    std::vector<SolutionMap::pair_type> rbar(k * k);
    std::vector<bool>                   seen(k * k, false);
    for (point_type x = 0; x < n; ++x) {
      for (point_type y = 0; y < n; ++y) {
        auto const l   = s.lambda(x, y);
        auto const val = SolutionMap::pair_type{class_of[l],
                                                class_of[X.colon(l, x)]};
        auto const idx = class_of[x] * k + class_of[y];
        if (seen[idx] && rbar[idx] != val) {
          throw Error(ErrorKind::ill_defined,
                      "induced map depends on representatives at "
                          + pair_str(x, y));
        }
        seen[idx] = true;
        rbar[idx] = val;
      }
    }
    return SolutionMap(k, std::move(rbar));
  }

  bool retract_matches_lambda_rho(SolutionMap const& s) {
    require_nondegenerate_solution(s);
    auto const X        = solution_to_qcs(s);
    auto const class_of = retract_classes(X);
    auto const n        = static_cast<point_type>(s.size());
    for (point_type x = 0; x < n; ++x) {
      for (point_type y = 0; y < n; ++y) {
        bool same = true;
        for (point_type z = 0; z < n && same; ++z) {
          same = s.lambda(x, z) == s.lambda(y, z) && s.rho(x, z) == s.rho(y, z);
        }
        if (same != (class_of[x] == class_of[y])) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace qcs
