#include "qcs/solution.hpp"

#include "qcs/perm.hpp"

#include <algorithm>
#include <string>

namespace qcs {

  SolutionMap::SolutionMap(std::size_t n, std::vector<pair_type> r)
      : _n(n), _r(std::move(r)) {
    if (_r.size() != n * n) {
      throw Error(ErrorKind::out_of_range,
                  "solution of size " + std::to_string(n) + " needs "
                      + std::to_string(n * n) + " pairs");
    }
    for (auto const& [a, b] : _r) {
      if (a >= n || b >= n) {
        throw Error(ErrorKind::out_of_range,
                    "solution value outside {0,...," + std::to_string(n - 1)
                        + "}");
      }
    }
  }

  SolutionMap SolutionMap::swap(std::size_t n) {
    return generate(n, [](point_type x, point_type y) {
      return pair_type{y, x};
    });
  }

  std::vector<std::size_t> SolutionMap::as_flat_map() const {
    std::vector<std::size_t> f(_n * _n);
    for (std::size_t i = 0; i < f.size(); ++i) {
      f[i] = _r[i].first * _n + _r[i].second;
    }
    return f;
  }

  VerificationReport verify_solution(SolutionMap const& s) {
    VerificationReport report;
    auto const         n = static_cast<point_type>(s.size());
    for (point_type x = 0; x < n; ++x) {
      for (point_type y = 0; y < n; ++y) {
        for (point_type z = 0; z < n; ++z) {
          // r1 r2 r1 (x, y, z)
          auto [a1, b1] = s(x, y);
          auto [b2, c2] = s(b1, z);
          auto [a3, b3] = s(a1, b2);
          // r2 r1 r2 (x, y, z)
          auto [p1, q1] = s(y, z);
          auto [o2, p2] = s(x, p1);
          auto [p3, q3] = s(p2, q1);
          if (a3 != o2 || b3 != p3 || c2 != q3) {
            report.add({Law::braid, {x, y, z}, {a3, b3, c2}, {o2, p3, q3}});
          }
        }
      }
    }
    return report;
  }

  bool is_bijective_solution(SolutionMap const& s) {
    auto                    f = s.as_flat_map();
    std::vector<point_type> im(f.begin(), f.end());
    return is_bijection(im);
  }

  bool is_left_nondeg(SolutionMap const& s) {
    auto const              n = static_cast<point_type>(s.size());
    std::vector<point_type> row(n);
    for (point_type x = 0; x < n; ++x) {
      for (point_type y = 0; y < n; ++y) {
        row[y] = s.lambda(x, y);
      }
      if (!is_bijection(row)) {
        return false;
      }
    }
    return true;
  }

  bool is_right_nondeg(SolutionMap const& s) {
    auto const              n = static_cast<point_type>(s.size());
    std::vector<point_type> row(n);
    for (point_type y = 0; y < n; ++y) {
      for (point_type x = 0; x < n; ++x) {
        row[x] = s.rho(y, x);
      }
      if (!is_bijection(row)) {
        return false;
      }
    }
    return true;
  }

  namespace {
    std::vector<std::size_t> power(std::vector<std::size_t> const& f,
                                   std::size_t                     k) {
      std::vector<std::size_t> result(f.size());
      for (std::size_t i = 0; i < f.size(); ++i) {
        result[i] = i;
      }
      for (std::size_t j = 0; j < k; ++j) {
        for (auto& v : result) {
          v = f[v];
        }
      }
      return result;
    }
  }  // namespace

  bool solution_power_eq(SolutionMap const& s, std::size_t a, std::size_t b) {
    auto const f = s.as_flat_map();
    return power(f, a) == power(f, b);
  }

  std::pair<std::size_t, std::size_t> minimal_power_relation(
      SolutionMap const& s,
      std::size_t        bound) {
    auto const                            f = s.as_flat_map();
    std::vector<std::vector<std::size_t>> powers{power(f, 0)};
    for (std::size_t a = 1; a <= bound; ++a) {
      std::vector<std::size_t> next(f.size());
      for (std::size_t i = 0; i < f.size(); ++i) {
        next[i] = f[powers.back()[i]];
      }
      for (std::size_t b = 0; b < a; ++b) {
        if (powers[b] == next) {
          return {a, b};
        }
      }
      powers.push_back(std::move(next));
    }
    return {0, 0};
  }

}  // namespace qcs
