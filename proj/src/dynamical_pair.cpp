#include "qcs/dynamical_pair.hpp"

#include <string>

namespace qcs {

  DynamicalPair::DynamicalPair(QCycleSet               base,
                               std::size_t             m,
                               std::vector<point_type> alpha,
                               std::vector<point_type> alpha_prime)
      : _base(std::move(base)),
        _m(m),
        _alpha(std::move(alpha)),
        _alpha_prime(std::move(alpha_prime)) {
    auto const expected = _base.size() * _base.size() * m * m;
    if (m == 0 || _alpha.size() != expected || _alpha_prime.size() != expected) {
      throw Error(ErrorKind::out_of_range,
                  "pair tables need " + std::to_string(expected) + " entries");
    }
    for (std::size_t i = 0; i < expected; ++i) {
      if (_alpha[i] >= m || _alpha_prime[i] >= m) {
        throw Error(ErrorKind::out_of_range, "pair value outside the fibre");
      }
    }
  }

  VerificationReport verify_dynamical_pair(DynamicalPair const& d) {
    VerificationReport report;
    auto const&        X = d.base();
    auto const         n = static_cast<point_type>(X.size());
    auto const         m = static_cast<point_type>(d.fiber_size());
    for (point_type x = 0; x < n; ++x) {
      for (point_type y = 0; y < n; ++y) {
        for (point_type s = 0; s < m; ++s) {
          if (!is_bijection(d.alpha_row(x, y, s))) {
            report.add({Law::alpha_bijectivity, {x, y, s}, {}, {}});
          }
        }
      }
    }
    for (point_type x = 0; x < n; ++x) {
      for (point_type y = 0; y < n; ++y) {
        auto const xy = X.dot(x, y), yx = X.dot(y, x);
        auto const cxy = X.colon(x, y), cyx = X.colon(y, x);
        for (point_type z = 0; z < n; ++z) {
          auto const xz = X.dot(x, z), yz = X.dot(y, z);
          auto const cxz = X.colon(x, z), cyz = X.colon(y, z);
          for (point_type s = 0; s < m; ++s) {
            for (point_type t = 0; t < m; ++t) {
              for (point_type u = 0; u < m; ++u) {
                auto const a_xy_st  = d.alpha(x, y, s, t);
                auto const a_xz_su  = d.alpha(x, z, s, u);
                auto const ap_yx_ts = d.alpha_prime(y, x, t, s);
                auto const a_yz_tu  = d.alpha(y, z, t, u);
                auto const ap_yz_tu = d.alpha_prime(y, z, t, u);

                auto const l1 = d.alpha(xy, xz, a_xy_st, a_xz_su);
                auto const r1 = d.alpha(cyx, yz, ap_yx_ts, a_yz_tu);
                if (l1 != r1) {
                  report.add({Law::ugd1, {x, y, z, s, t, u}, {l1}, {r1}});
                }
                auto const l2 = d.alpha_prime(
                    cxy, cxz, d.alpha_prime(x, y, s, t), d.alpha_prime(x, z, s, u));
                auto const r2 =
                    d.alpha_prime(yx, cyz, d.alpha(y, x, t, s), ap_yz_tu);
                if (l2 != r2) {
                  report.add({Law::ugd2, {x, y, z, s, t, u}, {l2}, {r2}});
                }
                auto const l3 = d.alpha_prime(xy, xz, a_xy_st, a_xz_su);
                auto const r3 = d.alpha(cyx, cyz, ap_yx_ts, ap_yz_tu);
                if (l3 != r3) {
                  report.add({Law::ugd3, {x, y, z, s, t, u}, {l3}, {r3}});
                }
              }
            }
          }
        }
      }
    }
    return report;
  }

  std::pair<OpTable, OpTable> product_tables(DynamicalPair const& d) {
    auto const& X = d.base();
    auto const  m = static_cast<point_type>(d.fiber_size());
    auto const  N = X.size() * m;
    auto dot = OpTable::generate(N, [&](point_type a, point_type b) {
      auto const x = a / m, s = a % m, y = b / m, t = b % m;
      return X.dot(x, y) * m + d.alpha(x, y, s, t);
    });
    auto colon = OpTable::generate(N, [&](point_type a, point_type b) {
      auto const x = a / m, s = a % m, y = b / m, t = b % m;
      return X.colon(x, y) * m + d.alpha_prime(x, y, s, t);
    });
    return {std::move(dot), std::move(colon)};
  }

  QCycleSet build_extension(DynamicalPair const& d) {
    auto report = verify_dynamical_pair(d);
    if (!report.ok()) {
      throw Error(ErrorKind::invalid_pair,
                  "not a dynamical pair: " + report.summary());
    }
    auto [dot, colon] = product_tables(d);
    return QCycleSet(std::move(dot), std::move(colon));
  }

  bool extension_equivalence(DynamicalPair const& d) {
    auto const pair_ok    = verify_dynamical_pair(d).ok();
    auto [dot, colon]     = product_tables(d);
    auto const product_ok = verify_qcycle(dot, colon).ok();
    return pair_ok == product_ok;
  }

}  // namespace qcs
