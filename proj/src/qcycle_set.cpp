#include "qcs/qcycle_set.hpp"

#include <sstream>

namespace qcs {

  VerificationReport verify_qcycle(OpTable const& dot, OpTable const& colon) {
    if (dot.degree() != colon.degree()) {
      throw Error(ErrorKind::degree_mismatch,
                  "dot has degree " + std::to_string(dot.degree())
                      + ", colon has degree "
                      + std::to_string(colon.degree()));
    }
    VerificationReport report;
    auto const         n = static_cast<point_type>(dot.degree());
    for (point_type x = 0; x < n; ++x) {
      if (dot.row_is_bijective(x)) {
        continue;
      }
      // witness (x, y, y') with y < y' and x.y = x.y'
      for (point_type y = 0; y < n; ++y) {
        for (point_type z = y + 1; z < n; ++z) {
          if (dot(x, y) == dot(x, z)) {
            report.add({Law::row_bijectivity, {x, y, z}, {dot(x, y)}, {dot(x, z)}});
            y = z = n;
          }
        }
      }
    }
    for (point_type x = 0; x < n; ++x) {
      for (point_type y = 0; y < n; ++y) {
        auto const xy  = dot(x, y);
        auto const yx  = dot(y, x);
        auto const cyx = colon(y, x);
        auto const cxy = colon(x, y);
        for (point_type z = 0; z < n; ++z) {
          auto const xz = dot(x, z);
          auto const yz = dot(y, z);
          auto const l1 = dot(xy, xz);
          auto const r1 = dot(cyx, yz);
          if (l1 != r1) {
            report.add({Law::axiom_1, {x, y, z}, {l1}, {r1}});
          }
          auto const l2 = colon(cxy, colon(x, z));
          auto const r2 = colon(yx, colon(y, z));
          if (l2 != r2) {
            report.add({Law::axiom_2, {x, y, z}, {l2}, {r2}});
          }
          auto const l3 = colon(xy, xz);
          auto const r3 = dot(cyx, colon(y, z));
          if (l3 != r3) {
            report.add({Law::axiom_3, {x, y, z}, {l3}, {r3}});
          }
        }
      }
    }
    return report;
  }

  QCycleSet::QCycleSet(OpTable dot, OpTable colon)
      : _dot(std::move(dot)), _colon(std::move(colon)) {
    auto report = verify_qcycle(_dot, _colon);
    if (!report.ok()) {
      throw Error(ErrorKind::invalid_structure,
                  "tables do not form a q-cycle set: " + report.summary());
    }
    init_inverse();
  }

  QCycleSet::QCycleSet(unchecked_t, OpTable dot, OpTable colon)
      : _dot(std::move(dot)), _colon(std::move(colon)) {
    if (_dot.degree() != _colon.degree()) {
      throw Error(ErrorKind::degree_mismatch, "dot and colon differ in degree");
    }
    if (!_dot.all_rows_bijective()) {
      throw Error(ErrorKind::invalid_structure, "a dot row is not bijective");
    }
    init_inverse();
  }

  void QCycleSet::init_inverse() {
    auto const n = static_cast<point_type>(size());
    _dot_inverse.assign(std::size_t(n) * n, 0);
    for (point_type x = 0; x < n; ++x) {
      for (point_type y = 0; y < n; ++y) {
        _dot_inverse[x * n + _dot(x, y)] = y;
      }
    }
  }

  SquaringMaps squaring_maps(QCycleSet const& X) {
    SquaringMaps result;
    for (point_type x = 0; x < X.size(); ++x) {
      result.q.push_back(X.dot(x, x));
      result.q_prime.push_back(X.colon(x, x));
    }
    return result;
  }

  bool is_regular(QCycleSet const& X) {
    return X.colon().all_rows_bijective();
  }

  bool is_nondegenerate(QCycleSet const& X) {
    if (!is_regular(X)) {
      return false;
    }
    auto const sq = squaring_maps(X);
    return is_bijection(sq.q) && is_bijection(sq.q_prime);
  }

  bool is_cycle_set(QCycleSet const& X) {
    return X.dot() == X.colon();
  }

  QCycleSet relabel(QCycleSet const& X, Perm const& pi) {
    if (pi.degree() != X.size()) {
      throw Error(ErrorKind::degree_mismatch, "relabelling has wrong degree");
    }
    auto const              n = X.size();
    std::vector<point_type> dot(n * n), colon(n * n);
    for (point_type x = 0; x < n; ++x) {
      for (point_type y = 0; y < n; ++y) {
        dot[pi(x) * n + pi(y)]   = pi(X.dot(x, y));
        colon[pi(x) * n + pi(y)] = pi(X.colon(x, y));
      }
    }
    return QCycleSet(QCycleSet::unchecked,
                     OpTable(n, std::move(dot)),
                     OpTable(n, std::move(colon)));
  }

}  // namespace qcs
