#include "qcs/covering.hpp"

#include <string>

#include "qcs/retract.hpp"

namespace qcs {

  CoveringMap::CoveringMap(QCycleSet source_, QCycleSet target_, std::vector<point_type> p_)
      : source(std::move(source_)), target(std::move(target_)), p(std::move(p_)) {
    if (p.size() != source.size()) {
      throw Error(ErrorKind::degree_mismatch,
                  "map has " + std::to_string(p.size()) + " entries, source has "
                      + std::to_string(source.size()) + " points");
    }
    for (auto v : p) {
      if (v >= target.size()) {
        throw Error(ErrorKind::out_of_range,
                    "map value " + std::to_string(v) + " outside the target");
      }
    }
  }

  VerificationReport verify_covering(CoveringMap const& c) {
    VerificationReport report;
    auto const         n = static_cast<point_type>(c.source.size());
    auto const&        p = c.p;
    for (point_type y = 0; y < n; ++y) {
      for (point_type z = 0; z < n; ++z) {
        auto const l1 = p[c.source.dot(y, z)], r1 = c.target.dot(p[y], p[z]);
        if (l1 != r1) {
          report.add({Law::homomorphism_dot, {y, z}, {l1}, {r1}});
        }
        auto const l2 = p[c.source.colon(y, z)], r2 = c.target.colon(p[y], p[z]);
        if (l2 != r2) {
          report.add({Law::homomorphism_colon, {y, z}, {l2}, {r2}});
        }
      }
    }
    std::vector<std::size_t> fiber(c.target.size(), 0);
    for (auto v : p) {
      ++fiber[v];
    }
    for (point_type x = 0; x < fiber.size(); ++x) {
      if (fiber[x] == 0) {
        report.add({Law::surjectivity, {x}, {0}, {1}});
      } else if (fiber[x] != fiber[0]) {
        report.add({Law::fiber_uniformity,
                    {x},
                    {static_cast<point_type>(fiber[x])},
                    {static_cast<point_type>(fiber[0])}});
      }
    }
    return report;
  }

  CongruencePartition kernel_partition(CoveringMap const& c) {
    return CongruencePartition(c.p);
  }

  CoveringFactorization factor_covering(CoveringMap const& c) {
    auto report = verify_covering(c);
    if (!report.ok()) {
      throw Error(ErrorKind::invalid_covering, "not a covering map: " + report.summary());
    }
    auto const n = c.target.size();
    auto const m = c.source.size() / n;

    // fiber[x][s] = f_x^{-1}(s);  pos[y] = f_{p(y)}(y)
    std::vector<std::vector<point_type>> fiber(n);
    std::vector<point_type>              pos(c.source.size());
    for (point_type y = 0; y < c.source.size(); ++y) {
      pos[y] = static_cast<point_type>(fiber[c.p[y]].size());
      fiber[c.p[y]].push_back(y);
    }

    auto const& Y    = c.source;
    auto        pair = DynamicalPair::generate(
        c.target,
        m,
        [&](point_type x, point_type z, point_type s, point_type t) {
          return pos[Y.dot(fiber[x][s], fiber[z][t])];
        },
        [&](point_type x, point_type z, point_type s, point_type t) {
          return pos[Y.colon(fiber[x][s], fiber[z][t])];
        });

    std::vector<point_type> phi(c.source.size());
    for (point_type y = 0; y < c.source.size(); ++y) {
      phi[y] = static_cast<point_type>(c.p[y] * m + pos[y]);
    }
    return {m, std::move(pair), Perm(std::move(phi))};
  }

  CoveringMap quotient_map(QCycleSet const& X, CongruencePartition const& c) {
    return CoveringMap(X, quotient_by(X, c.block_of()), c.block_of());
  }

}  // namespace qcs
