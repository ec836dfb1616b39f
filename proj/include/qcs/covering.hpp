#pragma once

#include <cstddef>
#include <vector>

#include "qcs/congruence.hpp"
#include "qcs/dynamical_pair.hpp"
#include "qcs/perm.hpp"
#include "qcs/qcycle_set.hpp"
#include "qcs/report.hpp"

namespace qcs {

  // A point map p: source -> target. Only sizes and ranges are checked on
  // construction; the covering laws are checked by verify_covering.
  struct CoveringMap {
    CoveringMap(QCycleSet source, QCycleSet target, std::vector<point_type> p);

    QCycleSet               source;
    QCycleSet               target;
    std::vector<point_type> p;
  };

  // Reports homomorphism-dot / homomorphism-colon (witness y, z),
  // surjectivity (witness x) and fiber-uniformity (witness x, |fiber|,
  // |first fiber|).
  VerificationReport verify_covering(CoveringMap const& c);

  // The fibers of p as a partition of the source.
  CongruencePartition kernel_partition(CoveringMap const& c);

  struct CoveringFactorization {
    std::size_t   m;
    DynamicalPair pair;
    // phi(y) = p(y) * m + (position of y in its fiber)
    Perm phi;
  };

  // Builds a dynamical pair over the target with
  //   a_{(x,z)}(s,t)  = f_{x.z}(f_x^{-1}(s) . f_z^{-1}(t)),
  //   a'_{(x,z)}(s,t) = f_{x:z}(f_x^{-1}(s) : f_z^{-1}(t)),
  // f_x listing the fiber over x in increasing order. Throws
  // Error(invalid_covering) unless verify_covering(c) is ok.
  CoveringFactorization factor_covering(CoveringMap const& c);

  // The quotient map X -> X / c for a congruence c.
  CoveringMap quotient_map(QCycleSet const& X, CongruencePartition const& c);

}  // namespace qcs
