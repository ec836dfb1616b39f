#include "qcs/semidirect.hpp"

#include <sstream>
#include <string>

#include "qcs/perm_group.hpp"

namespace qcs {

  void check_semidirect_data(QCycleSet const& X, QCycleSet const& S, std::vector<Perm> const& theta) {
    auto const n = static_cast<point_type>(X.size());
    if (theta.size() != n) {
      throw Error(ErrorKind::degree_mismatch,
                  "theta needs one permutation per point of X");
    }
    auto const aut = automorphism_group(S);
    for (point_type x = 0; x < n; ++x) {
      if (theta[x].degree() != S.size() || !aut.contains(theta[x])) {
        std::ostringstream os;
        os << "theta_" << x << " = " << theta[x] << " is not an automorphism of S";
        throw Error(ErrorKind::not_automorphism, os.str());
      }
    }
    for (point_type x = 0; x < n; ++x) {
      for (point_type y = 0; y < n; ++y) {
        if (compose(theta[X.dot(x, y)], theta[x]) != compose(theta[X.colon(y, x)], theta[y])) {
          throw Error(ErrorKind::compatibility_failed,
                      "theta_{x.y} theta_x != theta_{y:x} theta_y at (x,y) = ("
                          + std::to_string(x) + "," + std::to_string(y) + ")");
        }
      }
    }
  }

  DynamicalPair semidirect_pair(QCycleSet const& X, QCycleSet const& S, std::vector<Perm> const& theta) {
    check_semidirect_data(X, S, theta);
    return DynamicalPair::generate(
        X,
        S.size(),
        [&](point_type x, point_type y, point_type s, point_type t) {
          return S.dot(theta[X.dot(x, y)](s), theta[X.colon(y, x)](t));
        },
        [&](point_type x, point_type y, point_type s, point_type t) {
          return S.colon(theta[X.colon(x, y)](s), theta[X.dot(y, x)](t));
        });
  }

  QCycleSet semidirect_product(QCycleSet const& X, QCycleSet const& S, std::vector<Perm> const& theta) {
    return build_extension(semidirect_pair(X, S, theta));
  }

}  // namespace qcs
