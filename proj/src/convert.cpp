#include "qcs/convert.hpp"

#include <string>

namespace qcs {

  SolutionMap qcs_to_solution(QCycleSet const& X) {
    return SolutionMap::generate(X.size(), [&X](point_type x, point_type y) {
      auto const u = X.sigma_inverse(x, y);
      return SolutionMap::pair_type{u, X.colon(u, x)};
    });
  }

  QCycleSet solution_to_qcs(SolutionMap const& s) {
    auto const              n = static_cast<point_type>(s.size());
    std::vector<point_type> lambda_inv(std::size_t(n) * n, n);
    for (point_type x = 0; x < n; ++x) {
      for (point_type y = 0; y < n; ++y) {
        auto& slot = lambda_inv[x * n + s.lambda(x, y)];
        if (slot != n) {
          throw Error(ErrorKind::not_left_nondegenerate,
                      "lambda_" + std::to_string(x) + " is not injective");
        }
        slot = y;
      }
    }
    auto dot = OpTable::generate(
        n, [&](point_type x, point_type y) { return lambda_inv[x * n + y]; });
    auto colon = OpTable::generate(n, [&](point_type x, point_type y) {
      return s.rho(lambda_inv[y * n + x], y);
    });
    return QCycleSet(std::move(dot), std::move(colon));
  }

}  // namespace qcs
