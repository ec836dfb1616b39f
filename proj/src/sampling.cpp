#include "qcs/sampling.hpp"

#include <algorithm>
#include <numeric>

namespace qcs {

  DynamicalPair random_pair(QCycleSet const& base,
                            std::size_t      m,
                            std::mt19937_64& rng,
                            bool             bijective_prime) {
    auto const              n     = base.size();
    auto const              cells = n * n * m;
    std::vector<point_type> alpha, alpha_prime;
    alpha.reserve(cells * m);
    alpha_prime.reserve(cells * m);
    std::vector<point_type>                   row(m);
    std::uniform_int_distribution<point_type> pick(0, static_cast<point_type>(m - 1));
    for (std::size_t c = 0; c < cells; ++c) {
      std::iota(row.begin(), row.end(), 0);
      std::shuffle(row.begin(), row.end(), rng);
      alpha.insert(alpha.end(), row.begin(), row.end());
      if (bijective_prime) {
        std::shuffle(row.begin(), row.end(), rng);
      } else {
        std::generate(row.begin(), row.end(), [&] { return pick(rng); });
      }
      alpha_prime.insert(alpha_prime.end(), row.begin(), row.end());
    }
    return DynamicalPair(base, m, std::move(alpha), std::move(alpha_prime));
  }

  bool regularity_criterion(DynamicalPair const& d) {
    auto const n          = static_cast<point_type>(d.base().size());
    auto const m          = static_cast<point_type>(d.fiber_size());
    bool       rows_bijec = true;
    for (point_type x = 0; x < n && rows_bijec; ++x) {
      for (point_type y = 0; y < n && rows_bijec; ++y) {
        for (point_type s = 0; s < m && rows_bijec; ++s) {
          rows_bijec = is_bijection(d.alpha_prime_row(x, y, s));
        }
      }
    }
    auto const predicted = is_regular(d.base()) && rows_bijec;
    return is_regular(build_extension(d)) == predicted;
  }

  PairSampleStats sample_extension_equivalence(std::vector<QCycleSet> const& bases,
                                               std::size_t                   max_m,
                                               std::size_t                   count,
                                               std::uint64_t                 seed) {
    PairSampleStats                            stats;
    std::mt19937_64                            rng(seed);
    std::uniform_int_distribution<std::size_t> pick_base(0, bases.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_m(1, max_m);
    for (std::size_t i = 0; i < count; ++i) {
      auto const& base = bases[pick_base(rng)];
      auto const  m    = pick_m(rng);
      auto const  d    = random_pair(base, m, rng, i % 2 == 1);
      ++stats.samples;
      bool const equivalent = extension_equivalence(d);
      stats.equivalence_holds += equivalent;
      bool regular_ok = true;
      if (verify_dynamical_pair(d).ok()) {
        ++stats.pairs_valid;
        ++stats.regularity_checked;
        regular_ok = regularity_criterion(d);
        stats.regularity_holds += regular_ok;
      }
      if (!equivalent || !regular_ok) {
        stats.failures.push_back(i);
      }
    }
    return stats;
  }

}  // namespace qcs
