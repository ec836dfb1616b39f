#include "qcs/families.hpp"

#include <algorithm>
#include <string>

namespace qcs {

  FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::uint32_t> moduli)
      : _moduli(std::move(moduli)) {
    for (auto m : _moduli) {
      if (m == 0) {
        throw Error(ErrorKind::out_of_range, "modulus must be positive");
      }
      _size *= m;
    }
  }

  point_type FiniteAbelianGroup::encode(std::vector<std::int64_t> const& coords) const {
    if (coords.size() != _moduli.size()) {
      throw Error(ErrorKind::degree_mismatch,
                  "element needs " + std::to_string(_moduli.size()) + " coordinates");
    }
    std::size_t result = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      auto const m = static_cast<std::int64_t>(_moduli[i]);
      result       = result * _moduli[i] + static_cast<std::size_t>(((coords[i] % m) + m) % m);
    }
    return static_cast<point_type>(result);
  }

  std::vector<std::uint32_t> FiniteAbelianGroup::decode(point_type a) const {
    std::vector<std::uint32_t> coords(_moduli.size());
    for (std::size_t i = _moduli.size(); i-- > 0;) {
      coords[i] = a % _moduli[i];
      a /= _moduli[i];
    }
    return coords;
  }

  point_type FiniteAbelianGroup::add(point_type a, point_type b) const {
    auto ca = decode(a), cb = decode(b);
    std::vector<std::int64_t> sum(ca.size());
    for (std::size_t i = 0; i < ca.size(); ++i) {
      sum[i] = std::int64_t(ca[i]) + cb[i];
    }
    return encode(sum);
  }

  point_type FiniteAbelianGroup::negate(point_type a) const {
    auto                      ca = decode(a);
    std::vector<std::int64_t> neg(ca.begin(), ca.end());
    for (auto& v : neg) {
      v = -v;
    }
    return encode(neg);
  }

  DynamicalPair trivial_pair(QCycleSet const& base, std::size_t m) {
    auto const proj = [](auto, auto, auto, auto t) { return t; };
    return DynamicalPair::generate(base, m, proj, proj);
  }

  DynamicalPair constant_cocycle_pair(QCycleSet const&                 X,
                                      std::vector<std::uint32_t> const& moduli,
                                      std::vector<std::int64_t> const&  a,
                                      std::vector<std::int64_t> const&  b,
                                      std::vector<std::int64_t> const&  a2,
                                      std::vector<std::int64_t> const&  b2) {
    if (!is_cycle_set(X)) {
      throw Error(ErrorKind::not_cycle_set,
                  "constant cocycles are defined over cycle sets");
    }
    FiniteAbelianGroup A(moduli);
    auto const         ea = A.encode(a), eb = A.encode(b);
    auto const         ea2 = A.encode(a2), eb2 = A.encode(b2);
    return DynamicalPair::generate(
        X,
        A.size(),
        [&](point_type x, point_type y, point_type, point_type t) {
          return A.add(t, x == y ? ea : eb);
        },
        [&](point_type x, point_type y, point_type, point_type t) {
          return A.add(t, x == y ? ea2 : eb2);
        });
  }

  DynamicalPair gxg_pair(std::size_t base_size, std::vector<std::uint32_t> const& moduli) {
    FiniteAbelianGroup G(moduli);
    auto const         g     = static_cast<point_type>(G.size());
    auto const         split = [g](point_type v) {
      return std::pair<point_type, point_type>{v / g, v % g};
    };
    auto const join = [g](point_type v1, point_type v2) { return v1 * g + v2; };
    return DynamicalPair::generate(
        trivial_qcycle_set(base_size),
        std::size_t(g) * g,
        [&](point_type x, point_type y, point_type s, point_type t) {
          auto [s1, s2] = split(s);
          auto [t1, t2] = split(t);
          if (x == y) {
            return join(G.sub(G.add(t1, t2), s2), t2);
          }
          return join(t1, G.add(t2, s1));
        },
        [&](point_type x, point_type y, point_type s, point_type t) {
          auto [s1, s2] = split(s);
          auto [t1, t2] = split(t);
          if (x == y) {
            return join(G.add(G.sub(t1, t2), s2), t2);
          }
          return join(t1, G.add(t2, s1));
        });
  }

  DynamicalPair semibrace_pair(FiniteGroup const& group, std::vector<point_type> const& f) {
    auto base = semibrace_qcycle_set(group, f);
    return DynamicalPair::generate(
        std::move(base),
        group.size(),
        [&](point_type x, point_type, point_type, point_type t) {
          return group.mul(group.inverse(x), t);
        },
        [&](point_type, point_type, point_type, point_type t) { return f[t]; });
  }

  DynamicalPair semibrace_pair(OpTable const& group_table, std::vector<point_type> const& f) {
    return semibrace_pair(FiniteGroup(group_table), f);
  }

  DynamicalPair quasinormal_pair(OpTable const& semigroup) {
    auto base = quasinormal_qcycle_set(semigroup);
    return DynamicalPair::generate(
        std::move(base),
        semigroup.degree(),
        [](point_type, point_type, point_type, point_type t) { return t; },
        [&](point_type x, point_type, point_type, point_type t) {
          return semigroup(t, x);
        });
  }

  ZPoint z_example_dot(ZPoint const& p, ZPoint const& q) {
    ZPoint r;
    r.x = q.x - std::min<std::int64_t>(0, p.x);
    if (p.x == q.x) {
      // (c, d - (a - c)) over Z/2: subtraction is addition
      r.a = q.a;
      r.b = (q.b + p.a + q.a) % 2;
    } else {
      r.a = (q.a + p.b) % 2;
      r.b = q.b;
    }
    return r;
  }

  ZExampleWitness z_example_witness() {
    ZPoint const    m2{-2, 0, 0}, m1{-1, 0, 0}, sample{5, 0, 0};
    ZExampleWitness w{};
    w.square_of_minus2    = z_example_dot(m2, m2);
    w.square_of_minus1    = z_example_dot(m1, m1);
    w.degenerate          = w.square_of_minus2 == w.square_of_minus1;
    w.sample              = sample;
    w.sigma_minus2_sample = z_example_dot(m2, sample);
    w.sigma_minus1_sample = z_example_dot(m1, sample);
    w.sigmas_differ       = !(w.sigma_minus2_sample == w.sigma_minus1_sample);
    return w;
  }

}  // namespace qcs
