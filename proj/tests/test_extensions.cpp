#include <random>

#include "doctest.h"

#include "qcs/congruence.hpp"
#include "qcs/constructions.hpp"
#include "qcs/convert.hpp"
#include "qcs/covering.hpp"
#include "qcs/families.hpp"
#include "qcs/iso.hpp"
#include "qcs/retract.hpp"
#include "qcs/sampling.hpp"
#include "qcs/semidirect.hpp"
#include "qcs/solution.hpp"

using namespace qcs;

namespace {
  // x.y = x:y = y + 1 mod 3
  QCycleSet cyclic_perm_set() {
    auto t = OpTable::generate(3, [](point_type, point_type y) { return (y + 1) % 3; });
    return QCycleSet(t, t);
  }
}  // namespace

TEST_CASE("dynamical pair: trivial pair and extension") {
  auto z3 = z3_transposition_qcycle_set();
  auto d  = trivial_pair(z3, 2);
  CHECK(verify_dynamical_pair(d).ok());
  auto e = build_extension(d);
  CHECK(e.size() == 6);
  CHECK(verify_qcycle(e.dot(), e.colon()).ok());
  CHECK(extension_equivalence(d));
  // second coordinate is the projection
  CHECK(e.dot(0 * 2 + 1, 2 * 2 + 0) == z3.dot(0, 2) * 2 + 0);
  CHECK(verify_dynamical_pair(trivial_pair(trivial_qcycle_set(3), 3)).ok());
}

TEST_CASE("dynamical pair: rejected samples carry witnesses") {
  auto            base = trivial_qcycle_set(2);
  std::mt19937_64 rng(7);
  std::size_t     tries = 0;
  for (;; ++tries) {
    REQUIRE(tries < 10000);
    auto d      = random_pair(base, 2, rng, false);
    auto report = verify_dynamical_pair(d);
    if (report.has(Law::ugd2)) {
      for (auto const& v : report.violations()) {
        if (v.law == Law::ugd2) {
          CHECK(v.witness.size() == 6);
        }
      }
      CHECK(extension_equivalence(d));
      CHECK_THROWS_AS(build_extension(d), Error);
      break;
    }
  }
  // a non-permutation alpha row
  std::vector<point_type> alpha(2 * 2 * 2 * 2, 0), prime(16, 0);
  DynamicalPair           bad(base, 2, alpha, prime);
  CHECK(verify_dynamical_pair(bad).has(Law::alpha_bijectivity));
  CHECK_THROWS_AS(DynamicalPair(base, 2, std::vector<point_type>(15, 0), prime), Error);
  CHECK_THROWS_AS(DynamicalPair(base, 2, std::vector<point_type>(16, 2), prime), Error);
}

TEST_CASE("dynamical pair: random sampling, equivalence and regularity criterion") {
  std::vector<QCycleSet> bases{trivial_qcycle_set(1),
                               trivial_qcycle_set(2),
                               constant_qcycle_set(2, 0),
                               z3_transposition_qcycle_set(),
                               shift_qcycle_set(3, 1)};
  auto stats = sample_extension_equivalence(bases, 3, 200, 20261018);
  CHECK(stats.samples == 200);
  CHECK(stats.ok());
  CHECK(stats.equivalence_holds == 200);
  CHECK(stats.regularity_holds == stats.regularity_checked);
  // both sides of the equivalence are exercised
  CHECK(stats.pairs_valid > 0);
  CHECK(stats.pairs_valid < 200);
}

TEST_CASE("families: constant cocycle pair") {
  auto X = trivial_qcycle_set(2);
  auto d = constant_cocycle_pair(X, {3}, {1}, {2}, {0}, {1});
  CHECK(verify_dynamical_pair(d).ok());
  auto e = build_extension(d);
  CHECK_FALSE(is_cycle_set(e));
  CHECK(constant_cocycle_pair(X, {3}, {0}, {0}, {0}, {0}) == trivial_pair(X, 3));
  // a == a' and b == b' gives a cycle set
  CHECK(is_cycle_set(build_extension(constant_cocycle_pair(X, {2, 2}, {1, 0}, {0, 1}, {1, 0}, {0, 1}))));
  CHECK(verify_dynamical_pair(constant_cocycle_pair(cyclic_perm_set(), {2, 3}, {1, 2}, {0, 1}, {1, 1}, {0, 0})).ok());
  try {
    (void) constant_cocycle_pair(z3_transposition_qcycle_set(), {2}, {0}, {0}, {0}, {0});
    FAIL("expected NotCycleSet");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::not_cycle_set);
  }
}

TEST_CASE("families: G x G pair") {
  auto d3 = gxg_pair(2, {3});
  CHECK(verify_dynamical_pair(d3).ok());
  auto e3 = build_extension(d3);
  CHECK(e3.size() == 18);
  CHECK_FALSE(is_cycle_set(e3));
  CHECK(is_regular(e3));
  // over Z/2 subtraction is addition, so alpha and alpha' coincide
  auto d2 = gxg_pair(2, {2});
  CHECK(verify_dynamical_pair(d2).ok());
  auto e2 = build_extension(d2);
  CHECK(e2.size() == 8);
  CHECK(is_cycle_set(e2));
}

TEST_CASE("families: semi-brace pair") {
  auto z4  = FiniteGroup::cyclic(4);
  auto d0  = semibrace_pair(z4, {0, 0, 0, 0});
  CHECK(verify_dynamical_pair(d0).ok());
  CHECK_FALSE(is_regular(build_extension(d0)));
  CHECK(extension_equivalence(d0));

  auto z3 = FiniteGroup::cyclic(3);
  auto d1 = semibrace_pair(z3, {0, 1, 2});
  CHECK(verify_dynamical_pair(d1).ok());
  CHECK(is_regular(build_extension(d1)));

  // sign projection onto <(0 1)>: even permutations to id, odd to (0 1)
  auto s3   = FiniteGroup::symmetric3();
  auto sign = std::vector<point_type>{0, 2, 2, 0, 0, 2};
  auto d2   = semibrace_pair(s3, sign);
  CHECK(verify_dynamical_pair(d2).ok());
  auto e2 = build_extension(d2);
  CHECK_FALSE(is_regular(e2));

  // r((x,s),(y,t)) = ((x y f(x)^{-1}, x t), (f(x), f(s)))
  auto const r = qcs_to_solution(e2);
  auto const m = s3.size();
  for (point_type x = 0; x < m; ++x) {
    for (point_type s = 0; s < m; ++s) {
      for (point_type y = 0; y < m; ++y) {
        for (point_type t = 0; t < m; ++t) {
          auto [u, v] = r(x * m + s, y * m + t);
          auto first  = s3.mul(s3.mul(x, y), s3.inverse(sign[x]));
          CHECK(u == first * m + s3.mul(x, t));
          CHECK(v == sign[x] * m + sign[s]);
        }
      }
    }
  }
  CHECK_THROWS_AS(semibrace_pair(z3, {0, 2, 2}), Error);
  CHECK_THROWS_AS(semibrace_pair(OpTable::projection(3), {0, 1, 2}), Error);
}

TEST_CASE("families: quasi-normal pair") {
  auto sl = meet_semilattice2();
  auto d  = quasinormal_pair(sl);
  CHECK(verify_dynamical_pair(d).ok());
  auto e = build_extension(d);
  CHECK(e.size() == 4);
  auto r = qcs_to_solution(e);
  CHECK(solution_power_eq(r, 5, 3));
  // r((x,s),(y,t)) = ((y,t),(xy,sy))
  for (point_type x = 0; x < 2; ++x) {
    for (point_type s = 0; s < 2; ++s) {
      for (point_type y = 0; y < 2; ++y) {
        for (point_type t = 0; t < 2; ++t) {
          auto [u, v] = r(x * 2 + s, y * 2 + t);
          CHECK(u == y * 2 + t);
          CHECK(v == sl(x, y) * 2 + sl(s, y));
        }
      }
    }
  }
  CHECK(verify_dynamical_pair(quasinormal_pair(left_zero_semigroup(2))).ok());
  // x y = (x + 1) mod 2 is not associative
  auto bad = OpTable::generate(2, [](point_type x, point_type) { return (x + 1) % 2; });
  try {
    (void) quasinormal_pair(bad);
    FAIL("expected NotLeftQuasiNormal");
  } catch (Error const& err) {
    CHECK(err.kind() == ErrorKind::not_left_quasi_normal);
  }
}

TEST_CASE("families: integer example witness") {
  auto w = z_example_witness();
  CHECK(w.square_of_minus2 == ZPoint{0, 0, 0});
  CHECK(w.square_of_minus1 == ZPoint{0, 0, 0});
  CHECK(w.degenerate);
  CHECK(w.sigma_minus2_sample.x == 7);
  CHECK(w.sigma_minus1_sample.x == 6);
  CHECK(w.sigmas_differ);
  // non-negative left argument acts trivially on Z
  CHECK(z_example_dot({3, 0, 0}, {4, 1, 0}).x == 4);
}

TEST_CASE("finite abelian group encoding") {
  FiniteAbelianGroup A({2, 3});
  CHECK(A.size() == 6);
  CHECK(A.encode({1, 2}) == 5);
  CHECK(A.decode(5) == std::vector<std::uint32_t>{1, 2});
  CHECK(A.add(A.encode({1, 2}), A.encode({1, 2})) == A.encode({0, 1}));
  CHECK(A.negate(A.encode({0, 1})) == A.encode({0, 2}));
  CHECK(A.encode({-1, -1}) == A.encode({1, 2}));
}

TEST_CASE("coverings: verification and kernels") {
  auto X = simple4_qcycle_set();
  CoveringMap id(X, X, {0, 1, 2, 3});
  CHECK(verify_covering(id).ok());
  CHECK(kernel_partition(id).is_discrete());

  CoveringMap parity(trivial_qcycle_set(4), trivial_qcycle_set(2), {0, 1, 0, 1});
  CHECK(verify_covering(parity).ok());
  auto k = kernel_partition(parity);
  CHECK(k.block_count() == 2);
  CHECK(k.blocks() == std::vector<std::vector<point_type>>{{0, 2}, {1, 3}});

  // the retraction map of the Z/3 example is a surjective homomorphism
  // with fibers of sizes 2 and 1
  auto        z3 = z3_transposition_qcycle_set();
  CoveringMap ret(z3, trivial_qcycle_set(2), {0, 0, 1});
  auto        report = verify_covering(ret);
  CHECK_FALSE(report.ok());
  CHECK(report.has(Law::fiber_uniformity));
  CHECK_FALSE(report.has(Law::homomorphism_dot));
  CHECK_FALSE(report.has(Law::homomorphism_colon));
  CHECK_FALSE(report.has(Law::surjectivity));
  CHECK_THROWS_AS(factor_covering(ret), Error);

  CoveringMap not_hom(z3, trivial_qcycle_set(3), {0, 1, 2});
  CHECK(verify_covering(not_hom).has(Law::homomorphism_dot));
  CoveringMap not_onto(trivial_qcycle_set(2), trivial_qcycle_set(2), {0, 0});
  CHECK(verify_covering(not_onto).has(Law::surjectivity));
  CHECK_THROWS_AS(CoveringMap(X, X, {0, 1, 2}), Error);
  CHECK_THROWS_AS(CoveringMap(X, X, {0, 1, 2, 4}), Error);
}

TEST_CASE("coverings: factorization") {
  auto X  = simple4_qcycle_set();
  auto f1 = factor_covering(CoveringMap(X, X, {0, 1, 2, 3}));
  CHECK(f1.m == 1);
  CHECK(f1.phi.is_identity());
  CHECK(f1.pair == trivial_pair(X, 1));

  auto src = trivial_qcycle_set(4);
  auto f2  = factor_covering(CoveringMap(src, trivial_qcycle_set(2), {0, 1, 0, 1}));
  CHECK(f2.m == 2);
  CHECK(verify_dynamical_pair(f2.pair).ok());
  auto e = build_extension(f2.pair);
  CHECK(relabel(src, f2.phi) == e);
  CHECK(f2.phi == Perm(std::vector<point_type>{0, 2, 1, 3}));

  // every uniform congruence of the G x G extension over Z/2
  auto Y = build_extension(gxg_pair(2, {2}));
  auto cs = proper_uniform_congruences(Y);
  CHECK_FALSE(cs.empty());
  for (auto const& c : cs) {
    auto f = factor_covering(quotient_map(Y, c));
    CHECK(verify_dynamical_pair(f.pair).ok());
    CHECK(relabel(Y, f.phi) == build_extension(f.pair));
    CHECK(are_isomorphic(Y, build_extension(f.pair)).has_value());
  }
}

TEST_CASE("congruences and simplicity") {
  auto X = simple4_qcycle_set();
  CHECK(is_simple(X));
  CHECK(enumerate_congruences(X).size() == 3);

  auto T4 = trivial_qcycle_set(4);
  CHECK_FALSE(is_simple(T4));
  CHECK(enumerate_congruences(T4).size() == 15);
  CHECK(proper_uniform_congruences(T4).size() == 3);

  for (auto const& P : {z3_transposition_qcycle_set(), trivial_qcycle_set(3), shift_qcycle_set(5, 2),
                        constant_qcycle_set(3, 0), trivial_qcycle_set(7)}) {
    CHECK(is_simple(P));
  }
  CHECK(enumerate_congruences(z3_transposition_qcycle_set()).size() == 3);

  auto c = congruence_closure(T4, CongruencePartition::discrete(4), 0, 2);
  CHECK(c.blocks() == std::vector<std::vector<point_type>>{{0, 2}, {1}, {3}});
  CHECK_FALSE(c.is_uniform());
  CHECK(is_congruence(T4, c.block_of()));
  CHECK_THROWS_AS(enumerate_congruences(trivial_qcycle_set(13)), Error);
}

TEST_CASE("semidirect products") {
  auto X = QCycleSet(OpTable::projection(3), OpTable::from_rows({{0, 0, 2}, {0, 0, 2}, {0, 0, 2}}));
  auto S = trivial_qcycle_set(3);
  auto t = Perm::from_cycles(3, {{0, 1}});
  auto P = semidirect_product(X, S, {t, t, Perm::identity(3)});
  CHECK(P.size() == 9);
  CHECK(verify_qcycle(P.dot(), P.colon()).ok());
  CHECK_FALSE(is_regular(P));

  // identity theta: (x,s).(y,t) = (x.y, s.t)
  auto Z  = z3_transposition_qcycle_set();
  auto id = std::vector<Perm>(3, Perm::identity(3));
  auto Q  = semidirect_product(Z, Z, id);
  for (point_type x = 0; x < 3; ++x) {
    for (point_type s = 0; s < 3; ++s) {
      for (point_type y = 0; y < 3; ++y) {
        for (point_type u = 0; u < 3; ++u) {
          CHECK(Q.dot(x * 3 + s, y * 3 + u) == Z.dot(x, y) * 3 + Z.dot(s, u));
          CHECK(Q.colon(x * 3 + s, y * 3 + u) == Z.colon(x, y) * 3 + Z.colon(s, u));
        }
      }
    }
  }

  // one-point X
  auto one = trivial_qcycle_set(1);
  CHECK(are_isomorphic(semidirect_product(one, Z, {Perm::identity(3)}), Z).has_value());

  // cycle sets in, cycle set out
  auto C = cyclic_perm_set();
  CHECK(is_cycle_set(C));
  auto R = semidirect_product(trivial_qcycle_set(2), C, {Perm::from_cycles(3, {{0, 1, 2}}), Perm::from_cycles(3, {{0, 1, 2}})});
  CHECK(is_cycle_set(R));

  try {
    (void) semidirect_product(X, Z, {t, t, Perm::from_cycles(3, {{1, 2}})});
    FAIL("expected NotAutomorphism");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::not_automorphism);
  }
  try {
    (void) semidirect_product(X, S, {t, Perm::identity(3), Perm::identity(3)});
    FAIL("expected CompatibilityFailed");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::compatibility_failed);
  }
}
