#include <random>

#include "doctest.h"

#include "qcs/constructions.hpp"
#include "qcs/convert.hpp"
#include "qcs/iso.hpp"
#include "qcs/perm.hpp"
#include "qcs/qcycle_set.hpp"
#include "qcs/solution.hpp"

using namespace qcs;

TEST_CASE("perm: compose, inverse, order") {
  auto p = Perm::from_cycles(4, {{0, 1, 3}});
  CHECK(compose(Perm::identity(4), p) == p);
  auto t = Perm::from_cycles(3, {{0, 1}});
  CHECK(inverse(t) == t);
  CHECK(order(p) == 3);
  // compose applies the right argument first
  auto a = Perm::from_cycles(3, {{0, 1}});
  auto b = Perm::from_cycles(3, {{1, 2}});
  CHECK(compose(a, b)(1) == a(b(1)));
  CHECK(compose(a, b)(1) == 2);
  CHECK_THROWS_AS(compose(p, t), Error);
  CHECK_THROWS_AS(Perm(std::vector<point_type>{0, 0, 1}), Error);
}

TEST_CASE("verify_qcycle: examples") {
  auto proj = OpTable::projection(3);
  CHECK(verify_qcycle(proj, proj).ok());

  auto z3 = z3_transposition_qcycle_set();
  CHECK(verify_qcycle(z3.dot(), z3.colon()).ok());

  auto bad = OpTable::from_rows({{0, 0, 1}, {0, 1, 2}, {0, 1, 2}});
  auto rep = verify_qcycle(bad, proj);
  CHECK_FALSE(rep.ok());
  REQUIRE(rep.has(Law::row_bijectivity));
  CHECK(rep.violations().front().law == Law::row_bijectivity);
  CHECK(rep.violations().front().witness == std::vector<point_type>{0, 0, 1});
  CHECK(rep.violations().front().lhs == rep.violations().front().rhs);

  CHECK_THROWS_AS(verify_qcycle(proj, OpTable::projection(2)), Error);
  CHECK_THROWS_AS(QCycleSet(bad, proj), Error);
}

TEST_CASE("verify_qcycle reports every violation") {
  // x.y = y + 1 on Z/3 with colon the constant 0 breaks axiom 1 in many
  // places; count against a direct evaluation.
  auto dot   = OpTable::generate(3, [](auto, auto y) { return (y + 1) % 3; });
  auto colon = OpTable::generate(3, [](auto, auto) { return 0u; });
  std::size_t expected = 0;
  for (point_type x = 0; x < 3; ++x)
    for (point_type y = 0; y < 3; ++y)
      for (point_type z = 0; z < 3; ++z) {
        expected += dot(dot(x, y), dot(x, z)) != dot(colon(y, x), dot(y, z));
        expected += colon(colon(x, y), colon(x, z))
                    != colon(dot(y, x), colon(y, z));
        expected += colon(dot(x, y), dot(x, z))
                    != dot(colon(y, x), colon(y, z));
      }
  auto rep = verify_qcycle(dot, colon);
  CHECK(rep.violations().size() == expected);
  CHECK(expected > 1);
}

TEST_CASE("qcs_to_solution: examples") {
  auto s = qcs_to_solution(shift_qcycle_set(4, 1));
  CHECK(s(0, 2) == SolutionMap::pair_type{1, 0});
  for (point_type x = 0; x < 4; ++x)
    for (point_type y = 0; y < 4; ++y)
      CHECK(s(x, y) == SolutionMap::pair_type{(y + 3) % 4, x});

  auto triv = qcs_to_solution(trivial_qcycle_set(3));
  CHECK(triv == SolutionMap::swap(3));

  auto c = qcs_to_solution(constant_qcycle_set(3, 0));
  CHECK(c(1, 2) == SolutionMap::pair_type{2, 0});
}

TEST_CASE("solution_to_qcs: examples and errors") {
  CHECK(solution_to_qcs(SolutionMap::swap(3)) == trivial_qcycle_set(3));
  auto shift = SolutionMap::generate(4, [](point_type x, point_type y) {
    return SolutionMap::pair_type{(y + 3) % 4, x};
  });
  CHECK(solution_to_qcs(shift) == shift_qcycle_set(4, 1));

  auto X = simple4_qcycle_set();
  CHECK(solution_to_qcs(qcs_to_solution(X)) == X);

  auto degenerate = SolutionMap::generate(2, [](point_type, point_type) {
    return SolutionMap::pair_type{0, 0};
  });
  try {
    (void) solution_to_qcs(degenerate);
    FAIL("expected NotLeftNonDegenerate");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::not_left_nondegenerate);
  }
}

TEST_CASE("squaring maps and regularity") {
  auto z3 = z3_transposition_qcycle_set();
  auto sq = squaring_maps(z3);
  CHECK(sq.q == std::vector<point_type>{1, 0, 2});
  CHECK(sq.q_prime == std::vector<point_type>{0, 1, 2});
  CHECK(is_regular(z3));
  CHECK(is_nondegenerate(z3));
  CHECK_FALSE(is_cycle_set(z3));

  auto triv = squaring_maps(trivial_qcycle_set(3));
  CHECK(triv.q == std::vector<point_type>{0, 1, 2});
  CHECK(triv.q_prime == triv.q);
  CHECK(is_cycle_set(trivial_qcycle_set(3)));

  auto ck = constant_qcycle_set(3, 0);
  CHECK(squaring_maps(ck).q_prime == std::vector<point_type>{0, 0, 0});
  CHECK_FALSE(is_regular(ck));
  CHECK(is_regular(constant_qcycle_set(1, 0)));

  // semi-brace q-cycle set with a non-bijective endomorphism
  auto sb = semibrace_qcycle_set(FiniteGroup::cyclic(4), {0, 0, 0, 0});
  CHECK_FALSE(is_regular(sb));
  auto sbid = semibrace_qcycle_set(FiniteGroup::cyclic(3), {0, 1, 2});
  CHECK(is_regular(sbid));
}

TEST_CASE("solution checks") {
  auto sw = SolutionMap::swap(3);
  CHECK(verify_solution(sw).ok());
  CHECK(is_bijective_solution(sw));
  CHECK(is_left_nondeg(sw));
  CHECK(is_right_nondeg(sw));

  // r(x, y) = (y, xy) on ({0,1}, min)
  auto sl = SolutionMap::generate(2, [](point_type x, point_type y) {
    return SolutionMap::pair_type{y, std::min(x, y)};
  });
  CHECK(verify_solution(sl).ok());
  CHECK(is_left_nondeg(sl));
  CHECK_FALSE(is_right_nondeg(sl));
  CHECK_FALSE(is_bijective_solution(sl));
  CHECK(qcs_to_solution(quasinormal_qcycle_set(meet_semilattice2())) == sl);

  auto ck = qcs_to_solution(constant_qcycle_set(3, 1));
  CHECK(verify_solution(ck).ok());
  CHECK_FALSE(is_bijective_solution(ck));

  // r(x, y) = (x + y, x) on Z/3 fails the braid relation on 18 triples
  auto bad = SolutionMap::generate(3, [](point_type x, point_type y) {
    return SolutionMap::pair_type{(x + y) % 3, x};
  });
  auto rep = verify_solution(bad);
  CHECK(rep.violations().size() == 18);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.violations().front().law == Law::braid);
  CHECK(rep.violations().front().witness.size() == 3);
}

TEST_CASE("solution_power_eq") {
  CHECK(solution_power_eq(qcs_to_solution(z3_transposition_qcycle_set()), 4, 0));
  CHECK_FALSE(
      solution_power_eq(qcs_to_solution(z3_transposition_qcycle_set()), 2, 0));
  CHECK(solution_power_eq(qcs_to_solution(constant_qcycle_set(3, 0)), 3, 2));
  CHECK_FALSE(
      solution_power_eq(qcs_to_solution(constant_qcycle_set(3, 0)), 2, 1));
  CHECK(solution_power_eq(
      qcs_to_solution(quasinormal_qcycle_set(meet_semilattice2())), 5, 3));
  CHECK(minimal_power_relation(qcs_to_solution(z3_transposition_qcycle_set()),
                               12)
        == std::pair<std::size_t, std::size_t>{4, 0});
  CHECK(minimal_power_relation(SolutionMap::swap(3), 12)
        == std::pair<std::size_t, std::size_t>{2, 0});
}

TEST_CASE("isomorphism and canonical form") {
  auto z3 = z3_transposition_qcycle_set();
  auto id = are_isomorphic(z3, z3);
  REQUIRE(id);
  auto relabelled = relabel(z3, Perm::from_cycles(3, {{0, 2}}));
  CHECK(relabelled != z3);
  auto pi = are_isomorphic(z3, relabelled);
  REQUIRE(pi);
  CHECK(relabel(z3, *pi) == relabelled);

  CHECK_FALSE(are_isomorphic(trivial_qcycle_set(3), constant_qcycle_set(3, 0)));
  CHECK_FALSE(are_isomorphic(trivial_qcycle_set(3), trivial_qcycle_set(2)));

  CHECK(canonical_form(z3) == canonical_form(relabelled));
  CHECK(canonical_form(canonical_form(z3)) == canonical_form(z3));
}

TEST_CASE("canonical form is the block-order minimum over all relabellings") {
  // brute force over all 4! relabellings of each structure
  auto const key = [](QCycleSet const& X) {
    std::vector<point_type> k;
    auto const              n = static_cast<point_type>(X.size());
    for (point_type c = 0; c < n; ++c) {
      for (point_type j = 0; j < c; ++j) {
        k.push_back(X.dot(j, c));
        k.push_back(X.dot(c, j));
        k.push_back(X.colon(j, c));
        k.push_back(X.colon(c, j));
      }
      k.push_back(X.dot(c, c));
      k.push_back(X.colon(c, c));
    }
    return k;
  };
  for (auto const& X : {simple4_qcycle_set(),
                        shift_qcycle_set(4, 1),
                        constant_qcycle_set(4, 2),
                        semibrace_qcycle_set(FiniteGroup::cyclic(4),
                                             {0, 2, 0, 2})}) {
    std::vector<point_type> p{0, 1, 2, 3};
    std::vector<point_type> best;
    do {
      auto k = key(relabel(X, Perm(p)));
      if (best.empty() || k < best) {
        best = k;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(key(canonical_form(X)) == best);
  }
}

TEST_CASE("property: canonical form is invariant under random relabelling") {
  std::mt19937 rng(20261018);
  for (auto const& X : {simple4_qcycle_set(),
                        z3_transposition_qcycle_set(),
                        quasinormal_qcycle_set(left_zero_semigroup(3)),
                        semibrace_qcycle_set(FiniteGroup::symmetric3(),
                                             {0, 2, 2, 0, 0, 2})}) {
    auto const c = canonical_form(X);
    for (int i = 0; i < 20; ++i) {
      std::vector<point_type> p(X.size());
      std::iota(p.begin(), p.end(), 0u);
      std::shuffle(p.begin(), p.end(), rng);
      auto Y = relabel(X, Perm(p));
      CHECK(canonical_form(Y) == c);
      auto pi = are_isomorphic(X, Y);
      REQUIRE(pi);
      CHECK(relabel(X, *pi) == Y);
    }
  }
}

TEST_CASE("automorphisms") {
  CHECK(automorphisms(trivial_qcycle_set(3)).size() == 6);
  CHECK(automorphisms(trivial_qcycle_set(1)).size() == 1);
  // brute force for Z/3 example
  auto        z3 = z3_transposition_qcycle_set();
  std::size_t count = 0;
  std::vector<point_type> p{0, 1, 2};
  do {
    count += relabel(z3, Perm(p)) == z3;
  } while (std::next_permutation(p.begin(), p.end()));
  CHECK(automorphisms(z3).size() == count);
}
