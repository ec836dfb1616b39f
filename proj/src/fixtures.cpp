#include "qcs/fixtures.hpp"

#include "qcs/congruence.hpp"
#include "qcs/constructions.hpp"
#include "qcs/convert.hpp"
#include "qcs/semidirect.hpp"
#include "qcs/solution.hpp"

namespace qcs {

  namespace {
    bool valid(QCycleSet const& X) {
      return verify_qcycle(X.dot(), X.colon()).ok();
    }

    bool squares_coincide(QCycleSet const& X) {
      auto sq = squaring_maps(X);
      return sq.q == sq.q_prime;
    }

    bool power(QCycleSet const& X, std::size_t a, std::size_t b) {
      return solution_power_eq(qcs_to_solution(X), a, b);
    }

    Fixture qcs_fixture(std::string name, std::string params, QCycleSet X) {
      Fixture f{std::move(name), std::move(params), X, {}};
      f.claims.push_back({"valid", true, "axiom-1..3, bijective sigma_x", [X] { return valid(X); }});
      return f;
    }

    Fixture semibrace_fixture(std::string                    name,
                              std::string                    params,
                              FiniteGroup const&             g,
                              std::vector<point_type> const& f,
                              bool                           bijective,
                              bool                           idempotent) {
      auto X   = semibrace_qcycle_set(g, f);
      auto fix = qcs_fixture(std::move(name), std::move(params), X);
      fix.claims.push_back({"regular", bijective, "a.b = a^-1 b f(a), a:b = f(b): regular iff f bijective",
                            [X] { return is_regular(X); }});
      fix.claims.push_back({"q = q'",
                            idempotent ? std::optional<bool>(true) : std::nullopt,
                            idempotent ? "squaring maps coincide for idempotent f"
                                       : "f not idempotent: q = q' only observed",
                            [X] { return squares_coincide(X); }});
      return fix;
    }

    Fixture pair_fixture(std::string name, std::string params, DynamicalPair d, std::optional<bool> regular) {
      Fixture f{std::move(name), std::move(params), d, {}};
      f.claims.push_back({"pair verifies", true, "ugd1..ugd3 on every (x,y,z,s,t,u)",
                          [d] { return verify_dynamical_pair(d).ok(); }});
      f.claims.push_back({"extension valid", true, "X x_{a,a'} S is a q-cycle set",
                          [d] { return valid(build_extension(d)); }});
      f.claims.push_back({"extension regular", regular,
                          "regular iff X regular and every a'_{(x,y)}(s,-) bijective",
                          [d] { return is_regular(build_extension(d)); }});
      return f;
    }
  }  // namespace

  std::vector<Fixture> fixture_catalog() {
    std::vector<Fixture> cat;

    {
      auto X = shift_qcycle_set(4, 1);
      auto f = qcs_fixture("shift", "Z/4, k = 1", X);
      f.claims.push_back({"regular", true, "x.y = y + k, x:y = y", [X] { return is_regular(X); }});
      f.claims.push_back({"r bijective", true, "r(x,y) = (y - k, x)",
                          [X] { return is_bijective_solution(qcs_to_solution(X)); }});
      cat.push_back(std::move(f));
    }
    {
      auto X = z3_transposition_qcycle_set();
      auto f = qcs_fixture("z3-transposition", "Z/3, alpha = (0 1)", X);
      f.claims.push_back({"regular", true, "delta_x bijective", [X] { return is_regular(X); }});
      f.claims.push_back({"non-degenerate", true, "regular, q and q' bijective",
                          [X] { return is_nondegenerate(X); }});
      f.claims.push_back({"r^4 = id", true, "r^4 = id", [X] { return power(X, 4, 0); }});
      cat.push_back(std::move(f));
    }
    {
      auto X = constant_qcycle_set(3, 0);
      auto f = qcs_fixture("constant-k", "n = 3, k = 0", X);
      f.claims.push_back({"regular", false, "x:y = k", [X] { return is_regular(X); }});
      f.claims.push_back({"r^3 = r^2", true, "r(x,y) = (y, k), r^3 = r^2", [X] { return power(X, 3, 2); }});
      cat.push_back(std::move(f));
    }
    {
      auto X = quasinormal_qcycle_set(meet_semilattice2());
      auto f = qcs_fixture("quasi-normal", "2-element meet-semilattice", X);
      f.claims.push_back({"r^5 = r^3", true, "xyz = xzyz, r(x,y) = (y, xy), r^5 = r^3",
                          [X] { return power(X, 5, 3); }});
      cat.push_back(std::move(f));
    }
    cat.push_back(semibrace_fixture("semibrace-z4-zero", "B = Z/4, f = 0", FiniteGroup::cyclic(4), {0, 0, 0, 0}, false, true));
    cat.push_back(semibrace_fixture("semibrace-z3-identity", "B = Z/3, f = id", FiniteGroup::cyclic(3), {0, 1, 2}, true, true));
    cat.push_back(semibrace_fixture("semibrace-z3-negation", "B = Z/3, f = -x", FiniteGroup::cyclic(3), {0, 2, 1}, true, false));
    cat.push_back(semibrace_fixture("semibrace-s3-sign", "B = S3, f = sign onto <(0 1)>", FiniteGroup::symmetric3(),
                                    {0, 2, 2, 0, 0, 2}, false, true));
    {
      auto X = simple4_qcycle_set();
      auto f = qcs_fixture("simple4",
                           "sigma = (1 3), (0 3), (0 1 3), (0 1); delta_2 = (0 1 3), others id", X);
      f.claims.push_back({"simple", true, "every covering is trivial or an isomorphism",
                          [X] { return is_simple(X); }});
      cat.push_back(std::move(f));
    }
    {
      auto d = constant_cocycle_pair(trivial_qcycle_set(2), {3}, {1}, {2}, {0}, {1});
      auto f = pair_fixture("constant-cocycle-pair", "X trivial n = 2, A = Z/3, (a,b,a',b') = (1,2,0,1)", d, true);
      f.claims.push_back({"extension is a cycle set", false, "a != a' gives dot != colon",
                          [d] { return is_cycle_set(build_extension(d)); }});
      cat.push_back(std::move(f));
    }
    {
      auto d = gxg_pair(2, {3});
      auto f = pair_fixture("gxg-pair", "X trivial n = 2, G = Z/3, S = G x G", d, true);
      f.claims.push_back({"extension is a cycle set", false, "(t1 + t2 - s2, t2) vs (t1 - t2 + s2, t2)",
                          [d] { return is_cycle_set(build_extension(d)); }});
      cat.push_back(std::move(f));
    }
    cat.push_back(pair_fixture("semibrace-pair", "B = Z/4, f = 0, a = x^-1 t, a' = f(t)",
                               semibrace_pair(FiniteGroup::cyclic(4), {0, 0, 0, 0}), false));
    {
      auto d = quasinormal_pair(meet_semilattice2());
      auto f = pair_fixture("quasi-normal-pair", "2-element meet-semilattice, a = t, a' = tx", d, false);
      f.claims.push_back({"r^5 = r^3", true, "r((x,s),(y,t)) = ((y,t),(xy,sy)), r^5 = r^3",
                          [d] { return power(build_extension(d), 5, 3); }});
      cat.push_back(std::move(f));
    }
    {
      auto X = QCycleSet(OpTable::projection(3), OpTable::from_rows({{0, 0, 2}, {0, 0, 2}, {0, 0, 2}}));
      auto t = Perm::from_cycles(3, {{0, 1}});
      auto P = semidirect_product(X, trivial_qcycle_set(3), {t, t, Perm::identity(3)});
      auto f = qcs_fixture("semidirect9", "x.y = y, x:0 = x:1 = 0, x:2 = 2; S trivial n = 3; theta = (0 1), (0 1), id", P);
      f.claims.push_back({"order 9", true, "X x S with |X| = |S| = 3", [P] { return P.size() == 9; }});
      f.claims.push_back({"regular", false, "theta_{x.y} theta_x = theta_{y:x} theta_y",
                          [P] { return is_regular(P); }});
      cat.push_back(std::move(f));
    }
    {
      auto    w = z_example_witness();
      Fixture f{"z-example", "x.y = y - min{0,x} on Z, Klein four fibre (pointwise)", w, {}};
      f.claims.push_back({"degenerate", true, "q(-2,0,0) = q(-1,0,0)", [w] { return w.degenerate; }});
      f.claims.push_back({"squares equal (0,0,0)", true, "-2.-2 = -2 - min{0,-2} = 0",
                          [w] { return w.square_of_minus2 == ZPoint{0, 0, 0} && w.square_of_minus1 == ZPoint{0, 0, 0}; }});
      f.claims.push_back({"sigmas differ", true, "(-2,0,0).(5,0,0) = 7 vs (-1,0,0).(5,0,0) = 6",
                          [w] { return w.sigmas_differ; }});
      cat.push_back(std::move(f));
    }
    return cat;
  }

  Fixture const* find_fixture(std::vector<Fixture> const& catalog, std::string const& name) {
    for (auto const& f : catalog) {
      if (f.name == name) {
        return &f;
      }
    }
    return nullptr;
  }

  std::vector<ClaimResult> check_fixture(Fixture const& f) {
    std::vector<ClaimResult> out;
    for (auto const& c : f.claims) {
      out.push_back({c.property, c.expected, c.evaluate(), c.anchor});
    }
    return out;
  }

}  // namespace qcs
