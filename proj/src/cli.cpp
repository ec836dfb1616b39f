#include "qcs/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "qcs/congruence.hpp"
#include "qcs/constructions.hpp"
#include "qcs/convert.hpp"
#include "qcs/covering.hpp"
#include "qcs/enumerate.hpp"
#include "qcs/fixtures.hpp"
#include "qcs/json_io.hpp"
#include "qcs/perm_group.hpp"
#include "qcs/retract.hpp"
#include "qcs/sampling.hpp"
#include "qcs/semidirect.hpp"
#include "qcs_oracle/naive.hpp"

namespace qcs {

  namespace {
    constexpr int exit_ok       = 0;
    constexpr int exit_violated = 1;
    constexpr int exit_input    = 2;

    int exit_code(ErrorKind k) {
      switch (k) {
        case ErrorKind::parse_error:
        case ErrorKind::out_of_range:
        case ErrorKind::degree_mismatch:
        case ErrorKind::not_a_permutation:
        case ErrorKind::invalid_structure:
        case ErrorKind::cap_exceeded:
        case ErrorKind::budget_exceeded: return exit_input;
        default: return exit_violated;
      }
    }

    struct Context {
      std::ostream& out;
      std::ostream& err;
      std::istream& in;
      bool          json_mode = false;
      std::uint64_t seed      = 20261018;
      std::size_t   threads   = 1;

      json load(std::string const& path) const {
        std::stringstream buf;
        if (path == "-") {
          buf << in.rdbuf();
        } else {
          std::ifstream f(path);
          if (!f) {
            throw Error(ErrorKind::parse_error, "cannot open " + path);
          }
          buf << f.rdbuf();
        }
        return parse_json(buf.str());
      }
    };

    std::string bool_str(bool b) {
      return b ? "true" : "false";
    }

    std::string seq_str(std::vector<point_type> const& v) {
      std::ostringstream os;
      os << '[';
      for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? "," : "") << v[i];
      }
      os << ']';
      return os.str();
    }

    std::string blocks_str(std::vector<std::vector<point_type>> const& blocks) {
      std::ostringstream os;
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        os << (b ? " {" : "{");
        for (std::size_t i = 0; i < blocks[b].size(); ++i) {
          os << (i ? "," : "") << blocks[b][i];
        }
        os << '}';
      }
      return os.str();
    }

    void print_report(Context const& ctx, std::string const& what, VerificationReport const& r, json extra = json::object()) {
      if (ctx.json_mode) {
        json j;
        j["kind"] = what;
        for (auto const& [k, v] : extra.items()) {
          j[k] = v;
        }
        auto const rj = to_json(r);
        for (auto const& [k, v] : rj.items()) {
          j[k] = v;
        }
        ctx.out << dump(j) << '\n';
        return;
      }
      ctx.out << what << ": " << (r.ok() ? "ok" : std::to_string(r.violations().size()) + " violation(s)") << '\n';
      for (auto const& [k, v] : extra.items()) {
        ctx.out << "  " << k << ": " << v.dump() << '\n';
      }
      for (auto const& v : r.violations()) {
        ctx.out << "  " << v << '\n';
      }
    }

    // ---- verify ------------------------------------------------------------

    int cmd_verify(Context const& ctx, std::string const& path) {
      auto j = ctx.load(path);
      if (detect_kind(j) == DocumentKind::qcycle_set) {
        auto [dot, colon] = tables_from_json(j);
        auto report       = verify_qcycle(dot, colon);
        print_report(ctx, "qcycle_set", report, json{{"n", dot.degree()}});
        return report.ok() ? exit_ok : exit_violated;
      }
      auto s      = solution_from_json(j);
      auto report = verify_solution(s);
      json extra{{"n", s.size()},
                 {"bijective", is_bijective_solution(s)},
                 {"left_nondegenerate", is_left_nondeg(s)},
                 {"right_nondegenerate", is_right_nondeg(s)}};
      print_report(ctx, "solution", report, extra);
      return report.ok() ? exit_ok : exit_violated;
    }

    // ---- convert -----------------------------------------------------------

    int cmd_convert(Context const& ctx, std::string const& to, std::string const& path) {
      auto j    = ctx.load(path);
      auto kind = detect_kind(j);
      if (to == "solution") {
        if (kind != DocumentKind::qcycle_set) {
          throw Error(ErrorKind::parse_error, "input is not a q-cycle set");
        }
        ctx.out << dump(to_json(qcs_to_solution(qcycle_set_from_json(j)))) << '\n';
        return exit_ok;
      }
      if (kind != DocumentKind::solution) {
        throw Error(ErrorKind::parse_error, "input is not a solution");
      }
      auto s = solution_from_json(j);
      try {
        ctx.out << dump(to_json(solution_to_qcs(s))) << '\n';
      } catch (Error const& e) {
        ctx.err << e.what() << '\n';
        return exit_violated;
      }
      return exit_ok;
    }

    // ---- analyze -----------------------------------------------------------

    int cmd_analyze(Context const& ctx, std::string const& path, std::size_t power_bound) {
      auto j = ctx.load(path);
      auto X = detect_kind(j) == DocumentKind::qcycle_set ? qcycle_set_from_json(j)
                                                          : solution_to_qcs(solution_from_json(j));
      auto const sq  = squaring_maps(X);
      auto const s   = qcs_to_solution(X);
      auto const reg = is_regular(X);
      json       a;
      a["n"]                   = X.size();
      a["regular"]             = reg;
      a["nondegenerate"]       = is_nondegenerate(X);
      a["cycle_set"]           = is_cycle_set(X);
      a["q"]                   = sq.q;
      a["q_prime"]             = sq.q_prime;
      a["r_bijective"]         = is_bijective_solution(s);
      a["right_nondegenerate"] = is_right_nondeg(s);
      if (reg) {
        auto g               = perm_group(X);
        a["group_order"]     = g.order();
        a["orbits"]          = g.orbits();
        a["retract_classes"] = retract(X).classes.size();
      } else {
        a["group_order"]     = nullptr;
        a["orbits"]          = nullptr;
        a["retract_classes"] = nullptr;
      }
      auto [pa, pb] = minimal_power_relation(s, power_bound);
      std::string relation;
      if (pa == 0) {
        a["power_relation"] = nullptr;
        relation            = "none up to r^" + std::to_string(power_bound);
      } else {
        a["power_relation"] = {pa, pb};
        relation = "r^" + std::to_string(pa) + " = " + (pb == 0 ? std::string("id") : "r^" + std::to_string(pb)) + ": true";
      }
      if (ctx.json_mode) {
        ctx.out << dump(a) << '\n';
        return exit_ok;
      }
      auto& o = ctx.out;
      o << "order: " << X.size() << '\n';
      o << "regular: " << bool_str(reg) << '\n';
      o << "non-degenerate: " << bool_str(a["nondegenerate"].get<bool>()) << '\n';
      o << "cycle set: " << bool_str(a["cycle_set"].get<bool>()) << '\n';
      o << "q: " << seq_str(sq.q) << '\n';
      o << "q': " << seq_str(sq.q_prime) << '\n';
      o << "r bijective: " << bool_str(a["r_bijective"].get<bool>()) << '\n';
      o << "r right non-degenerate: " << bool_str(a["right_nondegenerate"].get<bool>()) << '\n';
      if (reg) {
        o << "group order: " << a["group_order"].get<std::size_t>() << '\n';
        o << "orbits: " << blocks_str(a["orbits"].get<std::vector<std::vector<point_type>>>()) << '\n';
        o << "retract classes: " << a["retract_classes"].get<std::size_t>() << '\n';
      } else {
        o << "group order: n/a (not regular)\n";
      }
      o << "power relation: " << relation << '\n';
      return exit_ok;
    }

    // ---- retract -----------------------------------------------------------

    int cmd_retract(Context const& ctx, std::string const& path, bool tower, std::size_t max_steps) {
      auto X = qcycle_set_from_json(ctx.load(path));
      if (!tower) {
        ctx.out << dump(to_json(retract(X))) << '\n';
        return exit_ok;
      }
      auto t = retract_tower(X, max_steps);
      json j;
      j["sizes"] = json::array();
      j["levels"] = json::array();
      for (auto const& level : t.levels) {
        j["sizes"].push_back(level.size());
        j["levels"].push_back(to_json(level));
      }
      j["stabilized"]    = t.stabilized;
      j["irretractable"] = t.irretractable;
      ctx.out << dump(j) << '\n';
      return exit_ok;
    }

    // ---- extend ------------------------------------------------------------

    json extension_json(QCycleSet const& E, std::size_t base_n, std::size_t m) {
      auto j         = to_json(E);
      j["extension"] = {{"base_n", base_n}, {"m", m}, {"point", "x * m + s"}};
      return j;
    }

    int cmd_extend_pair(Context const& ctx, std::string const& path) {
      auto d      = pair_from_json(ctx.load(path));
      auto report = verify_dynamical_pair(d);
      if (!report.ok()) {
        print_report(ctx, "dynamical_pair", report);
        return exit_violated;
      }
      ctx.out << dump(extension_json(build_extension(d), d.base().size(), d.fiber_size())) << '\n';
      return exit_ok;
    }

    int cmd_extend_semidirect(Context const& ctx, std::vector<std::string> const& paths) {
      auto X     = qcycle_set_from_json(ctx.load(paths.at(0)));
      auto S     = qcycle_set_from_json(ctx.load(paths.at(1)));
      auto theta = theta_from_json(ctx.load(paths.at(2)));
      auto P     = semidirect_product(X, S, theta);
      ctx.out << dump(extension_json(P, X.size(), S.size())) << '\n';
      return exit_ok;
    }

    // ---- cover -------------------------------------------------------------

    int cmd_cover(Context const& ctx, std::string const& path, bool factor) {
      auto c      = covering_from_json(ctx.load(path));
      auto report = verify_covering(c);
      if (!factor || !report.ok()) {
        print_report(ctx, "covering", report);
        return report.ok() ? exit_ok : exit_violated;
      }
      auto f = factor_covering(c);
      json j;
      j["m"]    = f.m;
      j["pair"] = to_json(f.pair);
      j["phi"]  = std::vector<point_type>(f.phi.images().begin(), f.phi.images().end());
      ctx.out << dump(j) << '\n';
      return exit_ok;
    }

    // ---- simple ------------------------------------------------------------

    int cmd_simple(Context const& ctx, std::string const& path) {
      auto X  = qcycle_set_from_json(ctx.load(path));
      auto cs = proper_uniform_congruences(X);
      if (ctx.json_mode) {
        json j;
        j["simple"]      = cs.empty();
        j["congruences"] = json::array();
        for (auto const& c : cs) {
          j["congruences"].push_back(c.blocks());
        }
        ctx.out << dump(j) << '\n';
      } else {
        ctx.out << "simple: " << bool_str(cs.empty()) << '\n';
        for (auto const& c : cs) {
          ctx.out << "  uniform congruence: " << blocks_str(c.blocks()) << '\n';
        }
      }
      return cs.empty() ? exit_ok : exit_violated;
    }

    // ---- enumerate ---------------------------------------------------------

    struct EnumArgs {
      std::size_t                n = 0;
      EnumFilter                 filter;
      std::optional<std::size_t> cap;
      bool                       ack       = false;
      bool                       oracle    = false;
      bool                       solutions = false;
      bool                       bijective = false;
    };

    json filter_json(EnumFilter const& f) {
      return {{"regular", f.regular},
              {"nondegenerate", f.nondegenerate},
              {"cycle_set", f.cycle_set_only},
              {"up_to_iso", f.up_to_iso}};
    }

    int cmd_oracle(Context const& ctx, EnumArgs const& a, EnumOptions const& opts) {
      auto const& f = a.filter;
      check_cap(a.n, f, opts);
      qcs_oracle::Counts oracle;
      std::uint64_t      engine_labeled = 0, engine_classes = 0;
      if (a.solutions) {
        if (a.n > 3) {
          throw Error(ErrorKind::cap_exceeded, "the solution oracle covers n <= 3");
        }
        auto c         = qcs_oracle::count_solutions(a.n);
        oracle         = a.bijective ? c.bijective : c.left_nondegenerate;
        engine_labeled = enumerate_solutions(a.n, a.bijective, false, opts).count;
        engine_classes = enumerate_solutions(a.n, a.bijective, true, opts).count;
      } else {
        if (f.cycle_set_only) {
          if (a.n > 4 || f.nondegenerate) {
            throw Error(ErrorKind::cap_exceeded, "the cycle-set oracle covers n <= 4 without --nondeg");
          }
          oracle = qcs_oracle::count_cycle_sets(a.n);
        } else {
          if (a.n > 3) {
            throw Error(ErrorKind::cap_exceeded, "the q-cycle set oracle covers n <= 3");
          }
          auto c = qcs_oracle::count_qcycle_sets(a.n);
          oracle = f.nondegenerate ? c.nondegenerate : f.regular ? c.regular : c.all;
        }
        auto g         = f;
        g.up_to_iso    = false;
        engine_labeled = enumerate_qcs(a.n, g, opts).count;
        g.up_to_iso    = true;
        engine_classes = enumerate_qcs(a.n, g, opts).count;
      }
      bool const match = oracle.labeled == engine_labeled && oracle.classes == engine_classes;
      json       j;
      j["n"]      = a.n;
      j["filter"] = filter_json(f);
      if (a.solutions) {
        j["solutions"] = {{"bijective", a.bijective}};
      }
      j["oracle"] = {{"labeled", oracle.labeled}, {"classes", oracle.classes}};
      j["engine"] = {{"labeled", engine_labeled}, {"classes", engine_classes}};
      j["match"]  = match;
      ctx.out << dump(j) << '\n';
      return match ? exit_ok : exit_violated;
    }

    int cmd_enumerate(Context const& ctx, EnumArgs const& a) {
      EnumOptions opts;
      opts.cap          = a.cap;
      opts.ack_long_run = a.ack;
      opts.threads      = ctx.threads;
      if (a.oracle) {
        return cmd_oracle(ctx, a, opts);
      }
      json summary;
      summary["n"]      = a.n;
      summary["filter"] = filter_json(a.filter);
      if (a.solutions) {
        auto r = enumerate_solutions(a.n, a.bijective, a.filter.up_to_iso, opts);
        for (auto const& s : r.solutions) {
          ctx.out << dump(to_json(s)) << '\n';
        }
        summary["solutions"] = {{"bijective", a.bijective}};
        summary["count"]     = r.count;
      } else {
        auto r = enumerate_qcs(a.n, a.filter, opts);
        for (auto const& X : r.structures) {
          ctx.out << dump(to_json(X)) << '\n';
        }
        summary["count"] = r.count;
        summary["stats"] = {{"labeled", r.stats.labeled},
                            {"nodes", r.stats.nodes},
                            {"dot_prunes", r.stats.dot_prunes},
                            {"colon_prunes", r.stats.colon_prunes},
                            {"leaves", r.stats.leaves}};
      }
      ctx.out << dump(json{{"summary", summary}}) << '\n';
      return exit_ok;
    }

    // ---- fixtures ----------------------------------------------------------

    int cmd_fixtures(Context const& ctx, std::string const& action, std::string const& name) {
      auto const cat = fixture_catalog();
      if (action == "list") {
        if (ctx.json_mode) {
          json j = json::array();
          for (auto const& f : cat) {
            json claims = json::array();
            for (auto const& c : f.claims) {
              claims.push_back(c.property);
            }
            j.push_back({{"name", f.name}, {"parameters", f.parameters}, {"claims", claims}});
          }
          ctx.out << dump(j) << '\n';
        } else {
          for (auto const& f : cat) {
            ctx.out << f.name << "  (" << f.parameters << ")\n";
          }
        }
        return exit_ok;
      }
      std::vector<Fixture const*> selected;
      if (!name.empty()) {
        auto const* f = find_fixture(cat, name);
        if (f == nullptr) {
          throw Error(ErrorKind::parse_error, "unknown fixture " + name);
        }
        selected.push_back(f);
      } else if (action == "check") {
        for (auto const& f : cat) {
          selected.push_back(&f);
        }
      } else {
        throw Error(ErrorKind::parse_error, "fixtures export needs a fixture name");
      }
      if (action == "export") {
        auto const& s = selected.front()->structure;
        json        j = std::visit([](auto const& v) { return to_json(v); }, s);
        ctx.out << dump(j) << '\n';
        return exit_ok;
      }
      bool all_ok = true;
      json results = json::array();
      for (auto const* f : selected) {
        for (auto const& r : check_fixture(*f)) {
          all_ok &= r.passed();
          if (ctx.json_mode) {
            results.push_back({{"fixture", f->name},
                               {"property", r.property},
                               {"expected", r.expected ? json(*r.expected) : json(nullptr)},
                               {"observed", r.observed},
                               {"passed", r.passed()},
                               {"anchor", r.anchor}});
          } else {
            ctx.out << (!r.expected ? "OBSERVED " : r.passed() ? "PASS " : "FAIL ") << f->name << ": "
                    << r.property << " = " << bool_str(r.observed) << "  [" << r.anchor << "]\n";
          }
        }
      }
      if (ctx.json_mode) {
        ctx.out << dump(json{{"ok", all_ok}, {"claims", results}}) << '\n';
      }
      return all_ok ? exit_ok : exit_violated;
    }

    // ---- sample-pairs ------------------------------------------------------

    int cmd_sample_pairs(Context const& ctx, std::size_t count, std::size_t max_m) {
      std::vector<QCycleSet> bases{trivial_qcycle_set(1),
                                   trivial_qcycle_set(2),
                                   constant_qcycle_set(2, 0),
                                   z3_transposition_qcycle_set(),
                                   shift_qcycle_set(3, 1)};
      auto stats = sample_extension_equivalence(bases, max_m, count, ctx.seed);
      json j;
      j["seed"]               = ctx.seed;
      j["samples"]            = stats.samples;
      j["pairs_valid"]        = stats.pairs_valid;
      j["equivalence_holds"]  = stats.equivalence_holds;
      j["regularity_checked"] = stats.regularity_checked;
      j["regularity_holds"]   = stats.regularity_holds;
      j["failures"]           = stats.failures;
      if (ctx.json_mode) {
        ctx.out << dump(j) << '\n';
      } else {
        for (auto const& [k, v] : j.items()) {
          ctx.out << k << ": " << v.dump() << '\n';
        }
      }
      return stats.ok() ? exit_ok : exit_violated;
    }
  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err, std::istream& in) {
    CLI::App app{"Finite q-cycle sets and left non-degenerate solutions of the Yang-Baxter equation", "qcs"};
    app.require_subcommand(1);

    bool        json_flag = false, text_flag = false;
    std::string output;
    Context     probe{out, err, in};
    app.add_flag("--json", json_flag, "machine-readable output");
    app.add_flag("--text", text_flag, "human-readable output (default)");
    app.add_option("-o,--output", output, "write to this file instead of standard output");
    app.add_option("--seed", probe.seed, "seed for randomized sampling");
    app.add_option("--threads", probe.threads, "worker threads for enumeration")->check(CLI::PositiveNumber);

    std::string path;
    auto*       verify = app.add_subcommand("verify", "check the axioms of a q-cycle set or solution");
    verify->add_option("file", path, "input file or -")->required();

    std::string to;
    auto*       convert = app.add_subcommand("convert", "q-cycle set <-> solution");
    convert->add_option("--to", to, "solution | qcs")->required()->check(CLI::IsMember({"solution", "qcs"}));
    convert->add_option("file", path, "input file or -")->required();

    std::size_t power_bound = 32;
    auto*       analyze     = app.add_subcommand("analyze", "properties, group, orbits, retract, power relation");
    analyze->add_option("file", path, "q-cycle set or solution file, or -")->required();
    analyze->add_option("--power-bound", power_bound, "largest exponent tried")->capture_default_str()->check(CLI::PositiveNumber);

    bool        tower     = false;
    std::size_t max_steps = 16;
    auto*       retract_c = app.add_subcommand("retract", "retraction quotient");
    retract_c->add_option("file", path, "q-cycle set file or -")->required();
    retract_c->add_flag("--tower", tower, "iterate until stable");
    retract_c->add_option("--max-steps", max_steps, "with --tower: most quotients taken")->capture_default_str()->check(CLI::PositiveNumber);

    std::string              pair_path;
    std::vector<std::string> semi;
    auto*                    extend = app.add_subcommand("extend", "dynamical extension or semidirect product");
    auto* pair_opt = extend->add_option("--pair", pair_path, "dynamical pair file");
    auto* semi_opt = extend->add_option("--semidirect", semi, "X S theta")->expected(3);
    pair_opt->excludes(semi_opt);
    extend->require_option(1);

    std::string cover_path;
    auto*       cover     = app.add_subcommand("cover", "covering maps");
    auto*       check_opt = cover->add_option("--check", cover_path, "covering file");
    auto*       factor_opt = cover->add_option("--factor", cover_path, "covering file");
    check_opt->excludes(factor_opt);
    cover->require_option(1);

    auto* simple = app.add_subcommand("simple", "simplicity test");
    simple->add_option("file", path, "q-cycle set file or -")->required();

    EnumArgs    ea;
    std::size_t cap_value = 0;
    auto*       enumerate = app.add_subcommand("enumerate", "exhaustive enumeration (JSON lines)");
    enumerate->add_option("--n", ea.n, "order")->required()->check(CLI::PositiveNumber);
    enumerate->add_flag("--regular", ea.filter.regular, "regular structures only");
    enumerate->add_flag("--nondeg", ea.filter.nondegenerate, "non-degenerate structures only");
    enumerate->add_flag("--cycle-set", ea.filter.cycle_set_only, "cycle sets only (colon = dot)");
    enumerate->add_flag("--up-to-iso", ea.filter.up_to_iso, "one canonical form per isomorphism class");
    auto* cap_opt = enumerate->add_option("--cap", cap_value, "override the order cap");
    enumerate->add_flag("--ack-long-run", ea.ack, "allow a cap above the default");
    enumerate->add_flag("--oracle", ea.oracle, "compare counts with the brute-force oracle");
    enumerate->add_flag("--solutions", ea.solutions, "emit left non-degenerate solutions");
    enumerate->add_flag("--bijective", ea.bijective, "with --solutions: bijective ones only");

    std::string action, fixture_name;
    auto*       fixtures = app.add_subcommand("fixtures", "worked examples and their claims");
    fixtures->add_option("action", action, "list | check | export")->required()->check(CLI::IsMember({"list", "check", "export"}));
    fixtures->add_option("name", fixture_name, "fixture name (check: all when omitted)");

    std::size_t count = 200, max_m = 3;
    auto*       sample = app.add_subcommand("sample-pairs", "random dynamical pairs: extension equivalence and regularity criterion");
    sample->add_option("--count", count, "number of pairs drawn")->capture_default_str()->check(CLI::PositiveNumber);
    sample->add_option("--max-m", max_m, "largest fibre size")->capture_default_str()->check(CLI::Range(1, 4));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      if (e.get_exit_code() == 0) {
        app.exit(e, out, err);
        return exit_ok;
      }
      err << "error: " << e.what() << '\n';
      return exit_input;
    }
    if (json_flag && text_flag) {
      err << "error: --json and --text are exclusive\n";
      return exit_input;
    }

    std::ostringstream buffer;
    Context            ctx{output.empty() ? out : buffer, err, in, json_flag, probe.seed, probe.threads};
    if (*cap_opt) {
      ea.cap = cap_value;
    }
    int code = exit_ok;
    try {
      if (*verify) {
        code = cmd_verify(ctx, path);
      } else if (*convert) {
        code = cmd_convert(ctx, to, path);
      } else if (*analyze) {
        code = cmd_analyze(ctx, path, power_bound);
      } else if (*retract_c) {
        code = cmd_retract(ctx, path, tower, max_steps);
      } else if (*extend) {
        code = *pair_opt ? cmd_extend_pair(ctx, pair_path) : cmd_extend_semidirect(ctx, semi);
      } else if (*cover) {
        code = cmd_cover(ctx, cover_path, static_cast<bool>(*factor_opt));
      } else if (*simple) {
        code = cmd_simple(ctx, path);
      } else if (*enumerate) {
        code = cmd_enumerate(ctx, ea);
      } else if (*fixtures) {
        code = cmd_fixtures(ctx, action, fixture_name);
      } else if (*sample) {
        code = cmd_sample_pairs(ctx, count, max_m);
      }
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      code = exit_code(e.kind());
    }
    if (!output.empty()) {
      std::ofstream f(output);
      if (!f) {
        err << "error: cannot write " << output << '\n';
        return exit_input;
      }
      f << buffer.str();
    }
    return code;
  }

}  // namespace qcs
