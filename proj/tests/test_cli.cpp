#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doctest.h"

#include "qcs/cli.hpp"

namespace fs = std::filesystem;

namespace {
  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result qcs_run(std::vector<std::string> args, std::string const& stdin_text = "") {
    std::ostringstream out, err;
    std::istringstream in(stdin_text);
    int                code = qcs::run(args, out, err, in);
    return {code, out.str(), err.str()};
  }

  struct TempDir {
    fs::path path;
    TempDir() {
      path = fs::temp_directory_path() / ("qcs_cli_test_" + std::to_string(::getpid()));
      fs::create_directories(path);
    }
    ~TempDir() {
      std::error_code ec;
      fs::remove_all(path, ec);
    }
    std::string write(std::string const& name, std::string const& text) const {
      auto p = path / name;
      std::ofstream(p) << text;
      return p.string();
    }
  };

  std::size_t count_lines(std::string const& s) {
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
  }

  std::string const z3_json = R"({"n":3,"dot":[[1,0,2],[1,0,2],[0,1,2]],"colon":[[0,1,2],[0,1,2],[1,0,2]]})";
  std::string const trivial2 = R"({"n":2,"dot":[[0,1],[0,1]],"colon":[[0,1],[0,1]]})";
  std::string const trivial4
      = R"({"n":4,"dot":[[0,1,2,3],[0,1,2,3],[0,1,2,3],[0,1,2,3]],"colon":[[0,1,2,3],[0,1,2,3],[0,1,2,3],[0,1,2,3]]})";
}  // namespace

TEST_CASE("cli: verify") {
  TempDir dir;
  auto    s4 = qcs_run({"fixtures", "export", "simple4"});
  REQUIRE(s4.code == 0);
  auto r = qcs_run({"verify", dir.write("s4.json", s4.out)});
  CHECK(r.code == 0);
  CHECK(r.out == "qcycle_set: ok\n  n: 4\n");

  auto bad = qcs_run({"verify", "-"}, R"({"n":2,"dot":[[0,0],[0,1]],"colon":[[0,1],[0,1]]})");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("row-bijectivity at (0,0,1): lhs=(0) rhs=(0)") != std::string::npos);

  auto js = qcs_run({"--json", "verify", "-"}, R"({"n":2,"r":[[[0,0],[1,0]],[[0,1],[1,1]]]})");
  CHECK(js.code == 0);
  CHECK(js.out
        == R"({"kind":"solution","n":2,"bijective":true,"left_nondegenerate":true,"right_nondegenerate":true,"ok":true,"violations":[]})"
           "\n");

  auto braid = qcs_run({"--json", "verify", "-"}, R"({"n":2,"r":[[[1,0],[1,1]],[[0,0],[0,1]]]})");
  CHECK(braid.code == 1);
  CHECK(braid.out.find(R"("law":"braid")") != std::string::npos);
}

TEST_CASE("cli: input errors") {
  auto malformed = qcs_run({"verify", "-"}, "{\"n\": 2, \"dot\": [[0,1],");
  CHECK(malformed.code == 2);
  CHECK(malformed.err.find("malformed JSON at byte") != std::string::npos);

  CHECK(qcs_run({"verify", "-"}, R"({"n":1,"dot":[[0]],"colon":[[0]],"r":[[[0,0]]]})").code == 2);
  CHECK(qcs_run({"verify", "-"}, R"({"n":2,"dot":[[0,2],[0,1]],"colon":[[0,1],[0,1]]})").code == 2);
  CHECK(qcs_run({"verify", "/nonexistent/file.json"}).code == 2);
  CHECK(qcs_run({"frobnicate"}).code == 2);
  CHECK(qcs_run({"--json", "--text", "fixtures", "list"}).code == 2);
  // analyze needs a valid structure
  CHECK(qcs_run({"analyze", "-"}, R"({"n":2,"dot":[[0,0],[0,1]],"colon":[[0,1],[0,1]]})").code == 2);
  CHECK(qcs_run({"--help"}).code == 0);
}

TEST_CASE("cli: analyze") {
  auto r = qcs_run({"analyze", "-"}, z3_json);
  CHECK(r.code == 0);
  CHECK(r.out.find("r^4 = id: true") != std::string::npos);
  CHECK(r.out.find("orbits: {0,1} {2}") != std::string::npos);
  auto j = qcs_run({"--json", "analyze", "-"}, z3_json);
  CHECK(j.out
        == R"({"n":3,"regular":true,"nondegenerate":true,"cycle_set":false,"q":[1,0,2],"q_prime":[0,1,2],"r_bijective":true,"right_nondegenerate":true,"group_order":2,"orbits":[[0,1],[2]],"retract_classes":2,"power_relation":[4,0]})"
           "\n");
  auto k = qcs_run({"analyze", "-"}, R"({"n":3,"dot":[[0,1,2],[0,1,2],[0,1,2]],"colon":[[0,0,0],[0,0,0],[0,0,0]]})");
  CHECK(k.out.find("group order: n/a (not regular)") != std::string::npos);
  CHECK(k.out.find("r^3 = r^2: true") != std::string::npos);
  // solutions are accepted too
  auto s = qcs_run({"analyze", "-"}, R"({"n":2,"r":[[[0,0],[1,0]],[[0,1],[1,1]]]})");
  CHECK(s.out.find("r^2 = id: true") != std::string::npos);
}

TEST_CASE("cli: convert") {
  auto sol = qcs_run({"convert", "--to", "solution", "-"}, z3_json);
  CHECK(sol.code == 0);
  CHECK(sol.out == R"({"n":3,"r":[[[1,0],[0,0],[2,1]],[[1,1],[0,1],[2,0]],[[0,2],[1,2],[2,2]]]})" "\n");
  auto back = qcs_run({"convert", "--to", "qcs", "-"}, sol.out);
  CHECK(back.code == 0);
  CHECK(back.out == z3_json + "\n");
  // lambda_x not bijective
  auto bad = qcs_run({"convert", "--to", "qcs", "-"}, R"({"n":2,"r":[[[0,0],[0,0]],[[0,0],[0,0]]]})");
  CHECK(bad.code == 1);
  CHECK(bad.err.find("NotLeftNonDegenerate") != std::string::npos);
  CHECK(qcs_run({"convert", "--to", "qcs", "-"}, z3_json).code == 2);
  CHECK(qcs_run({"convert", "--to", "matrix", "-"}, z3_json).code == 2);
}

TEST_CASE("cli: retract") {
  auto r = qcs_run({"retract", "-"}, z3_json);
  CHECK(r.code == 0);
  CHECK(r.out == R"({"n":2,"dot":[[0,1],[0,1]],"colon":[[0,1],[0,1]],"classes":[[0,1],[2]]})" "\n");
  auto t = qcs_run({"retract", "--tower", "-"}, z3_json);
  CHECK(t.out.find(R"("sizes":[3,2,1])") != std::string::npos);
  CHECK(t.out.find(R"("irretractable":false)") != std::string::npos);
  CHECK(qcs_run({"retract", "-"}, R"({"n":3,"dot":[[0,1,2],[0,1,2],[0,1,2]],"colon":[[0,0,0],[0,0,0],[0,0,0]]})").code == 1);
}

TEST_CASE("cli: extend") {
  TempDir dir;
  auto    pair = qcs_run({"fixtures", "export", "gxg-pair"});
  REQUIRE(pair.code == 0);
  auto e = qcs_run({"extend", "--pair", dir.write("pair.json", pair.out)});
  CHECK(e.code == 0);
  CHECK(e.out.rfind(R"({"n":18,)", 0) == 0);
  CHECK(e.out.find(R"("extension":{"base_n":2,"m":9,"point":"x * m + s"})") != std::string::npos);

  // one alpha' row changed: ugd2 fails
  auto broken = qcs_run({"--json", "extend", "--pair", "-"},
                        R"({"base":{"n":1,"dot":[[0]],"colon":[[0]]},"m":2,"alpha":[[[[0,1],[0,1]]]],"alpha_prime":[[[[0,0],[1,0]]]]})");
  CHECK(broken.code == 1);
  CHECK(broken.out.find(R"("kind":"dynamical_pair","ok":false)") != std::string::npos);

  auto x     = dir.write("x.json", R"({"n":3,"dot":[[0,1,2],[0,1,2],[0,1,2]],"colon":[[0,0,2],[0,0,2],[0,0,2]]})");
  auto s     = dir.write("s.json", R"({"n":3,"dot":[[0,1,2],[0,1,2],[0,1,2]],"colon":[[0,1,2],[0,1,2],[0,1,2]]})");
  auto theta = dir.write("theta.json", R"({"theta":[[1,0,2],[1,0,2],[0,1,2]]})");
  auto p     = qcs_run({"extend", "--semidirect", x, s, theta});
  CHECK(p.code == 0);
  CHECK(p.out.rfind(R"({"n":9,)", 0) == 0);
  auto bad_theta = dir.write("bad.json", R"({"theta":[[1,0,2],[0,1,2],[0,1,2]]})");
  auto c         = qcs_run({"extend", "--semidirect", x, s, bad_theta});
  CHECK(c.code == 1);
  CHECK(c.err.find("CompatibilityFailed") != std::string::npos);
}

TEST_CASE("cli: cover") {
  auto parity = R"({"source":)" + trivial4 + R"(,"target":)" + trivial2 + R"(,"p":[0,1,0,1]})";
  auto ok     = qcs_run({"cover", "--check", "-"}, parity);
  CHECK(ok.code == 0);
  CHECK(ok.out == "covering: ok\n");
  auto f = qcs_run({"cover", "--factor", "-"}, parity);
  CHECK(f.code == 0);
  CHECK(f.out.rfind(R"({"m":2,"pair":{"base":)", 0) == 0);
  CHECK(f.out.find(R"("phi":[0,2,1,3]})") != std::string::npos);

  auto ret = R"({"source":)" + z3_json + R"(,"target":)" + trivial2 + R"(,"p":[0,0,1]})";
  auto bad = qcs_run({"cover", "--check", "-"}, ret);
  CHECK(bad.code == 1);
  CHECK(bad.out.find("fiber-uniformity at (1): lhs=(1) rhs=(2)") != std::string::npos);
  CHECK(qcs_run({"cover", "--factor", "-"}, ret).code == 1);
}

TEST_CASE("cli: simple") {
  auto s4 = qcs_run({"fixtures", "export", "simple4"});
  CHECK(qcs_run({"simple", "-"}, s4.out).out == "simple: true\n");
  auto t = qcs_run({"--json", "simple", "-"}, trivial4);
  CHECK(t.code == 1);
  CHECK(t.out == R"({"simple":false,"congruences":[[[0,1],[2,3]],[[0,2],[1,3]],[[0,3],[1,2]]]})" "\n");
}

TEST_CASE("cli: enumerate") {
  auto r = qcs_run({"enumerate", "--n", "2", "--up-to-iso"});
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 11);
  CHECK(r.out.find(R"({"summary":{"n":2,"filter":{"regular":false,"nondegenerate":false,"cycle_set":false,"up_to_iso":true},"count":10,)")
        != std::string::npos);
  for (std::string t : {"2", "8"}) {
    CHECK(qcs_run({"--threads", t, "enumerate", "--n", "3", "--regular"}).out
          == qcs_run({"enumerate", "--n", "3", "--regular"}).out);
  }
  auto o = qcs_run({"enumerate", "--n", "3", "--oracle"});
  CHECK(o.code == 0);
  CHECK(o.out.find(R"("oracle":{"labeled":354,"classes":90},"engine":{"labeled":354,"classes":90},"match":true)")
        != std::string::npos);
  CHECK(qcs_run({"enumerate", "--n", "3", "--cycle-set", "--oracle"}).code == 0);
  CHECK(qcs_run({"enumerate", "--n", "3", "--solutions", "--bijective", "--oracle"}).code == 0);
  CHECK(qcs_run({"enumerate", "--n", "4", "--oracle"}).code == 2);

  auto sols = qcs_run({"enumerate", "--n", "2", "--solutions", "--bijective", "--up-to-iso"});
  CHECK(count_lines(sols.out) == 5);

  auto capped = qcs_run({"enumerate", "--n", "5"});
  CHECK(capped.code == 2);
  CHECK(capped.err.find("CapExceeded") != std::string::npos);
  CHECK(qcs_run({"enumerate", "--n", "5", "--cap", "5"}).code == 2);
  CHECK(qcs_run({"enumerate", "--n", "1", "--cap", "7", "--ack-long-run"}).code == 2);
  CHECK(qcs_run({"enumerate", "--n", "1", "--cap", "5", "--ack-long-run"}).code == 0);
}

TEST_CASE("cli: fixtures") {
  auto l = qcs_run({"fixtures", "list"});
  CHECK(l.code == 0);
  CHECK(count_lines(l.out) >= 12);
  auto c = qcs_run({"fixtures", "check", "simple4"});
  CHECK(c.code == 0);
  CHECK(c.out.find("PASS simple4: simple = true") != std::string::npos);
  auto all = qcs_run({"--json", "fixtures", "check"});
  CHECK(all.code == 0);
  CHECK(all.out.rfind(R"({"ok":true,)", 0) == 0);
  CHECK(qcs_run({"fixtures", "check", "nope"}).code == 2);
  CHECK(qcs_run({"fixtures", "export"}).code == 2);
  auto z = qcs_run({"fixtures", "export", "z-example"});
  CHECK(z.out.find(R"("square_of_minus2":[0,[0,0]])") != std::string::npos);
}

TEST_CASE("cli: sample-pairs is seeded and deterministic") {
  auto a = qcs_run({"--json", "--seed", "5", "sample-pairs", "--count", "40"});
  auto b = qcs_run({"--json", "--seed", "5", "sample-pairs", "--count", "40"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find(R"("samples":40)") != std::string::npos);
  CHECK(a.out.find(R"("failures":[])") != std::string::npos);
}

TEST_CASE("cli: --output writes to a file") {
  TempDir dir;
  auto    path = (dir.path / "out.json").string();
  auto    r    = qcs_run({"-o", path, "convert", "--to", "solution", "-"}, z3_json);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream     f(path);
  std::stringstream s;
  s << f.rdbuf();
  CHECK(s.str().rfind(R"({"n":3,"r":)", 0) == 0);
}
