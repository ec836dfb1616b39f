#include "qcs/json_io.hpp"

#include <string>

namespace qcs {

  namespace {
    [[noreturn]] void fail(std::string const& msg) {
      throw Error(ErrorKind::parse_error, msg);
    }

    json const& field(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        fail(std::string("missing field \"") + key + "\"");
      }
      return j.at(key);
    }

    std::size_t as_size(json const& j, char const* what) {
      if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
        fail(std::string(what) + " must be a non-negative integer");
      }
      return j.get<std::size_t>();
    }

    std::vector<point_type> as_points(json const& j, std::size_t len, char const* what) {
      if (!j.is_array() || j.size() != len) {
        fail(std::string(what) + " must be an array of length " + std::to_string(len));
      }
      std::vector<point_type> out;
      out.reserve(len);
      for (auto const& v : j) {
        out.push_back(static_cast<point_type>(as_size(v, what)));
      }
      return out;
    }

    OpTable table_from(json const& j, std::size_t n, char const* what) {
      if (!j.is_array() || j.size() != n) {
        fail(std::string(what) + " must have " + std::to_string(n) + " rows");
      }
      std::vector<point_type> entries;
      for (auto const& row : j) {
        auto r = as_points(row, n, what);
        entries.insert(entries.end(), r.begin(), r.end());
      }
      return OpTable(n, std::move(entries));
    }

    json rows(std::span<point_type const> flat, std::size_t width) {
      json out = json::array();
      for (std::size_t i = 0; i < flat.size(); i += width) {
        out.push_back(std::vector<point_type>(flat.begin() + i, flat.begin() + i + width));
      }
      return out;
    }
  }  // namespace

  json parse_json(std::string const& text) {
    try {
      return json::parse(text);
    } catch (json::parse_error const& e) {
      fail("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
  }

  DocumentKind detect_kind(json const& j) {
    if (!j.is_object()) {
      fail("expected a JSON object");
    }
    bool const tables = j.contains("dot") || j.contains("colon");
    bool const r      = j.contains("r");
    if (tables == r) {
      fail(tables ? "ambiguous document: has both \"dot\"/\"colon\" and \"r\""
                  : "unrecognised document: expected \"dot\"/\"colon\" or \"r\"");
    }
    return tables ? DocumentKind::qcycle_set : DocumentKind::solution;
  }

  json to_json(OpTable const& t) {
    return rows(t.entries(), t.degree());
  }

  json to_json(QCycleSet const& X) {
    json j;
    j["n"]     = X.size();
    j["dot"]   = to_json(X.dot());
    j["colon"] = to_json(X.colon());
    return j;
  }

  json to_json(SolutionMap const& s) {
    json j;
    j["n"]    = s.size();
    json r    = json::array();
    auto const n = static_cast<point_type>(s.size());
    for (point_type x = 0; x < n; ++x) {
      json row = json::array();
      for (point_type y = 0; y < n; ++y) {
        auto [a, b] = s(x, y);
        row.push_back({a, b});
      }
      r.push_back(std::move(row));
    }
    j["r"] = std::move(r);
    return j;
  }

  json to_json(DynamicalPair const& d) {
    auto const n = static_cast<point_type>(d.base().size());
    auto const m = static_cast<point_type>(d.fiber_size());
    json       alpha = json::array(), prime = json::array();
    for (point_type x = 0; x < n; ++x) {
      json ax = json::array(), px = json::array();
      for (point_type y = 0; y < n; ++y) {
        json axy = json::array(), pxy = json::array();
        for (point_type s = 0; s < m; ++s) {
          auto a = d.alpha_row(x, y, s);
          auto p = d.alpha_prime_row(x, y, s);
          axy.push_back(std::vector<point_type>(a.begin(), a.end()));
          pxy.push_back(std::vector<point_type>(p.begin(), p.end()));
        }
        ax.push_back(std::move(axy));
        px.push_back(std::move(pxy));
      }
      alpha.push_back(std::move(ax));
      prime.push_back(std::move(px));
    }
    json j;
    j["base"]        = to_json(d.base());
    j["m"]           = m;
    j["alpha"]       = std::move(alpha);
    j["alpha_prime"] = std::move(prime);
    return j;
  }

  json to_json(CoveringMap const& c) {
    json j;
    j["source"] = to_json(c.source);
    j["target"] = to_json(c.target);
    j["p"]      = c.p;
    return j;
  }

  json to_json(Violation const& v) {
    json j;
    j["law"]     = std::string(to_string(v.law));
    j["witness"] = v.witness;
    j["lhs"]     = v.lhs;
    j["rhs"]     = v.rhs;
    return j;
  }

  json to_json(VerificationReport const& r) {
    json j;
    j["ok"]         = r.ok();
    j["violations"] = json::array();
    for (auto const& v : r.violations()) {
      j["violations"].push_back(to_json(v));
    }
    return j;
  }

  json to_json(RetractQuotient const& q) {
    auto j       = to_json(q.quotient);
    j["classes"] = q.classes;
    return j;
  }

  json to_json(ZPoint const& p) {
    return json::array({p.x, json::array({p.a, p.b})});
  }

  json to_json(ZExampleWitness const& w) {
    json j;
    j["square_of_minus2"]    = to_json(w.square_of_minus2);
    j["square_of_minus1"]    = to_json(w.square_of_minus1);
    j["degenerate"]          = w.degenerate;
    j["sample"]              = to_json(w.sample);
    j["sigma_minus2_sample"] = to_json(w.sigma_minus2_sample);
    j["sigma_minus1_sample"] = to_json(w.sigma_minus1_sample);
    j["sigmas_differ"]       = w.sigmas_differ;
    return j;
  }

  std::pair<OpTable, OpTable> tables_from_json(json const& j) {
    auto const n = as_size(field(j, "n"), "n");
    if (n == 0) {
      fail("n must be positive");
    }
    return {table_from(field(j, "dot"), n, "dot"), table_from(field(j, "colon"), n, "colon")};
  }

  QCycleSet qcycle_set_from_json(json const& j) {
    auto [dot, colon] = tables_from_json(j);
    return QCycleSet(std::move(dot), std::move(colon));
  }

  SolutionMap solution_from_json(json const& j) {
    auto const  n = as_size(field(j, "n"), "n");
    auto const& r = field(j, "r");
    if (n == 0 || !r.is_array() || r.size() != n) {
      fail("r must have n rows");
    }
    std::vector<SolutionMap::pair_type> table;
    for (auto const& row : r) {
      if (!row.is_array() || row.size() != n) {
        fail("each row of r must have n entries");
      }
      for (auto const& cell : row) {
        auto p = as_points(cell, 2, "r entry");
        table.emplace_back(p[0], p[1]);
      }
    }
    return SolutionMap(n, std::move(table));
  }

  DynamicalPair pair_from_json(json const& j) {
    auto       base = qcycle_set_from_json(field(j, "base"));
    auto const m    = as_size(field(j, "m"), "m");
    auto const n    = base.size();
    auto       flat = [&](char const* key) {
      auto const&             a = field(j, key);
      std::vector<point_type> out;
      if (!a.is_array() || a.size() != n) {
        fail(std::string(key) + " must have one entry per base point");
      }
      for (auto const& ax : a) {
        if (!ax.is_array() || ax.size() != n) {
          fail(std::string(key) + "[x] must have one entry per base point");
        }
        for (auto const& axy : ax) {
          if (!axy.is_array() || axy.size() != m) {
            fail(std::string(key) + "[x][y] must have m rows");
          }
          for (auto const& row : axy) {
            auto r = as_points(row, m, key);
            out.insert(out.end(), r.begin(), r.end());
          }
        }
      }
      return out;
    };
    auto alpha = flat("alpha");
    auto prime = flat("alpha_prime");
    return DynamicalPair(std::move(base), m, std::move(alpha), std::move(prime));
  }

  CoveringMap covering_from_json(json const& j) {
    auto source = qcycle_set_from_json(field(j, "source"));
    auto target = qcycle_set_from_json(field(j, "target"));
    auto p      = as_points(field(j, "p"), source.size(), "p");
    return CoveringMap(std::move(source), std::move(target), std::move(p));
  }

  std::vector<Perm> theta_from_json(json const& j) {
    auto const& t = j.is_object() ? field(j, "theta") : j;
    if (!t.is_array()) {
      fail("theta must be an array of image sequences");
    }
    std::vector<Perm> out;
    for (auto const& row : t) {
      if (!row.is_array()) {
        fail("theta entries must be image sequences");
      }
      out.emplace_back(as_points(row, row.size(), "theta"));
    }
    return out;
  }

}  // namespace qcs
