#pragma once

#include <string>
#include <utility>

#include "json.hpp"

#include "qcs/covering.hpp"
#include "qcs/dynamical_pair.hpp"
#include "qcs/families.hpp"
#include "qcs/qcycle_set.hpp"
#include "qcs/report.hpp"
#include "qcs/retract.hpp"
#include "qcs/solution.hpp"

namespace qcs {

  using json = nlohmann::ordered_json;

  // Parses text; Error(parse_error) carries the byte position on failure.
  json parse_json(std::string const& text);

  // Canonical serialisation: fixed key order, no whitespace.
  inline std::string dump(json const& j) {
    return j.dump();
  }

  enum class DocumentKind { qcycle_set, solution };

  // "dot"/"colon" -> qcycle_set, "r" -> solution; anything else, or both,
  // is Error(parse_error).
  DocumentKind detect_kind(json const& j);

  json to_json(OpTable const& t);
  json to_json(QCycleSet const& X);
  json to_json(SolutionMap const& s);
  json to_json(DynamicalPair const& d);
  json to_json(CoveringMap const& c);
  json to_json(Violation const& v);
  json to_json(VerificationReport const& r);
  json to_json(RetractQuotient const& q);
  json to_json(ZPoint const& p);
  json to_json(ZExampleWitness const& w);

  // Tables only, range-checked but without axiom checks.
  std::pair<OpTable, OpTable> tables_from_json(json const& j);
  // Checked q-cycle set; Error(invalid_structure) if the axioms fail.
  QCycleSet      qcycle_set_from_json(json const& j);
  SolutionMap    solution_from_json(json const& j);
  DynamicalPair  pair_from_json(json const& j);
  CoveringMap    covering_from_json(json const& j);
  std::vector<Perm> theta_from_json(json const& j);

}  // namespace qcs
