#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qcs/dynamical_pair.hpp"
#include "qcs/families.hpp"
#include "qcs/qcycle_set.hpp"

namespace qcs {

  struct Claim {
    std::string          property;
    std::optional<bool>  expected;  // nullopt: observed, not asserted
    std::string          anchor;    // the formula or statement being checked
    std::function<bool()> evaluate;
  };

  using FixtureStructure = std::variant<QCycleSet, DynamicalPair, ZExampleWitness>;

  struct Fixture {
    std::string        name;
    std::string        parameters;
    FixtureStructure   structure;
    std::vector<Claim> claims;
  };

  struct ClaimResult {
    std::string         property;
    std::optional<bool> expected;
    bool                observed;
    std::string         anchor;

    [[nodiscard]] bool passed() const noexcept {
      return !expected || *expected == observed;
    }
  };

  std::vector<Fixture> fixture_catalog();

  // nullptr if absent.
  Fixture const* find_fixture(std::vector<Fixture> const& catalog, std::string const& name);

  std::vector<ClaimResult> check_fixture(Fixture const& f);

}  // namespace qcs
