#pragma once

// Reproduction cases for the worked examples: each recomputes a claim from
// scratch and returns a canonical JSON record compared against a golden file.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace genpos {

struct ExampleSettings {
  std::string fixture_dir;
  std::uint64_t seed = 1;
  std::uint64_t subset_budget = 20000;
};

struct ExampleOutcome {
  std::string id;
  std::string claim;
  std::string computed;
  bool claim_holds = false;
  nlohmann::json record;  // compared against fixtures/golden/<id>.json
};

const std::vector<std::string>& example_ids();

/// Throws DomainError for unknown ids and ParseError for missing fixtures.
ExampleOutcome run_example(const std::string& id, const ExampleSettings& settings);

}  // namespace genpos
