#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "genpos/conductor.hpp"

namespace genpos {

struct ModelOptions {
  std::optional<Field> field;  // overrides the model's field
  std::uint32_t box = 0;       // 0: from the model
  std::uint64_t subset_budget = 20000;
  unsigned jobs = 1;
  GroebnerBudget budget;
};

/// Certificate for a conductor model document: "points" (also a bare point
/// set), "semigroup", "monomial-algebra" or "arrangement".
ConductorCertificate conductor_for_model(const nlohmann::json& model, const ModelOptions& options = {});

/// Tangent cone report for a curve document (with "branches") or an ideal
/// document; degree_bound 0 picks the bound automatically.
nlohmann::json tangent_cone_report(const nlohmann::json& input, std::size_t e_guess = 1, std::uint32_t degree_bound = 0,
                                   const std::optional<Field>& field = std::nullopt, const GroebnerBudget& budget = {});

/// Exit codes. `conductor` returns 0/1/3 for match/mismatch/hypotheses-failed,
/// `points-check` 0/1 for generic/not generic; errors return 2.
enum ExitCode : int { kExitOk = 0, kExitNegative = 1, kExitError = 2, kExitHypothesesFailed = 3 };

/// Runs the command line `args` (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace genpos
