#include "genpos/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>

#include "genpos/conductor.hpp"
#include "genpos/errors.hpp"
#include "genpos/examples.hpp"
#include "genpos/io.hpp"
#include "genpos/tangent_cone.hpp"

#ifndef GENPOS_FIXTURE_DIR
#define GENPOS_FIXTURE_DIR "fixtures"
#endif

namespace genpos {

using nlohmann::json;

ConductorCertificate conductor_for_model(const json& model, const ModelOptions& c) {
  if (!model.is_object()) throw ParseError("model must be a JSON object");
  // A plain point-set file is accepted as the points model.
  if (!model.contains("model") && !model.contains("points")) throw ParseError("missing field \"model\"");
  const std::string kind = model.value("model", std::string("points"));
  if (kind == "points") {
    return check_points_conductor(parse_point_set(model, c.field), c.subset_budget, c.jobs);
  }
  if (kind == "semigroup") {
    return semigroup_contrast_certificate(model.at("generators").get<std::vector<std::uint64_t>>());
  }
  if (kind == "monomial-algebra") {
    if (model.contains("family")) {
      if (model.at("family") != "XY^n-Z^n") throw ParseError("unknown family " + model.at("family").dump());
      const auto n = model.at("n").get<unsigned>();
      const std::uint32_t box = c.box != 0 ? c.box : model.value("box", 4 * n);
      return xyn_zn_certificate(n, box);
    }
    const auto gens = model.at("generators").get<std::vector<Exponent>>();
    const std::uint32_t box = c.box != 0 ? c.box : model.at("box").get<std::uint32_t>();
    const json& cand = model.at("candidate");
    return monomial_algebra_certificate({gens, box}, cand.at("generators").get<std::vector<Exponent>>(),
                                        cand.value("label", std::string("candidate")));
  }
  if (kind == "arrangement") {
    const Ideal forms = parse_ideal(json{{"vars", model.at("vars")},
                                         {"gens", model.at("forms")},
                                         {"field", model.value("field", json("Q"))}},
                                    c.field);
    return check_arrangement_conductor(forms.generators(), c.budget);
  }
  throw ParseError("unknown model \"" + kind + "\"");
}

json tangent_cone_report(const json& input, std::size_t e_guess, std::uint32_t degree_bound,
                         const std::optional<Field>& field, const GroebnerBudget& budget) {
  std::optional<BranchCurve> curve;
  std::optional<Ideal> ideal;
  if (input.contains("branches")) {
    curve = parse_curve(input, field);
    ideal = curve_ideal(*curve, budget);
    e_guess = std::max(e_guess, curve->branches().size());
  } else {
    ideal = parse_ideal(input, field);
  }
  const std::optional<std::uint32_t> d = degree_bound != 0 ? std::optional<std::uint32_t>(degree_bound) : std::nullopt;
  const TangentConeResult cone = tangent_cone(*ideal, e_guess, d, 2, budget);
  json gens = json::object();
  for (std::size_t k = 0; k < cone.cone.generators.size(); ++k) {
    if (!cone.cone.generators[k].empty()) gens[std::to_string(k)] = polynomials_to_json(cone.cone.generators[k]);
  }
  json result{{"ideal", polynomials_to_json(ideal->basis())},
              {"degree_bound", cone.cone.degree_bound},
              {"attempts", cone.attempts},
              {"hilbert", cone.profile.hilbert},
              {"multiplicity", cone.profile.multiplicity},
              {"emdim", cone.profile.emdim},
              {"stabilization_degree", cone.profile.stabilization_degree},
              {"initial_form_generators", gens}};
  if (curve) {
    const PointSet points = branch_tangent_points(*curve);
    result["tangent_points"] = point_set_to_json(points);
    result["tangent_points_genericity"] = genericity_to_json(is_generic_position(points));
  }
  return result;
}

namespace {

struct RunConfig {
  std::string input;
  std::string field;
  std::uint32_t degree_bound = 0;  // 0: automatic
  std::uint32_t box = 0;           // 0: from the model, else 4n
  std::uint64_t subset_budget = 20000;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::string json_out;
  GroebnerBudget budget;

  std::optional<Field> field_override() const {
    if (field.empty()) return std::nullopt;
    return parse_field_text(field);
  }
};

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  try {
    std::size_t used = 0;
    const auto n = std::stoull(v, &used);
    if (used != std::string(v).size() || n == 0) throw std::invalid_argument(v);
    return n;
  } catch (const std::exception&) {
    throw ParseError(std::string(name) + " must be a positive integer");
  }
}

RunConfig defaults_from_env() {
  RunConfig c;
  c.subset_budget = env_u64("GENPOS_SUBSET_BUDGET", c.subset_budget);
  c.budget.max_basis_size = env_u64("GENPOS_GB_MAX_BASIS", c.budget.max_basis_size);
  c.budget.max_pairs = env_u64("GENPOS_GB_MAX_PAIRS", c.budget.max_pairs);
  return c;
}

void add_common(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--field", c.field, "Override the input field: Q, GF(p) or p");
  cmd->add_option("--subset-budget", c.subset_budget, "Maximum number of subsets for t-position checks")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", c.seed, "Seed for randomized steps");
  cmd->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--json-out", c.json_out, "Write the JSON certificate here ('-' for stdout)");
  cmd->add_option("--max-basis", c.budget.max_basis_size, "Groebner basis size cap")->check(CLI::PositiveNumber);
  cmd->add_option("--max-pairs", c.budget.max_pairs, "Groebner pair cap")->check(CLI::PositiveNumber);
}

json envelope(const std::string& command, const RunConfig& c, json input, json result) {
  json budgets{{"subset_budget", c.subset_budget},
               {"max_basis_size", c.budget.max_basis_size},
               {"max_pairs", c.budget.max_pairs}};
  if (c.degree_bound != 0) budgets["degree_bound"] = c.degree_bound;
  if (c.box != 0) budgets["box"] = c.box;
  return json{{"tool", {{"name", "genpos"}, {"version", kToolVersion}}},
              {"command", command},
              {"seed", c.seed},
              {"budgets", budgets},
              {"input", std::move(input)},
              {"result", std::move(result)}};
}

// Writes the certificate; returns false when the report on `out` should be skipped.
bool emit(const RunConfig& c, const json& doc, std::ostream& out) {
  if (c.json_out.empty()) return true;
  if (c.json_out == "-") {
    out << canonical_json(doc);
    return false;
  }
  std::ofstream f(c.json_out);
  if (!f) throw ParseError("cannot write " + c.json_out);
  f << canonical_json(doc);
  return true;
}

// -------------------------------------------------------------- points-check

int cmd_points_check(const RunConfig& c, std::optional<std::size_t> t, std::ostream& out) {
  const json input = read_json_file(c.input);
  const PointSet x = parse_point_set(input, c.field_override());
  GenericityCertificate cert =
      t ? is_generic_t_position(x, *t, c.subset_budget, c.jobs) : is_generic_position(x);
  json result = genericity_to_json(cert);
  result["e"] = x.size();
  result["r"] = x.r();
  result["nu"] = nu(x.size(), x.r());
  if (emit(c, envelope("points-check", c, point_set_to_json(x), result), out)) {
    out << "points: e = " << x.size() << " in P^" << x.r() << " over " << x.field().to_string() << "\n";
    if (!cert.hilbert.empty()) {
      out << "hilbert function:";
      for (auto h : cert.hilbert) out << " " << h;
      out << "\n";
    }
    if (cert.generic) {
      out << "generic " << (t ? std::to_string(*t) + "-position" : "position") << "\n";
    } else {
      out << "NOT generic: failing degree " << *cert.failing_degree << ", witness " << cert.witness->to_string()
          << "\n";
      if (cert.failing_subset.size() < x.size()) {
        out << "failing subset:";
        for (auto i : cert.failing_subset) out << " " << i;
        out << "\n";
      }
    }
  }
  return cert.generic ? kExitOk : kExitNegative;
}

// -------------------------------------------------------------- conductor

int cmd_conductor(const RunConfig& c, std::ostream& out) {
  const json input = read_json_file(c.input);
  const ConductorCertificate cert =
      conductor_for_model(input, ModelOptions{c.field_override(), c.box, c.subset_budget, c.jobs, c.budget});
  const json doc = envelope("conductor", c, input, cert.to_json());
  if (emit(c, doc, out)) {
    out << "model: " << cert.model.value("kind", "?") << "\n";
    out << "claimed: " << cert.claimed.dump() << "\n";
    out << "oracle: " << cert.oracle.dump() << "\n";
    out << "hypotheses: " << cert.hypotheses.dump() << "\n";
    out << "comparison: " << (cert.agrees ? "match" : "mismatch") << "\n";
    out << "verdict: " << to_string(cert.verdict()) << "\n";
  }
  switch (cert.verdict()) {
    case Verdict::Match: return kExitOk;
    case Verdict::Mismatch: return kExitNegative;
    case Verdict::HypothesesFailed: return kExitHypothesesFailed;
  }
  return kExitError;
}

// -------------------------------------------------------------- tangent-cone

int cmd_tangent_cone(const RunConfig& c, std::size_t e_guess, std::ostream& out) {
  const json input = read_json_file(c.input);
  const json result = tangent_cone_report(input, e_guess, c.degree_bound, c.field_override(), c.budget);
  const json& gens = result["initial_form_generators"];
  const bool has_points = result.contains("tangent_points");
  if (emit(c, envelope("tangent-cone", c, input, result), out)) {
    out << "hilbert function of G(A):";
    for (const auto& h : result["hilbert"]) out << " " << h.get<std::size_t>();
    out << "\nmultiplicity e = " << result["multiplicity"] << ", emdim = " << result["emdim"] << " (degree bound "
        << result["degree_bound"] << ")\n";
    for (const auto& [k, forms] : gens.items()) out << "initial forms of degree " << k << ": " << forms.dump() << "\n";
    if (has_points) {
      out << "tangent points:";
      for (const auto& p : result["tangent_points"]["points"]) {
        out << " (";
        for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i].get<std::string>();
        out << ")";
      }
      out << "\ngeneric position: " << (result["tangent_points_genericity"]["generic"].get<bool>() ? "yes" : "no")
          << "\n";
    }
  }
  return kExitOk;
}

// -------------------------------------------------------------- reproduce-examples

std::string fixture_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("GENPOS_FIXTURES"); env != nullptr && *env != '\0') return env;
  return GENPOS_FIXTURE_DIR;
}

std::string clip(const std::string& s, std::size_t width) {
  return s.size() <= width ? s : s.substr(0, width - 3) + "...";
}

int cmd_reproduce(const RunConfig& c, std::vector<std::string> only, const std::string& fixtures_flag, bool update,
                  std::ostream& out, std::ostream& err) {
  ExampleSettings settings{fixture_dir(fixtures_flag), c.seed, c.subset_budget};
  if (!std::filesystem::is_directory(settings.fixture_dir)) {
    throw ParseError("fixture directory not found: " + settings.fixture_dir);
  }
  if (only.empty()) only = example_ids();
  for (const auto& id : only) {
    if (std::find(example_ids().begin(), example_ids().end(), id) == example_ids().end()) {
      throw ParseError("unknown example \"" + id + "\"");
    }
  }

  std::vector<ExampleOutcome> outcomes(only.size());
  if (c.jobs <= 1) {
    for (std::size_t i = 0; i < only.size(); ++i) outcomes[i] = run_example(only[i], settings);
  } else {
    std::vector<std::future<ExampleOutcome>> futures;
    for (const auto& id : only) futures.push_back(std::async(std::launch::async, run_example, id, settings));
    for (std::size_t i = 0; i < futures.size(); ++i) outcomes[i] = futures[i].get();
  }

  bool all_pass = true;
  json summary = json::array();
  out << std::left << std::setw(21) << "example" << std::setw(9) << "verdict" << std::setw(64) << "claim"
      << "computed\n";
  for (const auto& o : outcomes) {
    const json doc{{"id", o.id}, {"seed", settings.seed}, {"claim_holds", o.claim_holds}, {"record", o.record}};
    const std::string golden_path = settings.fixture_dir + "/golden/" + o.id + ".json";
    std::string golden_status;
    if (update) {
      std::ofstream f(golden_path);
      if (!f) throw ParseError("cannot write " + golden_path);
      f << canonical_json(doc);
      golden_status = "written";
    } else if (!std::filesystem::exists(golden_path)) {
      throw ParseError("missing golden file " + golden_path);
    } else {
      const json golden = read_json_file(golden_path);
      if (golden.value("seed", settings.seed) != settings.seed) {
        golden_status = "skipped (seed)";
      } else {
        golden_status = golden == doc ? "ok" : "DIVERGED";
      }
    }
    const bool pass = o.claim_holds && golden_status != "DIVERGED";
    all_pass = all_pass && pass;
    if (golden_status == "DIVERGED") err << "golden divergence in " << o.id << " (" << golden_path << ")\n";
    out << std::left << std::setw(21) << o.id << std::setw(9) << (pass ? "PASS" : "FAIL") << std::setw(64)
        << clip(o.claim, 62) << o.computed << (golden_status == "ok" ? "" : " [golden " + golden_status + "]") << "\n";
    summary.push_back({{"id", o.id}, {"claim", o.claim}, {"computed", o.computed}, {"claim_holds", o.claim_holds},
                       {"golden", golden_status}, {"pass", pass}});
  }
  json result{{"examples", summary}, {"all_pass", all_pass}};
  emit(c, envelope("reproduce-examples", c, json{{"only", only}}, result), out);
  return all_pass ? kExitOk : kExitNegative;
}

// -------------------------------------------------------------- random-points

int cmd_random_points(const RunConfig& c, std::size_t e, unsigned r, std::ostream& out) {
  const Field f = c.field.empty() ? Field::prime(kBigPrime) : parse_field_text(c.field);
  std::mt19937_64 rng(c.seed);
  const json doc = point_set_to_json(random_point_set(e, r, f, rng));
  if (c.json_out.empty() || c.json_out == "-") {
    out << canonical_json(doc);
  } else {
    std::ofstream file(c.json_out);
    if (!file) throw ParseError("cannot write " + c.json_out);
    file << canonical_json(doc);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generic position, tangent cones and conductors"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  RunConfig config;
  try {
    config = defaults_from_env();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  std::optional<std::size_t> t;
  std::size_t e_guess = 1, rand_e = 0;
  unsigned rand_r = 0;
  std::vector<std::string> only;
  std::string fixtures;
  bool update_golden = false;

  auto* points = app.add_subcommand("points-check", "Certify generic (t-)position of a point set");
  points->add_option("input", config.input, "Point set JSON")->required();
  points->add_option("--t", t, "Check every t-subset")->check(CLI::PositiveNumber);
  add_common(points, config);

  auto* conductor = app.add_subcommand("conductor", "Compare a conductor prediction with its oracle");
  conductor->add_option("input", config.input, "Model JSON")->required();
  conductor->add_option("--box", config.box, "Box bound for monomial algebras")->check(CLI::PositiveNumber);
  conductor->add_option("--degree-bound", config.degree_bound, "Unused for conductors; recorded");
  add_common(conductor, config);

  auto* cone = app.add_subcommand("tangent-cone", "Tangent cone of a curve or ideal at the origin");
  cone->add_option("input", config.input, "Curve or ideal JSON")->required();
  cone->add_option("--degree-bound", config.degree_bound, "Truncation degree D")->check(CLI::PositiveNumber);
  cone->add_option("--e-guess", e_guess, "Multiplicity guess used to size D")->check(CLI::PositiveNumber);
  add_common(cone, config);

  auto* repro = app.add_subcommand("reproduce-examples", "Run the worked examples against golden files");
  repro->add_option("--only", only, "Run only these example ids");
  repro->add_option("--fixtures", fixtures, "Fixture directory");
  repro->add_flag("--update-golden", update_golden, "Rewrite the golden files");
  add_common(repro, config);

  auto* rand = app.add_subcommand("random-points", "Emit a seeded random point set");
  rand->add_option("--e", rand_e, "Number of points")->required()->check(CLI::PositiveNumber);
  rand->add_option("--r", rand_r, "Projective dimension")->required()->check(CLI::PositiveNumber);
  add_common(rand, config);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*points) return cmd_points_check(config, t, out);
    if (*conductor) return cmd_conductor(config, out);
    if (*cone) return cmd_tangent_cone(config, e_guess, out);
    if (*repro) return cmd_reproduce(config, only, fixtures, update_golden, out, err);
    if (*rand) return cmd_random_points(config, rand_e, rand_r, out);
  } catch (const ResourceError& e) {
    err << "error: budget \"" << e.budget() << "\" exhausted: " << e.what() << "\n";
    return kExitError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace genpos
