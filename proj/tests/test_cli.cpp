#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "genpos/cli.hpp"

using namespace genpos;
namespace fs = std::filesystem;

namespace {

const std::string kFixtures = GENPOS_TEST_FIXTURES;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "genpos");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

struct EnvGuard {
  std::string name;
  EnvGuard(std::string n, const std::string& value) : name(std::move(n)) { ::setenv(name.c_str(), value.c_str(), 1); }
  ~EnvGuard() { ::unsetenv(name.c_str()); }
};

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("points-check exit codes") {
    const Run ex6 = run({"points-check", fixture("six_branch_tangents.json")});
    CHECK(ex6.code == kExitNegative);
    CHECK(ex6.out.find("x1*x2") != std::string::npos);
    CHECK(run({"points-check", fixture("random_generic_p2_e6.json")}).code == kExitOk);
    CHECK(run({"points-check", fixture("random_generic_p2_e6.json"), "--t", "5"}).code == kExitOk);
    const Run bad = run({"points-check", fixture("malformed.json")});
    CHECK(bad.code == kExitError);
    CHECK_FALSE(bad.err.empty());
    CHECK(run({"points-check", fixture("does_not_exist.json")}).code == kExitError);
    CHECK(run({"no-such-command"}).code == kExitError);
  }

  TEST_CASE("json certificate envelope") {
    const Run r = run({"points-check", fixture("six_branch_tangents.json"), "--json-out", "-"});
    const auto start = r.out.find('{');
    REQUIRE(start != std::string::npos);
    const auto doc = nlohmann::json::parse(r.out.substr(start));
    CHECK(doc["tool"]["name"] == "genpos");
    CHECK(doc["tool"]["version"] == "0.1.0");
    CHECK(doc["command"] == "points-check");
    CHECK(doc.contains("seed"));
    CHECK(doc.contains("budgets"));
    CHECK(doc["result"]["generic"] == false);
  }

  TEST_CASE("conductor models") {
    CHECK(run({"conductor", fixture("models/generic6_p2.json")}).code == kExitOk);
    CHECK(run({"conductor", fixture("models/lines3.json")}).code == kExitOk);
    CHECK(run({"conductor", fixture("models/concurrent_lines.json")}).code == kExitOk);
    CHECK(run({"conductor", fixture("models/xy3_z3.json")}).code == kExitOk);
    CHECK(run({"conductor", fixture("models/semigroup_2_5.json")}).code == kExitHypothesesFailed);
    CHECK(run({"conductor", fixture("models/semigroup_2_3.json")}).code == kExitHypothesesFailed);
    CHECK(run({"conductor", fixture("six_branch_tangents.json")}).code == kExitHypothesesFailed);
  }

  TEST_CASE("tangent cone of the six-branch curve") {
    const Run r = run({"tangent-cone", fixture("six_branch_curve.json"), "--e-guess", "6"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("6") != std::string::npos);
  }

  TEST_CASE("budget environment variables") {
    {
      EnvGuard g("GENPOS_SUBSET_BUDGET", "3");
      const Run r = run({"points-check", fixture("random_generic_p2_e6.json"), "--t", "5"});
      CHECK(r.code == kExitError);
      CHECK(r.err.find("subset_budget") != std::string::npos);
    }
    {
      EnvGuard g("GENPOS_GB_MAX_PAIRS", "1");
      const Run r = run({"conductor", fixture("models/lines3.json")});
      CHECK(r.code == kExitError);
      CHECK(r.err.find("max_pairs") != std::string::npos);
    }
    {
      EnvGuard g("GENPOS_GB_MAX_BASIS", "not-a-number");
      CHECK(run({"conductor", fixture("models/lines3.json")}).code == kExitError);
    }
  }

  TEST_CASE("random points are reproducible") {
    const Run a = run({"random-points", "--e", "6", "--r", "2", "--seed", "7"});
    const Run b = run({"random-points", "--e", "6", "--r", "2", "--seed", "7"});
    const Run c = run({"random-points", "--e", "6", "--r", "2", "--seed", "8"});
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
    CHECK(a.out.back() == '\n');
  }

  TEST_CASE("same seed gives byte-identical certificates") {
    const Run a = run({"conductor", fixture("models/semigroup_2_5.json"), "--json-out", "-", "--seed", "3"});
    const Run b = run({"conductor", fixture("models/semigroup_2_5.json"), "--json-out", "-", "--seed", "3"});
    CHECK(a.out == b.out);
  }

  TEST_CASE("reproduce-examples against golden files") {
    CHECK(run({"reproduce-examples", "--only", "six-branch-curve", "--fixtures", kFixtures}).code == kExitOk);
    CHECK(run({"reproduce-examples", "--only", "nonsense", "--fixtures", kFixtures}).code == kExitError);

    const fs::path tmp = fs::temp_directory_path() / "genpos_cli_golden";
    fs::remove_all(tmp);
    fs::copy(kFixtures, tmp, fs::copy_options::recursive);
    const fs::path golden = tmp / "golden" / "p1-points.json";
    nlohmann::json doc;
    {
      std::ifstream in(golden);
      in >> doc;
    }
    CHECK(run({"reproduce-examples", "--only", "p1-points", "--fixtures", tmp.string()}).code == kExitOk);
    doc["record"]["tampered"] = true;
    {
      std::ofstream outf(golden);
      outf << doc.dump(2) << "\n";
    }
    const Run diverged = run({"reproduce-examples", "--only", "p1-points", "--fixtures", tmp.string()});
    CHECK(diverged.code == kExitNegative);
    CHECK(diverged.err.find("p1-points") != std::string::npos);

    fs::remove(golden);
    CHECK(run({"reproduce-examples", "--only", "p1-points", "--fixtures", tmp.string()}).code == kExitError);
    fs::remove_all(tmp);
  }
}
