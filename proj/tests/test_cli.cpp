#include "cli.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hvf;
using namespace hvf::cli;

namespace {

namespace fs = std::filesystem;

struct Outcome {
  int rc;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int rc = run(args, out, err);
  return {rc, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("hvf_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  fs::create_directories(dir);
  return dir / name;
}

// Set HVF_UPDATE_GOLDEN=1 to rewrite the golden files from the current output.
void expect_golden(const std::string& name, const std::string& actual) {
  const fs::path golden = fs::path(HVF_GOLDEN_DIR) / name;
  if (std::getenv("HVF_UPDATE_GOLDEN")) {
    std::ofstream(golden, std::ios::binary) << actual;
    return;
  }
  ASSERT_TRUE(fs::exists(golden)) << golden;
  EXPECT_EQ(slurp(golden), actual) << name;
}

}  // namespace

// ---------------------------------------------------------------------------
// Spec documents.

TEST(SpecDoc, ParsesLinesAndSemicolons) {
  const FieldSpecDoc d = parse_spec_doc("family = confgrad\n# comment\nn = 3; epsilon = 1\nmu = 1 # trailing\np=4\nq=-1\n");
  EXPECT_EQ(d.field.family, "confgrad");
  EXPECT_EQ(d.field.n, 3);
  EXPECT_EQ(d.field.epsilon, 1);
  EXPECT_EQ(d.field.params.at("mu"), "1");
  EXPECT_EQ(d.p, 4.0);
  EXPECT_EQ(d.q, -1.0);
}

TEST(SpecDoc, Errors) {
  EXPECT_THROW(parse_spec_doc("family confgrad"), std::invalid_argument);
  EXPECT_THROW(parse_spec_doc("n = three"), std::invalid_argument);
  EXPECT_THROW(parse_spec_doc("p = 1/0"), std::invalid_argument);
  FieldSpecDoc d;
  set_spec_key(d, "q", "-1/2");
  EXPECT_EQ(d.q, -0.5);
  set_spec_key(d, "omega", "3/5");
  EXPECT_EQ(d.field.params.at("omega"), "3/5");
}

TEST(Grid, ParseAndDefaults) {
  const ScanGrid def = default_grid(-1);
  const ScanGrid g = parse_grid("omega=0,3/5; p=3", def);
  EXPECT_EQ(g.omega, (std::vector<std::string>{"0", "3/5"}));
  EXPECT_EQ(g.p, (std::vector<std::string>{"3"}));
  EXPECT_EQ(g.h, def.h);
  EXPECT_TRUE(parse_grid("omega=", def).omega.empty());
  EXPECT_THROW(parse_grid("bogus=1", def), std::invalid_argument);
}

TEST(Decimal, TenSignificantDigits) {
  EXPECT_EQ(dec(1.0 / 3), "0.3333333333");
  EXPECT_EQ(dec(-2.0), "-2");
  EXPECT_EQ(dec(1234567.891234), "1234567.891");
}

// ---------------------------------------------------------------------------
// Exit codes.

TEST(ExitCodes, Verify) {
  EXPECT_EQ(run_cli({"verify", "family=confgrad", "n=3", "epsilon=1", "mu=1", "p=4", "q=-1"}).rc, kConfirmed);
  EXPECT_EQ(run_cli({"verify", "family=confgrad", "n=3", "epsilon=1", "mu=1", "p=4", "q=-0.9"}).rc, kRefuted);
  const Outcome bad = run_cli({"verify", "family=bogus", "n=3", "epsilon=1", "p=4", "q=-1"});
  EXPECT_EQ(bad.rc, kInputError);
  EXPECT_NE(bad.err.find("bogus"), std::string::npos);
  EXPECT_EQ(run_cli({"verify", "family=confgrad", "n=3", "epsilon=1", "mu=1"}).rc, kInputError);
  EXPECT_EQ(run_cli({"verify", "family=confgrad", "n=3", "epsilon=1", "mu=1", "p=4", "q=-1", "--points", "0"}).rc,
            kInputError);
}

TEST(ExitCodes, VerifyFromSpecFileAndFlags) {
  const fs::path spec = scratch("h2.spec");
  std::ofstream(spec) << "family = killing\nn = 2\nepsilon = -1\nhopf_rank = 1\nscale = 1\n";
  EXPECT_EQ(run_cli({"verify", "--spec", spec.string(), "--p", "3", "--q", "-1/2"}).rc, kConfirmed);
  EXPECT_EQ(run_cli({"verify", "--spec", spec.string(), "--p", "3", "--q", "0"}).rc, kRefuted);
  // Flags override the document.
  EXPECT_EQ(run_cli({"verify", "--spec", spec.string(), "--p", "3", "--q", "-1/2", "--n", "3"}).rc, kRefuted);
  EXPECT_EQ(run_cli({"verify", "--spec", "/nonexistent/file"}).rc, kInputError);
}

TEST(ExitCodes, Solve) {
  const Outcome k = run_cli({"solve", "--family", "killing", "--n", "4", "--r", "2", "--epsilon", "1"});
  EXPECT_EQ(k.rc, kConfirmed);
  EXPECT_NE(k.out.find("(-13 + sqrt(73))/8"), std::string::npos);
  const Outcome q = run_cli({"solve", "--family", "quadratic", "--n", "6"});
  EXPECT_EQ(q.rc, kNoSolution);
  EXPECT_NE(q.out.find("no solution"), std::string::npos);
  EXPECT_EQ(run_cli({"solve", "--family", "quadratic", "--n", "3"}).rc, kNoSolution);
  EXPECT_EQ(run_cli({"solve", "--family", "confgrad", "--n", "2", "--epsilon", "1"}).rc, kNoSolution);
  EXPECT_EQ(run_cli({"solve", "--family", "killing", "--n", "3", "--r", "1", "--epsilon", "1"}).rc, kNoSolution);
  EXPECT_EQ(run_cli({"solve", "--family", "loxodromic", "--n", "2", "--epsilon", "-1"}).rc, kConfirmed);
  EXPECT_EQ(run_cli({"solve", "--family", "loxodromic", "--n", "3", "--epsilon", "1"}).rc, kNoSolution);
  EXPECT_EQ(run_cli({"solve", "--family", "killing", "--n", "4", "--r", "3", "--epsilon", "1"}).rc, kInputError);
  EXPECT_EQ(run_cli({"solve", "--family", "nope"}).rc, kInputError);
  EXPECT_EQ(run_cli({"solve"}).rc, kInputError);
}

TEST(ExitCodes, TableAndScan) {
  EXPECT_EQ(run_cli({"table", "--which", "table7"}).rc, kConfirmed);
  EXPECT_EQ(run_cli({"table", "--which", "table8"}).rc, kInputError);
  const Outcome empty = run_cli({"scan2d", "--epsilon", "1", "--grid", "omega="});
  EXPECT_EQ(empty.rc, kConfirmed);
  EXPECT_NE(empty.out.find("hits          0"), std::string::npos);
  EXPECT_EQ(run_cli({"frobnicate"}).rc, kInputError);
  EXPECT_EQ(run_cli({}).rc, kInputError);
}

// ---------------------------------------------------------------------------
// Output content.

TEST(Output, TableMatchesSurds) {
  const std::vector<Table7Row> rows = table7_rows({5, 7, 9});
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_NEAR(rows[0].q.to_double(), -0.4226497, 1e-7);
  EXPECT_NEAR(rows[0].lambda_sq_over_4.to_double(), 0.7320508, 1e-7);
  EXPECT_NEAR(rows[1].q.to_double(), QuadraticSurd::parse("(sqrt(201) - 29)/16").to_double(), 1e-12);
  EXPECT_NEAR(rows[1].q.to_double(), -0.9264100, 1e-6);
  EXPECT_NEAR(rows[2].lambda_sq_over_4.to_double(), QuadraticSurd::parse("(sqrt(34) - 5)/3").to_double(), 1e-12);
  EXPECT_NEAR(rows[2].lambda_sq_over_4.to_double(), 0.2769839, 1e-7);
  EXPECT_THROW(table7_rows({6}), NoSolution);
}

TEST(Output, HyperbolicScanHitsExactlyTheAssociateFamily) {
  for (bool exact : {true, false}) {
    const std::vector<ScanPoint> pts = run_scan(-1, default_grid(-1), exact);
    std::vector<std::string> hits;
    for (const ScanPoint& p : pts) {
      if (p.vanishes) hits.push_back(p.omega + "|" + p.tau + "|" + p.h + "|" + p.rr);
    }
    EXPECT_EQ(hits, (std::vector<std::string>{"0|0|1|0", "3/5|0|4/5|0", "1|0|0|0"})) << exact;
  }
}

TEST(Output, SphericalDefaultScanHasNoHits) {
  for (const ScanPoint& p : run_scan(1, default_grid(1), true)) EXPECT_FALSE(p.vanishes);
}

TEST(Output, VerifyJsonSchema) {
  const fs::path json = scratch("v.json");
  ASSERT_EQ(run_cli({"verify", "family=confgrad", "n=3", "epsilon=1", "mu=1", "p=4", "q=-1", "--points", "5", "--json",
                     json.string()})
                .rc,
            kConfirmed);
  const nlohmann::json j = nlohmann::json::parse(slurp(json));
  for (const char* key : {"family", "params", "p", "q", "n", "epsilon", "seed", "count", "max_rel_residual", "verdicts",
                          "per_point"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["per_point"].size(), 5u);
  EXPECT_TRUE(j["verdicts"]["harmonic"].get<bool>());
  EXPECT_EQ(j["seed"].get<int>(), 42);
}

TEST(Output, ByteIdenticalReruns) {
  const std::vector<std::string> base{"verify", "family=dipole", "n=3", "epsilon=-1", "tau=1/2", "r=3/4",
                                      "p=3",    "q=-1/2",        "--points", "50", "--seed", "9"};
  std::string first_json, first_csv;
  for (int k = 0; k < 2; ++k) {
    const fs::path json = scratch("r" + std::to_string(k) + ".json");
    const fs::path csv = scratch("r" + std::to_string(k) + ".csv");
    std::vector<std::string> args = base;
    args.insert(args.end(), {"--json", json.string(), "--csv", csv.string(), "--threads", k ? "4" : "1"});
    EXPECT_EQ(run_cli(args).rc, kRefuted);
    if (k == 0) {
      first_json = slurp(json);
      first_csv = slurp(csv);
    } else {
      EXPECT_EQ(slurp(json), first_json);
      EXPECT_EQ(slurp(csv), first_csv);
    }
  }
  EXPECT_FALSE(first_json.empty());
}

// ---------------------------------------------------------------------------
// Goldens.

TEST(Golden, Table7) {
  const fs::path csv = scratch("t7.csv");
  const Outcome o = run_cli({"table", "--which", "table7", "--csv", csv.string()});
  EXPECT_EQ(o.rc, kConfirmed);
  expect_golden("table7.txt", o.out);
  expect_golden("table7.csv", slurp(csv));
}

TEST(Golden, TableExtendedRows) {
  const Outcome o = run_cli({"table", "--which", "table7", "--rows", "5,7,9,11,13"});
  EXPECT_EQ(o.rc, kConfirmed);
  expect_golden("table7_extended.txt", o.out);
}

TEST(Golden, SolveKilling) {
  const fs::path json = scratch("s.json");
  const Outcome o = run_cli({"solve", "--family", "killing", "--n", "4", "--r", "2", "--epsilon", "-1", "--json",
                             json.string()});
  EXPECT_EQ(o.rc, kConfirmed);
  expect_golden("solve_killing_h4_r2.txt", o.out);
  expect_golden("solve_killing_h4_r2.json", slurp(json));
}

TEST(Golden, SolveConformalGradientH3) {
  const Outcome o = run_cli({"solve", "--family", "confgrad", "--n", "3", "--epsilon", "-1", "--mu", "negative"});
  EXPECT_EQ(o.rc, kConfirmed);
  expect_golden("solve_confgrad_h3.txt", o.out);
}

TEST(Golden, SolveNonExistence) {
  const Outcome o = run_cli({"solve", "--family", "quadratic", "--n", "6"});
  EXPECT_EQ(o.rc, kNoSolution);
  expect_golden("solve_quadratic_s6.txt", o.out + o.err);
}

TEST(Golden, ScanHyperbolicExact) {
  const fs::path csv = scratch("scan.csv");
  const Outcome o = run_cli({"scan2d", "--epsilon", "-1", "--exact", "--csv", csv.string()});
  EXPECT_EQ(o.rc, kConfirmed);
  expect_golden("scan2d_h2_exact.txt", o.out);
  expect_golden("scan2d_h2_exact.csv", slurp(csv));
}

TEST(Golden, VerifyZeroField) {
  const fs::path json = scratch("z.json");
  const Outcome o = run_cli({"verify", "family=killing", "n=2", "epsilon=1", "twists=0", "p=3", "q=-1/2", "--points",
                             "3", "--json", json.string()});
  EXPECT_EQ(o.rc, kConfirmed);
  expect_golden("verify_zero_s2.json", slurp(json));
}
