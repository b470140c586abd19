#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "frobsys/cli/properties.hpp"
#include "frobsys/cli/scenario.hpp"
#include "frobsys/errors.hpp"

namespace fs = std::filesystem;
using namespace frobsys;
using namespace frobsys::cli;

namespace {

const fs::path kGolden = FROBSYS_GOLDEN_DIR;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ScenarioReport run(const std::string& text) { return run_scenario_text(text, "inline.json"); }

}  // namespace

TEST(Golden, ReportsMatchFrozenJson) {
  std::size_t checked = 0;
  for (const auto& entry : fs::directory_iterator(kGolden)) {
    if (entry.path().extension() != ".json") continue;
    const fs::path expected = kGolden / "expected" / entry.path().filename();
    ASSERT_TRUE(fs::exists(expected)) << expected;
    ScenarioReport r = run_scenario_file(entry.path());
    EXPECT_EQ(r.json, Json::parse(slurp(expected))) << entry.path();
    ++checked;
  }
  EXPECT_GE(checked, 4u);
}

TEST(Golden, SigmaExampleListsX) {
  ScenarioReport r = run_scenario_file(kGolden / "sigma_example.json");
  EXPECT_TRUE(r.success);
  EXPECT_EQ(r.json["jobs"][0]["result"]["ideal"], Json::array({"x"}));
}

TEST(Golden, ThreePointInstanceGivesCubic) {
  ScenarioReport r = run_scenario_file(kGolden / "three_points.json");
  EXPECT_TRUE(r.success);
  const Json& res = r.json["jobs"][0]["result"];
  EXPECT_EQ(res["delta"], 3);
  EXPECT_EQ(res["form"], "x*y*z");
  EXPECT_EQ(r.json["jobs"][0]["verdict"], "PASS");
}

TEST(Run, EmptyJobListSucceeds) {
  ScenarioReport r = run(R"({"p": 2, "vars": ["x"], "jobs": []})");
  EXPECT_TRUE(r.success);
  EXPECT_TRUE(r.json["jobs"].empty());
  EXPECT_EQ(r.json["summary"]["jobs"], 0);
}

TEST(Run, DeterministicAcrossRunsAndParallelism) {
  const fs::path file = default_scenario_dir() / "paper-repro" / "c07_cubics_f5.json";
  const std::string a = run_scenario_file(file).json.dump();
  const std::string b = run_scenario_file(file).json.dump();
  EXPECT_EQ(a, b);

  Json doc = Json::parse(slurp(file));
  doc["parallel"] = true;
  const std::string par = run_scenario_text(doc.dump(), "c07_cubics_f5.json").json.dump();
  doc["parallel"] = false;
  const std::string ser = run_scenario_text(doc.dump(), "c07_cubics_f5.json").json.dump();
  EXPECT_EQ(par, ser);
  EXPECT_EQ(par, a);
}

TEST(Run, ExitContractFailAndError) {
  ScenarioReport fail = run(R"({"p": 5, "vars": ["x"],
    "jobs": [{"op": "sigma", "pair": {"f": "x", "a": 5}, "expect": {"ideal": ["1"]}}]})");
  EXPECT_FALSE(fail.success);
  EXPECT_EQ(fail.json["jobs"][0]["verdict"], "FAIL");
  EXPECT_EQ(fail.json["jobs"][0]["mismatches"], Json::array({"ideal"}));

  ScenarioReport err = run(R"({"p": 5, "vars": ["x"],
    "jobs": [{"op": "sigma", "pair": {"f": "x", "a": 5, "e": 0}}]})");
  EXPECT_FALSE(err.success);
  EXPECT_EQ(err.json["jobs"][0]["status"], "error");
  EXPECT_EQ(err.json["jobs"][0]["error"]["kind"], "domain");

  ScenarioReport expected_err = run(R"({"p": 5, "vars": ["x"],
    "jobs": [{"op": "sigma", "pair": {"f": "x", "a": 5, "e": 0}, "expect": {"error": "domain"}}]})");
  EXPECT_TRUE(expected_err.success);
  EXPECT_EQ(expected_err.json["jobs"][0]["verdict"], "PASS");
}

TEST(Run, TheoremJobsCarryImplicitVerdict) {
  ScenarioReport r = run(R"({"p": 5, "vars": ["x", "y", "z"],
    "jobs": [{"op": "bpf", "forms": ["x", "y"], "degree": 1}]})");
  EXPECT_FALSE(r.success);  // (x, y) has the base point [0:0:1]
  EXPECT_EQ(r.json["jobs"][0]["verdict"], "FAIL");
  ScenarioReport ok = run(R"({"p": 5, "vars": ["x", "y", "z"],
    "jobs": [{"op": "bpf", "forms": ["x", "y"], "degree": 1, "expect": {"holds": false}}]})");
  EXPECT_TRUE(ok.success);
}

TEST(Run, JsonSyntaxErrorHasLineAndColumn) {
  try {
    run("{\n  \"p\": 5,\n  \"vars\": [\"x\"],,\n}");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 17u);
  }
}

TEST(Run, UnknownOpIsLocated) {
  try {
    run("{\"p\": 5, \"vars\": [\"x\"],\n \"jobs\": [{\"op\": \"frobnicate\"}]}");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 19u);
    EXPECT_NE(std::string(e.what()).find("frobnicate"), std::string::npos);
  }
}

TEST(Run, PolynomialParseErrorPointsIntoTheFile) {
  ScenarioReport r = run("{\"p\": 5, \"vars\": [\"x\"],\n\"jobs\": [{\"op\": \"sigma\", \"pair\": {\"f\": \"x + q\", \"a\": 1}}]}");
  const Json& err = r.json["jobs"][0]["error"];
  EXPECT_EQ(err["kind"], "parse");
  // The literal "x + q" starts at column 41 of line 2, so q sits at column 45.
  EXPECT_NE(err["message"].get<std::string>().find("(line 2, column 45)"), std::string::npos)
      << err["message"];
}

TEST(Run, ResourceErrorNamesTheCap) {
  RunOptions opts;
  opts.caps = "q=8";
  ScenarioReport r = run_scenario_text(R"({"p": 3, "vars": ["x"],
    "jobs": [{"op": "sigma", "pair": {"f": "x", "a": 3, "e": 2}}]})", "caps.json", opts);
  const Json& err = r.json["jobs"][0]["error"];
  EXPECT_EQ(err["kind"], "resource");
  EXPECT_NE(err["message"].get<std::string>().find("max_q=8"), std::string::npos);
  EXPECT_EQ(r.json["caps"]["q"], 8);
}

TEST(Run, SeedOverrideReachesPropertyJobs) {
  const std::string text = R"({"p": 2, "vars": ["x"], "seed": 3,
    "jobs": [{"op": "property", "property": "p-inverse-linearity", "cases": 5}]})";
  EXPECT_EQ(run(text).json["jobs"][0]["result"]["seed"], 3);
  RunOptions opts;
  opts.seed = 99;
  EXPECT_EQ(run_scenario_text(text, "s.json", opts).json["jobs"][0]["result"]["seed"], 99);
}

TEST(Run, NonRationalPointIsUnsupported) {
  ScenarioReport r = run(R"({"p": 5, "vars": ["x", "y"],
    "jobs": [{"op": "mult", "f": "x*y", "point": ["a", 0]}]})");
  EXPECT_EQ(r.json["jobs"][0]["error"]["kind"], "unsupported");
}

TEST(Caps, ParseAndReject) {
  Caps c = parse_caps("degree=10,steps=3", Caps{});
  EXPECT_EQ(c.max_degree, 10u);
  EXPECT_EQ(c.max_steps, 3);
  EXPECT_THROW(parse_caps("degree=0", Caps{}), DomainError);
  EXPECT_THROW(parse_caps("speed=3", Caps{}), DomainError);
  EXPECT_THROW(parse_caps("degree", Caps{}), ParseError);
  EXPECT_THROW(parse_caps("degree=ten", Caps{}), ParseError);
}

TEST(Suite, UnknownNameIsAnError) {
  EXPECT_THROW(run_suite("nope", default_scenario_dir()), DomainError);
}

TEST(Suite, SmokeRunsQuicklyAndPasses) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport r = run_suite("smoke", default_scenario_dir());
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_TRUE(r.success) << r.text;
  EXPECT_LT(s, 10.0);
}

TEST(Properties, RegistryAndSeededRepeatability) {
  EXPECT_EQ(property_names().size(), 8u);
  for (const std::string& name : property_names()) {
    PropertyOutcome a = run_property(name, 5, 17);
    EXPECT_EQ(a.cases, 5u) << name;
    EXPECT_EQ(a.failures, 0u) << name << ": " << (a.witnesses.empty() ? "" : a.witnesses.front());
  }
  EXPECT_THROW(run_property("nope", 1, 0), DomainError);
}
