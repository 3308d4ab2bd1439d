#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ainf/ainf_checks.hpp"
#include "ainf/cli.hpp"
#include "fixtures.hpp"

using namespace ainf;

namespace {

std::string fixture(const std::string& name) { return std::string(AINF_FIXTURE_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::path(testing::TempDir()) / name;
  std::ofstream(path, std::ios::binary) << content;
  return path.string();
}

struct Run {
  int code;
  std::string out, err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Json minimal_algebra() {
  return Json::parse(R"({
    "version": "ainfctl/1",
    "algebras": [{
      "name": "k", "space": [{"name": "e", "degree": 0}, {"name": "x", "degree": 1}],
      "monoid": [["1", 0]], "cutoff": null, "unit": "e",
      "ops": [{"k": 2, "beta": ["0", 0], "inputs": ["e", "e"], "output": "e", "coeff": "1"},
              {"k": 2, "beta": ["0", 0], "inputs": ["e", "x"], "output": "x", "coeff": "1"},
              {"k": 2, "beta": ["0", 0], "inputs": ["x", "e"], "output": "x", "coeff": "-1"}]
    }]})");
}

}  // namespace

TEST(Cli, EveryCommandPassesOnTheBundledFixtures) {
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases{
      {"check-ainf", {"derham_t1.spec", "gapped_pair.spec"}},
      {"check-unit", {"gapped_pair.spec"}},
      {"check-subalgebra", {"derham_pair.spec"}},
      {"check-commuting", {"derham_pair.spec"}},
      {"check-commuting", {"gapped_pair.spec"}},
      {"mc-defect", {"gapped_pair.spec"}},
      {"box-product", {"gapped_pair.spec"}},
      {"cohomology", {"derham_t2.spec"}},
      {"hf", {"gapped_pair.spec"}},
      {"barcode", {"gapped_pair.spec"}},
      {"check-hf-kunneth", {"derham_pair.spec"}},
      {"check-hf-kunneth", {"gapped_pair.spec"}},
      {"check-isotopy", {"isotopy.spec"}},
      {"extend", {"isotopy.spec"}},
      {"check-commuting-isotopy", {"commuting_isotopy.spec"}},
  };
  std::set<std::string> covered{"torus-suite"};
  for (const auto& [cmd, files] : cases) {
    std::vector<std::string> paths;
    for (const auto& f : files) paths.push_back(fixture(f));
    const auto r = run_command(cmd, paths, {});
    EXPECT_EQ(r.exit_code, 0) << cmd << "\n" << r.text;
    EXPECT_EQ(r.report["status"], "PASS");
    covered.insert(cmd);
  }
  EXPECT_EQ(covered, std::set<std::string>(cli_commands().begin(), cli_commands().end()));
}

TEST(Cli, VersionAndUsage) {
  const auto v = cli({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("ainfctl/1"), std::string::npos);
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"frobnicate", fixture("derham_t1.spec")}).code, 2);
  EXPECT_EQ(cli({"check-ainf", "--bogus"}).code, 2);
}

TEST(Cli, TorusSuiteReportsEightGroups) {
  CliFlags flags;
  flags.seed = 7;
  flags.trials = 200;
  const auto r = run_command("torus-suite", {}, flags);
  ASSERT_EQ(r.exit_code, 0) << r.text;
  const auto& report = r.report["reports"][0];
  EXPECT_EQ(report["instances"], 1600);
  EXPECT_EQ(report["data"]["groups"].size(), 8u);
}

TEST(Cli, FlipMutationIsLocatedAndReplays) {
  CliFlags flags;
  flags.mutations = {"flip:derham_t2#77"};
  const auto r = run_command("check-ainf", {fixture("derham_t2.spec")}, flags);
  ASSERT_EQ(r.exit_code, 1) << r.text;
  EXPECT_NE(r.text.find("FAIL"), std::string::npos);
  const auto& v = r.report["reports"][0]["violations"][0];
  ASSERT_TRUE(v["location"].contains("tuple"));

  auto raw = read_spec_json(fixture("derham_t2.spec"));
  flip_op(raw, "derham_t2#77");
  const auto doc = parse_spec(raw);
  const auto& alg = doc.algebra("derham_t2");
  std::vector<int> tuple;
  for (const auto& n : v["location"]["tuple"]) tuple.push_back(alg.basis().index_of(n.get<std::string>()));
  const MonoidElement beta{parse_scalar(v["location"]["beta"][0].get<std::string>()), v["location"]["beta"][1].get<int>()};
  EXPECT_FALSE(ainf_defect(alg, beta, tuple).empty());
}

TEST(Cli, MutationsOnOtherCommands) {
  CliFlags flags;
  flags.mutations = {"drop:n+1-factor"};
  EXPECT_EQ(run_command("check-isotopy", {fixture("isotopy.spec")}, flags).exit_code, 1);
  flags.mutations = {"drop:n2-twist"};
  EXPECT_EQ(run_command("check-commuting-isotopy", {fixture("commuting_isotopy.spec")}, flags).exit_code, 1);
  flags.mutations = {"drop:unit-twist"};
  EXPECT_EQ(run_command("check-unit", {fixture("gapped_pair.spec")}, flags).exit_code, 1);
  // A mutation that does not apply is an input error.
  flags.mutations = {"drop:n2-twist"};
  EXPECT_EQ(run_command("check-ainf", {fixture("gapped_pair.spec")}, flags).exit_code, 2);
  flags.mutations = {"flip:no-such-op"};
  EXPECT_EQ(run_command("check-ainf", {fixture("gapped_pair.spec")}, flags).exit_code, 2);
}

TEST(Cli, CommutingFlipFindsTheClause) {
  // Flip every constant of C in turn; at least one yields exit 1 with a located clause.
  const auto doc = load_fixture("gapped_pair.spec");
  int failures = 0;
  for (const auto& c : doc.algebra("C").constants()) {
    CliFlags flags;
    flags.mutations = {"flip:" + c.id};
    const auto r = run_command("check-commuting", {fixture("gapped_pair.spec")}, flags);
    ASSERT_NE(r.exit_code, 2) << r.text;
    if (r.exit_code == 1) {
      ++failures;
      EXPECT_FALSE(r.report["reports"][0]["violations"][0]["clause"].get<std::string>().empty());
    }
  }
  EXPECT_GT(failures, 0);
}

TEST(Cli, IrrelevantFlagsAreRejected) {
  CliFlags flags;
  flags.trials = 3;
  EXPECT_EQ(run_command("check-ainf", {fixture("derham_t1.spec")}, flags).exit_code, 2);
  CliFlags seed;
  seed.seed = 1;
  EXPECT_EQ(run_command("hf", {fixture("gapped_pair.spec")}, seed).exit_code, 2);
}

TEST(Cli, CutoffTruncates) {
  CliFlags flags;
  flags.cutoff = Scalar(1);
  const auto r = run_command("check-ainf", {fixture("gapped_pair.spec")}, flags);
  EXPECT_EQ(r.exit_code, 0) << r.text;
  EXPECT_EQ(cli({"check-ainf", fixture("gapped_pair.spec"), "--cutoff", "one"}).code, 2);
}

TEST(SpecIo, BundledCircleLoadsWithTwoElements) {
  const auto doc = load_fixture("derham_t1.spec");
  ASSERT_EQ(doc.algebras.size(), 1u);
  EXPECT_EQ(doc.algebras[0].value.dim(), 2);
}

TEST(SpecIo, RoundTripsThroughJson) {
  const auto doc = load_fixture("gapped_pair.spec");
  for (const auto& [name, alg] : doc.algebras) {
    Json d{{"version", kSpecVersion}, {"algebras", Json::array({algebra_to_json(alg)})}};
    const auto again = parse_spec(d);
    EXPECT_EQ(algebra_to_json(again.algebras[0].value), algebra_to_json(alg)) << name;
  }
  const auto iso = load_fixture("isotopy.spec");
  for (const auto& [name, p] : iso.isotopies)
    EXPECT_EQ(isotopy_to_json(iso.isotopy(name))["m"], isotopy_to_json(p)["m"]);
}

TEST(SpecIo, WrongOutputDegreeNamesTheConstant) {
  auto d = minimal_algebra();
  d["algebras"][0]["ops"][1]["output"] = "e";
  try {
    parse_spec(d);
    FAIL() << "accepted a degree violation";
  } catch (const SpecError& e) {
    EXPECT_EQ(e.field(), "/algebras/0/ops/1");
    EXPECT_NE(std::string(e.what()).find("degree"), std::string::npos);
  }
  const auto path = temp_file("bad_degree.spec", d.dump(1));
  const auto r = cli({"check-ainf", path});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("/algebras/0/ops/1"), std::string::npos) << r.err;
}

TEST(SpecIo, NonDiscreteMonoidIsRejected) {
  auto d = minimal_algebra();
  d["algebras"][0]["monoid"] = Json::parse(R"([["0", 2]])");
  EXPECT_THROW(parse_spec(d), SpecError);
  d["algebras"][0]["monoid"] = Json::parse(R"([["-1", 0]])");
  EXPECT_THROW(parse_spec(d), SpecError);
}

TEST(SpecIo, LocatedErrors) {
  const auto path = temp_file("syntax.spec", "{\n  \"version\": \"ainfctl/1\",\n  \"algebras\": [,]\n}\n");
  try {
    read_spec_json(path);
    FAIL();
  } catch (const SpecError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  auto d = minimal_algebra();
  d["version"] = "ainfctl/0";
  EXPECT_THROW(parse_spec(d), SpecError);
  d = minimal_algebra();
  d["bananas"] = Json::array();
  EXPECT_THROW(parse_spec(d), SpecError);
  d = minimal_algebra();
  d["algebras"][0]["ops"][0]["inputs"][0] = "w";
  EXPECT_THROW(parse_spec(d), SpecError);
  d = minimal_algebra();
  d["algebras"][0]["ops"][0]["coeff"] = "0.5";
  EXPECT_THROW(parse_spec(d), SpecError);
  d = minimal_algebra();
  d["cochains"] = Json::parse(R"([{"name": "b", "algebra": "nope", "terms": []}])");
  EXPECT_THROW(parse_spec(d), SpecError);
  EXPECT_EQ(cli({"check-ainf", "/nonexistent/file.spec"}).code, 2);
}

TEST(Cli, ReportFileAndDeterminism) {
  const auto path = (std::filesystem::path(testing::TempDir()) / "report.json").string();
  std::string first;
  for (int run = 0; run < 3; ++run) {
    const auto r = cli({"check-commuting", fixture("gapped_pair.spec"), "--report", path});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream in(path, std::ios::binary);
    const std::string content((std::istreambuf_iterator<char>(in)), {});
    if (run == 0) first = content;
    EXPECT_EQ(content, first);
  }
  const auto j = Json::parse(first);
  EXPECT_EQ(j["tool"], "ainfctl/1");
  EXPECT_EQ(j["command"], "check-commuting");
}

#ifdef AINFCTL_PATH
TEST(Cli, BinaryExitCodes) {
  auto sh = [](const std::string& args) {
    const int status = std::system((std::string(AINFCTL_PATH) + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(status);
  };
  EXPECT_EQ(sh("check-ainf " + fixture("derham_t1.spec")), 0);
  EXPECT_EQ(sh("check-ainf " + fixture("derham_t1.spec") + " --mutate flip:derham_t1#0"), 1);
  EXPECT_EQ(sh("check-ainf /nonexistent.spec"), 2);
}
#endif
