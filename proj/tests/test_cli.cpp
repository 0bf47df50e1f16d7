#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "rees/scenario.hpp"

using namespace rees;
using namespace rees::scenario;

namespace {

struct Shell {
  int code;
  std::string out;
};

Shell shell(const std::string& args) {
  const std::string cmd = std::string(REES_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string scenario_path(const char* name) { return std::string(REES_SOURCE_DIR) + "/scenarios/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Run, NormalityScenarioPasses) {
  auto r = shell("run " + scenario_path("claim33.json") + " --json");
  ASSERT_EQ(r.code, 0) << r.out;
  auto rep = json::parse(r.out);
  EXPECT_EQ(rep["jobs"][0]["claim"], "(33)");
  EXPECT_EQ(rep["jobs"][0]["status"], "pass");
}

TEST(Run, TheoremScenarioBothSidesTwo) {
  auto r = shell("run " + scenario_path("theorem461.json") + " --json");
  ASSERT_EQ(r.code, 0) << r.out;
  auto job = json::parse(r.out)["jobs"][0];
  EXPECT_EQ(job["claim"], "(4.6.1)");
  EXPECT_EQ(job["lhs"], 2);
  EXPECT_EQ(job["rhs"], 2);
}

TEST(Run, MalformedJsonExitsTwo) {
  auto r = shell("run " + temp_file("bad.json", "{\"jobs\": [") );
  EXPECT_EQ(r.code, 2);
}

TEST(Run, SchemaErrorNamesTheJob) {
  auto r = shell("run " + temp_file("schema.json", R"({"jobs":[{"type":"contact","V":["0"]},{"type":"intersect"}]})"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("job 0"), std::string::npos) << r.out;
}

TEST(Run, FailedClaimExitsOne) {
  auto r = shell("run " + temp_file("fail.json", R"({"jobs":[{"type":"intersect","f":"Y","g":"X","expect":2}]})"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("witness"), std::string::npos);
}

TEST(Run, MissingFileExitsTwo) { EXPECT_EQ(shell("run /nonexistent/scenario.json").code, 2); }

TEST(Run, ReportsAreByteIdenticalAcrossParallelism) {
  const std::string a = ::testing::TempDir() + "tour_a.json", b = ::testing::TempDir() + "tour_b.json";
  ASSERT_EQ(shell("run " + scenario_path("tour.json") + " --jobs 4 --report " + a).code, 0);
  ASSERT_EQ(shell("run " + scenario_path("tour.json") + " --jobs 1 --report " + b).code, 0);
  EXPECT_FALSE(slurp(a).empty());
  EXPECT_EQ(slurp(a), slurp(b));
}

TEST(Run, SeedFlagOverridesScenario) {
  auto r = shell("run " + scenario_path("theorem461.json") + " --seed 11 --json");
  EXPECT_EQ(json::parse(r.out)["seed"], 11);
}

TEST(Run, TimingOnlyWhenAsked) {
  auto plain = json::parse(shell("run " + scenario_path("theorem461.json") + " --json").out);
  auto timed = json::parse(shell("run " + scenario_path("theorem461.json") + " --json --timing").out);
  EXPECT_FALSE(plain["jobs"][0].contains("ms"));
  EXPECT_TRUE(timed["jobs"][0].contains("ms"));
}

TEST(Run, InconclusiveIsNotPass) {
  // colength 70 lies beyond the truncation cap
  auto r = run(json::parse(R"({"jobs":[{"type":"intersect","f":"Y","g":"X^70"}]})"));
  ASSERT_EQ(r.outcomes.size(), 1u);
  EXPECT_EQ(r.outcomes[0].status, Status::inconclusive);
  EXPECT_EQ(r.outcomes[0].record["status"], "inconclusive");
  EXPECT_EQ(r.exit_code, 1);
}

TEST(Run, ExpectedErrorCountsAsPass) {
  json sc = json::parse(R"({"jobs":[{"type":"reduction-check","family":{"m":3,"forms":["X","Y"]},
                                     "H":["X"],"p":1,"expect_error":"DividesTangentCone"}]})");
  EXPECT_EQ(run(sc).exit_code, 0);
}

TEST(Run, UnknownFieldIsSchemaError) {
  EXPECT_THROW(run(json::parse(R"({"field":"F7","jobs":[]})")), SchemaError);
}

TEST(Run, EveryFailCarriesAWitness) {
  json sc = json::parse(R"({"jobs":[
    {"type":"intersect","f":"Y","g":"Y"},
    {"type":"valuation-eval","steps":["0"],"poly":"X","expect":5},
    {"type":"contact","V":["0"],"W":["0"],"expect":9}]})");
  auto r = run(sc);
  for (const auto& o : r.outcomes)
    if (o.status == Status::fail) EXPECT_TRUE(o.record.contains("witness")) << o.record.dump();
  EXPECT_EQ(r.exit_code, 1);
}

TEST(Demo, Examples) {
  auto rows = demo_testing_curve({"0", "1", "2"}, {"Y+X"});
  EXPECT_EQ(rows[0].values, (std::vector<unsigned>{1, 2, 1}));
  rows = demo_testing_curve({"0", "1"}, {"Y"});
  EXPECT_EQ(rows[0].values, (std::vector<unsigned>{2, 1}));
  rows = demo_testing_curve({"0", "1", "inf"}, {"X"});
  EXPECT_EQ(rows[0].values, (std::vector<unsigned>{1, 1, 2}));
}

TEST(Demo, UnsampledDirectionIsDeclared) {
  auto rows = demo_testing_curve({"0", "1"}, {"Y+5*X"});
  EXPECT_EQ(rows[0].values, (std::vector<unsigned>{1, 1}));
  ASSERT_TRUE(rows[0].declared);
  EXPECT_EQ(*rows[0].declared, 2u);
  EXPECT_EQ(rows[0].tau, "5");
  EXPECT_TRUE(rows[0].exactly_one_two);
}

TEST(Demo, CommandLine) {
  auto r = shell("demo testing-curve --ts 0,1,2,inf");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Y+X"), std::string::npos);
}

TEST(EmitSuite, Deterministic) {
  EXPECT_EQ(emit_suite("contact", 7, 100), emit_suite("contact", 7, 100));
  EXPECT_NE(emit_suite("contact", 7, 100), emit_suite("contact", 8, 100));
  EXPECT_EQ(emit_suite("contact", 7, 100)["jobs"].size(), 100u);
  EXPECT_EQ(emit_suite("theorem", 7, 20)["jobs"].size(), 20u);
  auto h = emit_suite("hypersurface", 7, 5);
  ASSERT_EQ(h["jobs"].size(), 5u);
  for (const auto& j : h["jobs"]) EXPECT_LE(j["family"]["m"].get<unsigned>(), 6u);
  EXPECT_THROW(emit_suite("nope", 1, 1), SchemaError);
  EXPECT_THROW(emit_suite("contact", 1, 10001), SchemaError);
}

TEST(EmitSuite, CommandLineRoundTrip) {
  auto a = shell("emit-suite --kind contact --seed 7 --count 10");
  auto b = shell("emit-suite --kind contact --seed 7 --count 10");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto path = temp_file("suite.json", a.out);
  EXPECT_EQ(shell("run " + path).code, 0);
}
