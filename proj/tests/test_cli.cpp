#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "nulldecomp/cli/commands.hpp"
#include "nulldecomp/cli/fixtures.hpp"
#include "nulldecomp/cli/report.hpp"
#include "nulldecomp/cli/verify.hpp"
#include "nulldecomp/random_graphs.hpp"
#include "support/reference.hpp"

using namespace nulldecomp;
using namespace nulldecomp::cli;

namespace {

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("nulldecomp_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }

  std::filesystem::path write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name) << text;
    return path_ / name;
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

int analyze_file(const std::filesystem::path& p, std::string& out, bool verify = false, const std::string& format = "edges") {
  AnalyzeOptions opts;
  opts.path = p.string();
  opts.verify = verify;
  opts.format = format;
  std::ostringstream o, e;
  const int rc = cmd_analyze(opts, o, e);
  out = o.str() + e.str();
  return rc;
}

}  // namespace

TEST(Report, TreeFields) {
  const Graph t = ref::load_fixture("star_path_tree");
  const Report r = build_report(t, "t1", true);
  EXPECT_EQ(r.json["shape"], "Tree");
  EXPECT_EQ(r.json["nullity"], 2);
  EXPECT_EQ(r.json["supp"], nlohmann::ordered_json({"v2", "v3", "v4"}));
  EXPECT_EQ(r.json["alpha"], 4);
  EXPECT_EQ(r.json["nu"], 2);
  EXPECT_FALSE(r.mismatch);
  EXPECT_EQ(r.json["verify"]["eg_equals_supp"]["ok"], true);
  EXPECT_EQ(r.roles.at(ref::id(t, "v1")), VertexRole::Core);
  EXPECT_EQ(r.roles.at(ref::id(t, "v5")), VertexRole::NVertex);
}

TEST(Report, UnnamedGraphsUseIds) {
  const Report r = build_report(path_graph(3), "p3", false);
  EXPECT_EQ(r.json["supp"], nlohmann::ordered_json({0, 2}));
  EXPECT_FALSE(r.json.contains("verify"));
  EXPECT_FALSE(r.json.contains("names"));
}

TEST(Report, UnicyclicFields) {
  const Report r = build_report(ref::load_fixture("pentagon_nu"), "fig", true);
  EXPECT_EQ(r.json["type"], "II");
  EXPECT_EQ(r.json["nu"], 8);
  EXPECT_EQ(r.json["witness"], nullptr);
  EXPECT_EQ(r.json["cycle"].size(), 5u);
  EXPECT_EQ(r.json["pendant_trees"].size(), 5u);
  EXPECT_EQ(r.json["parts"].size(), 4u);
  EXPECT_FALSE(r.mismatch);
  EXPECT_EQ(r.json["verify"]["mismatch"], false);

  const Report c = build_report(cycle_graph(8), "c8", false);
  EXPECT_EQ(c.json["pure_cycle"], true);
  EXPECT_EQ(c.json["singular"], true);
  EXPECT_EQ(c.json["singularity_reason"], "cycle length divisible by 4");
}

TEST(Report, ForestsAndOtherShapes) {
  const Graph forest(5, {Edge(0, 1), Edge(2, 3)});
  const Report r = build_report(forest, "f", true);
  EXPECT_EQ(r.json["shape"], "Forest");
  EXPECT_EQ(r.json["alpha"], 3);
  EXPECT_FALSE(r.mismatch);
  EXPECT_THROW(build_report(Graph(4, {Edge(0, 1), Edge(1, 2), Edge(2, 0), Edge(0, 3), Edge(3, 1)}), "x", false), Error);
}

TEST(Report, Deterministic) {
  const Graph g = ref::load_fixture("triangle_alpha");
  EXPECT_EQ(build_report(g, "a", true).json.dump(), build_report(g, "a", true).json.dump());
}

TEST(Analyze, ExitCodes) {
  TempDir dir;
  std::string out;
  EXPECT_EQ(analyze_file(std::filesystem::path(NULLDECOMP_FIXTURE_DIR) / "pentagon_nu.edges", out, true), kOk);
  EXPECT_NE(out.find("\"nu\": 8"), std::string::npos);

  EXPECT_EQ(analyze_file(dir.write("bad.edges", "0 1\n1 1\n"), out), kParseFailure);
  EXPECT_NE(out.find("line 2"), std::string::npos);
  EXPECT_EQ(analyze_file(dir.write("k4.edges", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"), out), kUnsupportedShape);
  EXPECT_EQ(analyze_file(dir.write("empty.edges", "# nothing\n"), out), kUnsupportedShape);
  EXPECT_EQ(analyze_file(dir.path() / "missing.edges", out), kParseFailure);
  EXPECT_EQ(analyze_file(dir.write("k3.g6", "Bw\n"), out, false, "g6"), kOk);
  EXPECT_EQ(analyze_file(dir.write("bad.g6", "B\n"), out, false, "g6"), kParseFailure);
}

TEST(Analyze, WritesDot) {
  TempDir dir;
  AnalyzeOptions opts;
  opts.path = (std::filesystem::path(NULLDECOMP_FIXTURE_DIR) / "decomposition_tree.edges").string();
  opts.dot = (dir.path() / "out.dot").string();
  std::ostringstream o, e;
  ASSERT_EQ(cmd_analyze(opts, o, e), kOk);
  std::ifstream in(opts.dot);
  std::stringstream dot;
  dot << in.rdbuf();
  EXPECT_NE(dot.str().find("label=\"v1\", shape=doublecircle"), std::string::npos);
  EXPECT_NE(dot.str().find("label=\"v2\", shape=box"), std::string::npos);
  EXPECT_NE(dot.str().find("label=\"v13\", shape=star"), std::string::npos);
}

TEST(Verify, SmallSweepsPass) {
  for (Kind k : {Kind::Tree, Kind::Unicyclic, Kind::Cycle}) {
    VerifyOptions opts;
    opts.kind = k;
    opts.count = 60;
    opts.max_n = 12;
    const VerifySummary s = run_verify(opts);
    EXPECT_TRUE(s.ok());
    for (const auto& [name, t] : s.tallies) EXPECT_EQ(t.first, t.second) << name;
  }
}

TEST(Verify, ThreadCountDoesNotChangeResults) {
  VerifyOptions opts;
  opts.kind = Kind::Unicyclic;
  opts.count = 80;
  opts.seed = 5;
  const VerifySummary one = run_verify(opts);
  opts.threads = 4;
  const VerifySummary four = run_verify(opts);
  EXPECT_EQ(one.tallies, four.tallies);
  EXPECT_EQ(one.coverage, four.coverage);
  std::ostringstream a, b;
  print_summary(a, one);
  print_summary(b, four);
  EXPECT_EQ(a.str(), b.str());
}

TEST(Verify, CycleKindStepsThroughOrders) {
  VerifyOptions opts;
  opts.kind = Kind::Cycle;
  opts.min_n = 3;
  opts.max_n = 24;
  for (std::size_t i = 0; i < 22; ++i) EXPECT_EQ(make_instance(opts, i).order(), 3 + i);
  opts.count = 22;
  const VerifySummary s = run_verify(opts);
  EXPECT_EQ(s.coverage.at("singular"), 6u);
}

TEST(Verify, UnicyclicAlternatesTypes) {
  VerifyOptions opts;
  opts.kind = Kind::Unicyclic;
  opts.count = 40;
  const VerifySummary s = run_verify(opts);
  EXPECT_EQ(s.coverage.at("type I"), 20u);
  EXPECT_EQ(s.coverage.at("type II"), 20u);
}

TEST(Verify, CounterexampleIsReported) {
  // A checker failure surfaces as a counterexample with the graph attached.
  VerifyOptions opts;
  opts.kind = Kind::Tree;
  opts.count = 3;
  opts.max_n = 40;  // beyond the default oracle limit, so the oracles refuse
  opts.min_n = 40;
  const VerifySummary s = run_verify(opts);
  ASSERT_FALSE(s.ok());
  EXPECT_EQ(s.failures.front().invariant, "exception");
  EXPECT_NE(s.failures.front().graph.find("n=40"), std::string::npos);
  EXPECT_THROW(parse_kind("bicyclic"), std::invalid_argument);
}

TEST(Fixtures, RepositoryFixturesPass) {
  const FixtureResult r = run_fixtures(NULLDECOMP_FIXTURE_DIR);
  std::ostringstream out;
  print_fixtures(out, r);
  EXPECT_TRUE(r.ok()) << out.str();
  EXPECT_GE(r.fixtures, 10u);
}

TEST(Fixtures, DiffsAreTabulated) {
  TempDir dir;
  dir.write("p3.edges", "names=a,b,c\na b\nb c\n");
  dir.write("p3.expect.json", R"({"supp": ["a", "b"], "alpha": 2, "nu": 5, "parts": [{"vertices": ["a"], "supp": []}]})");
  const FixtureResult r = run_fixtures(dir.path());
  EXPECT_FALSE(r.ok());
  std::ostringstream out;
  print_fixtures(out, r);
  EXPECT_NE(out.str().find("FAIL  p3"), std::string::npos);
  EXPECT_NE(out.str().find("{a,b}"), std::string::npos);
  EXPECT_NE(out.str().find("{a,c}"), std::string::npos);
  std::size_t bad = 0;
  for (const FixtureRow& row : r.rows) bad += !row.ok;
  EXPECT_EQ(bad, 3u);  // supp, nu, missing part
  std::ostringstream o, e;
  EXPECT_EQ(cmd_fixtures(dir.path(), o, e), kMismatch);
  EXPECT_EQ(cmd_fixtures(dir.path() / "nope", o, e), kParseFailure);
}
