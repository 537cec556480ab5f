#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "bubblecross/commands.hpp"

namespace bubblecross::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cfg(const RunConfig& cfg) {
  std::ostringstream out, err;
  const int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

RunConfig mesh_cfg(int n, int a, std::vector<int> p) {
  RunConfig cfg;
  cfg.command = Command::mesh;
  cfg.n = n;
  cfg.a = a;
  cfg.permutation = std::move(p);
  return cfg;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("bubblecross_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

TEST(Cli, GraphDot) {
  RunConfig cfg;
  cfg.command = Command::graph;
  cfg.n = 4;
  cfg.format = Format::dot;
  const auto r = run_cfg(cfg);
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("vertices=24"), std::string::npos);
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, GraphBprimeJson) {
  RunConfig cfg;
  cfg.command = Command::graph;
  cfg.n = 6;
  cfg.bprime = true;
  cfg.format = Format::json;
  const auto r = run_cfg(cfg);
  ASSERT_EQ(r.code, kExitPass);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("core_vertex_count"), 120);
}

TEST(Cli, GraphGuardAndFormat) {
  RunConfig cfg;
  cfg.command = Command::graph;
  cfg.n = 12;
  const auto r = run_cfg(cfg);
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_FALSE(r.err.empty());
  EXPECT_TRUE(r.out.empty());

  cfg.n = 4;
  cfg.format = Format::svg;
  EXPECT_EQ(run_cfg(cfg).code, kExitUsage);
}

TEST(Cli, MeshCounts) {
  const auto r = run_cfg(mesh_cfg(6, 1, {2, 4, 5, 3}));
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out, "total_crossings 30\noracle_crossings 30\n");
}

TEST(Cli, MeshSvg) {
  auto cfg = mesh_cfg(6, 2, {2, 4, 5, 3});
  cfg.format = Format::svg;
  const auto r = run_cfg(cfg);
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("data-crossings=\"21\""), std::string::npos);
}

TEST(Cli, MeshErrors) {
  EXPECT_EQ(run_cfg(mesh_cfg(6, 2, {2, 2, 5, 3})).code, kExitUsage);
  EXPECT_EQ(run_cfg(mesh_cfg(6, 7, {2, 3, 4, 5})).code, kExitUsage);
  RunConfig missing;
  missing.command = Command::mesh;
  missing.n = 6;
  EXPECT_EQ(run_cfg(missing).code, kExitUsage);
}

TEST(Cli, VerifySuites) {
  RunConfig cfg;
  cfg.command = Command::verify;
  cfg.suite = "pairs";
  auto r = run_cfg(cfg);
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("120 exhaustive + 400 random specs, all equal"), std::string::npos) << r.out;

  cfg.suite = "planarity";
  r = run_cfg(cfg);
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("B_4 planar"), std::string::npos);
  EXPECT_NE(r.out.find("B_5 non-planar"), std::string::npos);

  cfg.suite = "nope";
  EXPECT_EQ(run_cfg(cfg).code, kExitUsage);
}

TEST(Cli, Bounds) {
  RunConfig cfg;
  cfg.command = Command::bounds;
  cfg.n_max = 8;
  auto r = run_cfg(cfg);
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("7,237456,"), std::string::npos);
  EXPECT_NE(r.out.find("8,12402864,"), std::string::npos);

  cfg.n_max = 6;
  EXPECT_EQ(run_cfg(cfg).code, kExitUsage);

  cfg.n_max = 30;
  cfg.format = Format::json;
  r = run_cfg(cfg);
  ASSERT_EQ(r.code, kExitPass);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("rows").size(), 24u);
  EXPECT_TRUE(j["rows"][23]["nu_recurrence"].is_string());
}

TEST(Cli, Trace) {
  RunConfig cfg;
  cfg.command = Command::trace;
  cfg.n = 7;
  auto r = run_cfg(cfg);
  ASSERT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("7,3,3,480\r\n"), std::string::npos);

  cfg.n = 8;
  cfg.policy = PolicyKind::random;
  cfg.seed = 7;
  cfg.format = Format::json;
  r = run_cfg(cfg);
  ASSERT_EQ(r.code, kExitPass);
  const auto j = nlohmann::json::parse(r.out);
  const auto& last = j.at("generations").back();
  EXPECT_EQ(last.at("n"), 8);
  std::uint64_t total = 0;
  for (const auto& s : last.at("states")) {
    EXPECT_EQ(std::abs(s.at("l").get<int>() - s.at("r").get<int>()), 1);
    total += s.at("multiplicity").get<std::uint64_t>();
  }
  EXPECT_EQ(total, 6720u);

  cfg.n = 11;
  EXPECT_EQ(run_cfg(cfg).code, kExitUsage);
}

TEST_F(TempDir, IdenticalConfigsWriteIdenticalFiles) {
  for (auto [cmd, fmt] : {std::pair{Command::trace, Format::json}, std::pair{Command::bounds, Format::csv},
                          std::pair{Command::graph, Format::dot}}) {
    RunConfig cfg;
    cfg.command = cmd;
    cfg.format = fmt;
    cfg.n = 8;
    cfg.n_max = 12;
    cfg.policy = PolicyKind::random;
    cfg.seed = 42;
    cfg.output_path = (dir_ / "a.out").string();
    ASSERT_EQ(run_cfg(cfg).code, kExitPass);
    cfg.output_path = (dir_ / "b.out").string();
    ASSERT_EQ(run_cfg(cfg).code, kExitPass);
    const auto a = slurp(dir_ / "a.out");
    EXPECT_FALSE(a.empty());
    EXPECT_EQ(a, slurp(dir_ / "b.out"));
  }
}

TEST_F(TempDir, ResumeFromSnapshot) {
  RunConfig cfg;
  cfg.command = Command::trace;
  cfg.n = 8;
  cfg.format = Format::json;
  cfg.output_path = (dir_ / "eight.json").string();
  ASSERT_EQ(run_cfg(cfg).code, kExitPass);

  cfg.n = 9;
  cfg.resume_path = cfg.output_path;
  cfg.output_path.clear();
  const auto resumed = run_cfg(cfg);
  ASSERT_EQ(resumed.code, kExitPass);
  const auto j = nlohmann::json::parse(resumed.out);
  EXPECT_EQ(j.at("generations").front().at("n"), 8);
  EXPECT_EQ(j.at("generations").back().at("n"), 9);

  cfg.resume_path = (dir_ / "missing.json").string();
  EXPECT_EQ(run_cfg(cfg).code, kExitUsage);

  std::ofstream(dir_ / "broken.json") << R"({"n": 8, "states": [{"l": 9, "r": 0, "multiplicity": 6720}]})";
  cfg.resume_path = (dir_ / "broken.json").string();
  EXPECT_EQ(run_cfg(cfg).code, kExitFailure);
}

TEST_F(TempDir, OutputDirectoryOverride) {
  ASSERT_EQ(::setenv(kOutputDirEnv, dir_.c_str(), 1), 0);
  auto cfg = mesh_cfg(6, 2, {2, 4, 5, 3});
  cfg.format = Format::json;
  cfg.output_path = "mesh.json";
  const auto r = run_cfg(cfg);
  ::unsetenv(kOutputDirEnv);
  ASSERT_EQ(r.code, kExitPass);
  EXPECT_EQ(nlohmann::json::parse(slurp(dir_ / "mesh.json")).at("a"), 2);
}

TEST_F(TempDir, UnwritablePath) {
  RunConfig cfg;
  cfg.command = Command::bounds;
  cfg.n_max = 7;
  cfg.output_path = (dir_ / "no" / "such" / "dir.csv").string();
  EXPECT_EQ(run_cfg(cfg).code, kExitUsage);
}

}  // namespace
}  // namespace bubblecross::cli
