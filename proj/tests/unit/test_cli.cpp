#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "accbt/cli/cli.hpp"
#include "accbt/cli/manifest.hpp"
#include "oracles.hpp"

using namespace accbt;
using accbt::testing::read_file;
using accbt::testing::source_path;
namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("accbt-cli-") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string table1() const { return source_path("data/table1.bt").string(); }

  void compile_tree() { ASSERT_EQ(run({"compile", table1(), "-o", path("tree")}), cli::kOk) << err_.str(); }
  void train(const std::string& action, const std::string& preset, const std::string& out,
             const std::string& steps = "3000") {
    ASSERT_EQ(run({"train", "--tree", path("tree"), "--action", action, "--preset", preset,
                   "--steps", steps, "--seed", "7", "-o", path(out)}),
              cli::kOk)
        << err_.str();
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(Cli, CompileWritesTreeAccDotAndManifest) {
  compile_tree();
  const auto acc = nlohmann::json::parse(read_file(path("tree/acc.json")));
  EXPECT_EQ(acc.at("Chase cow"),
            nlohmann::json({"Safe from fire", "Safe from hostiles", "Has sword"}));
  EXPECT_TRUE(fs::exists(path("tree/tree.json")));
  EXPECT_TRUE(fs::exists(path("tree/tree.dot")));
  EXPECT_NE(out_.str().find("Chase cow"), std::string::npos);
  EXPECT_EQ(run({"verify", path("tree")}), cli::kOk);
}

TEST_F(Cli, MissingSpecIsAUsageErrorNamingThePath) {
  const std::string missing = path("nope.bt");
  EXPECT_EQ(run({"compile", missing, "-o", path("tree")}), cli::kUsage);
  EXPECT_NE(err_.str().find(missing), std::string::npos);
}

TEST_F(Cli, NoDotSkipsTheDotFile) {
  EXPECT_EQ(run({"compile", table1(), "--no-dot", "-o", path("tree")}), cli::kOk);
  EXPECT_FALSE(fs::exists(path("tree/tree.dot")));
  EXPECT_TRUE(fs::exists(path("tree/acc.json")));
}

TEST_F(Cli, CyclicSpecExitsWithCompileCode) {
  std::ofstream(path("cycle.bt")) << "goal \"P\"\naction \"A\" { pre: [\"P\"]; post: \"P\" }\n";
  EXPECT_EQ(run({"compile", path("cycle.bt"), "-o", path("tree")}), cli::kCompile);
  std::ofstream(path("bad.bt")) << "goal P\n";
  EXPECT_EQ(run({"compile", path("bad.bt"), "-o", path("tree")}), cli::kUsage);
}

TEST_F(Cli, TrainIsDeterministicAndRecordsThePreset) {
  compile_tree();
  train("Defeat hostile", "nr_ee", "a");
  train("Defeat hostile", "nr_ee", "b");
  EXPECT_EQ(read_file(path("a/qtable.json")), read_file(path("b/qtable.json")));
  const auto q = nlohmann::json::parse(read_file(path("a/qtable.json")));
  EXPECT_EQ(q.at("reward").at("m_acc"), -1000.0);
  EXPECT_EQ(q.at("reward").at("end_episode_on_acc"), true);
  EXPECT_TRUE(fs::exists(path("a/training.csv")));
  EXPECT_EQ(run({"verify", path("a")}), cli::kOk);

  train("Defeat hostile", "neg_reward", "c", "500");
  const auto nr = nlohmann::json::parse(read_file(path("c/qtable.json")));
  EXPECT_EQ(nr.at("reward").at("m_acc"), -10.0);
  EXPECT_EQ(nr.at("reward").at("end_episode_on_acc"), false);
}

TEST_F(Cli, TrainRejectsBadPresetsAndActions) {
  compile_tree();
  EXPECT_EQ(run({"train", "--tree", path("tree"), "--action", "Chase cow", "--preset", "bogus",
                 "-o", path("x")}),
            cli::kConfig);
  EXPECT_EQ(run({"train", "--tree", path("tree"), "--action", "Eat", "-o", path("x")}),
            cli::kConfig);
  EXPECT_EQ(run({"train", "--tree", path("tree"), "--action", "Fly", "-o", path("x")}),
            cli::kConfig);
  EXPECT_EQ(run({"train", "--tree", path("tree"), "--action", "Chase cow", "--m-acc", "5",
                 "-o", path("x")}),
            cli::kConfig);
}

TEST_F(Cli, EvalRejectsZeroEpisodes) {
  compile_tree();
  EXPECT_EQ(run({"eval", "--tree", path("tree"), "--episodes", "0", "-o", path("e")}), cli::kUsage);
}

TEST_F(Cli, EvalRejectsATableForAnotherAction) {
  compile_tree();
  train("Chase cow", "standard", "chase", "500");
  EXPECT_EQ(run({"eval", "--tree", path("tree"), "--episodes", "2", "--policy",
                 "Defeat hostile=" + path("chase/qtable.json"), "-o", path("e")}),
            cli::kCompatibility);
}

TEST_F(Cli, FourPresetsRenderAsFourRowsWithMatchingFormats) {
  compile_tree();
  std::vector<std::string> reports;
  for (const std::string preset : {"standard", "neg_reward", "end_episode", "nr_ee"}) {
    train("Defeat hostile", preset, "dh-" + preset, "1000");
    train("Chase cow", preset, "cc-" + preset, "1000");
    ASSERT_EQ(run({"eval", "--tree", path("tree"), "--scenario", "2", "--episodes", "10",
                   "--seed", "99", "--policy", "Defeat hostile=" + path("dh-" + preset + "/qtable.json"),
                   "--policy", "Chase cow=" + path("cc-" + preset + "/qtable.json"), "-o",
                   path("eval-" + preset)}),
              cli::kOk)
        << err_.str();
    reports.push_back(path("eval-" + preset));
  }
  auto args = std::vector<std::string>{"report", "--format", "md"};
  args.insert(args.end(), reports.begin(), reports.end());
  ASSERT_EQ(run(args), cli::kOk) << err_.str();
  const std::string md = out_.str();
  args[2] = "csv";
  ASSERT_EQ(run(args), cli::kOk);
  const std::string csv = out_.str();

  std::istringstream m(md);
  std::istringstream c(csv);
  std::string ml;
  std::string cl;
  std::getline(m, ml);
  std::getline(m, ml);
  std::getline(c, cl);
  std::size_t rows = 0;
  while (std::getline(m, ml) && std::getline(c, cl)) {
    std::string joined;
    std::stringstream cells(ml);
    std::string cell;
    std::getline(cells, cell, '|');
    while (std::getline(cells, cell, '|')) {
      const auto b = cell.find_first_not_of(' ');
      if (b == std::string::npos) continue;
      if (!joined.empty()) joined += ',';
      joined += cell.substr(b, cell.find_last_not_of(' ') - b + 1);
    }
    EXPECT_EQ(joined, cl);
    ++rows;
  }
  EXPECT_EQ(rows, 4u);

  args[2] = "md";
  args.push_back("--compare");
  EXPECT_EQ(run(args), cli::kOk);
  args[2] = "csv";
  EXPECT_EQ(run(args), cli::kUsage);
}

TEST_F(Cli, ReportRejectsForeignJson) {
  std::ofstream(path("report.json")) << R"({"schema": "other", "schema_version": 1})";
  EXPECT_EQ(run({"report", path("report.json")}), cli::kCompatibility);
}

TEST_F(Cli, VerifyDetectsChangedInputs) {
  fs::copy_file(table1(), path("spec.bt"));
  ASSERT_EQ(run({"compile", path("spec.bt"), "-o", path("tree")}), cli::kOk);
  const auto manifest = cli::read_manifest(path("tree"));
  ASSERT_EQ(manifest.inputs.size(), 1u);
  EXPECT_EQ(manifest.inputs[0].hash, cli::format_hash(cli::hash_file(path("spec.bt"))));
  EXPECT_TRUE(cli::stale_inputs(manifest).empty());
  std::ofstream(path("spec.bt"), std::ios::app) << "# edited\n";
  EXPECT_EQ(run({"verify", path("tree")}), cli::kCompatibility);
  EXPECT_EQ(cli::stale_inputs(cli::read_manifest(path("tree"))).size(), 1u);
}

TEST(Manifest, HashAndJsonRoundTrip) {
  EXPECT_EQ(cli::fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(cli::fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(cli::format_hash(0xaf63dc4c8601ec8cULL), "fnv1a64:af63dc4c8601ec8c");
  cli::RunManifest m;
  m.command = "eval";
  m.args = {"--scenario", "2"};
  m.seeds = {{"eval", 99}};
  m.inputs.push_back({"tree", "/x/tree.json", "fnv1a64:0000000000000001"});
  m.outputs = {"report.json"};
  const auto back = cli::manifest_from_json(cli::to_json(m));
  EXPECT_EQ(cli::to_json(back), cli::to_json(m));
  EXPECT_THROW(cli::manifest_from_json(nlohmann::json{{"format", "x"}}), std::runtime_error);
}

TEST(CliUsage, UnknownSubcommandIsAUsageError) {
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(cli::run({"frobnicate"}, out, err), cli::kUsage);
  EXPECT_EQ(cli::run({"--help"}, out, err), cli::kOk);
}

}  // namespace
