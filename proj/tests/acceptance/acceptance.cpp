// Acceptance run: prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <future>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "accbt/eval/evaluate.hpp"
#include "accbt/eval/report.hpp"
#include "accbt/grid/conditions.hpp"
#include "accbt/grid/env.hpp"
#include "accbt/rl/train.hpp"
#include "oracles.hpp"

using namespace accbt;
using namespace accbt::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

constexpr std::uint64_t kTrainSeed = 7;
constexpr std::uint64_t kEvalSeed = 99;
constexpr std::uint64_t kTrainSteps = 200000;
constexpr std::size_t kEpisodes = 500;
const char* const kLearned[] = {"Defeat hostile", "Chase cow"};

unsigned jobs() { return std::max(1U, std::min(8U, std::thread::hardware_concurrency())); }

Outcome tick_oracle() {
  const auto t0 = Clock::now();
  const auto r = run_tick_oracle(500, 2024);
  const double secs = seconds_since(t0);
  return {r.trees == 500 && r.mismatches == 0 && secs < 10.0,
          std::to_string(r.trees) + " trees, " + std::to_string(r.checks) + " valuations, " +
              std::to_string(r.mismatches) + " mismatches, " + fmt(secs) + " s"};
}

Outcome backchain_golden() {
  const auto& c = table1();
  const auto golden_tree = nlohmann::json::parse(read_file(source_path("tests/golden/table1_tree.json")));
  const bool tree_ok = nlohmann::json(chain::tree_file_json(c)) == golden_tree;
  const std::vector<std::string> chase = {"Safe from fire", "Safe from hostiles", "Has sword"};
  const std::vector<std::string> defeat = {"Safe from fire"};
  const auto* got_chase = c.acc.find("Chase cow");
  const auto* got_defeat = c.acc.find("Defeat hostile");
  const bool acc_ok = got_chase && got_defeat && *got_chase == chase && *got_defeat == defeat;
  return {tree_ok && acc_ok, std::string("tree ") + (tree_ok ? "matches" : "differs from") +
                                 " golden, ACC(Chase cow) and ACC(Defeat hostile) " +
                                 (acc_ok ? "exact" : "differ")};
}

Outcome acc_soundness() {
  const auto r = check_acc_soundness(table1());
  return {r.counterexamples == 0 && r.selections > 0,
          std::to_string(r.valuations) + " valuations, " + std::to_string(r.selections) +
              " selections, " + std::to_string(r.counterexamples) + " counterexamples" +
              (r.first_counterexample.empty() ? "" : " (" + r.first_counterexample + ")")};
}

Outcome reward_cases() {
  const grid::WorldConfig world;
  const auto model = rl::action_model(table1(), "Chase cow");
  std::size_t checks = 0;
  std::size_t wrong = 0;
  std::string first;
  for (const auto& p : chase_cow_patterns(world)) {
    const bool post = grid::holds(grid::Condition::IsCloseToCow, p.state, world);
    if (post != p.postcondition || model.acc_violated(p.state, world) != p.violated.has_value()) {
      ++wrong;
      if (first.empty()) first = p.label() + " is not the intended pattern";
    }
    for (const auto& name : rl::preset_names()) {
      const auto config = rl::preset(name);
      const double got = rl::reward(model, p.state, config, world).value;
      ++checks;
      if (got != expected_reward(p, config)) {
        ++wrong;
        if (first.empty()) first = p.label() + "/" + name + " gave " + fmt(got, 3);
      }
    }
  }
  return {wrong == 0 && checks == 32,
          "8 patterns x 4 presets = " + std::to_string(checks) + " checks, " +
              std::to_string(wrong) + " wrong" + (first.empty() ? "" : " (" + first + ")")};
}

Outcome policy_quality() {
  const auto t0 = Clock::now();
  const grid::WorldConfig world = arena_config(7);
  const grid::Pos cow{2, 4};
  rl::TrainConfig tc;
  tc.action = "Chase cow";
  tc.reward = rl::preset("standard");
  tc.total_steps = 50000;
  tc.seed = kTrainSeed;
  const auto trained = rl::train(table1(), world, tc, [&](grid::Rng& rng) {
    grid::Pos a;
    do {
      a = {static_cast<int>(rng.below(7)), static_cast<int>(rng.below(7))};
    } while (a == cow);
    return arena_state(a, cow, world);
  });
  const auto policy = rl::extract_policy(trained.table);
  std::size_t starts = 0;
  std::size_t good = 0;
  for (int y = 0; y < 7; ++y) {
    for (int x = 0; x < 7; ++x) {
      const grid::Pos start{x, y};
      if (start == cow) continue;
      const int optimal = bfs_steps_to_cow(start, cow, world);
      if (optimal <= 0) continue;
      grid::GridEnv env(arena_state(start, cow, world), 1, world);
      int steps = 0;
      while (!grid::holds(grid::Condition::IsCloseToCow, env.state(), world) && steps < 100) {
        env.apply(policy(env.state()));
        ++steps;
      }
      ++starts;
      if (steps <= 1.2 * optimal) ++good;
    }
  }
  const double pct = 100.0 * static_cast<double>(good) / static_cast<double>(starts);
  const double secs = seconds_since(t0);
  return {pct >= 95.0 && secs < 120.0,
          std::to_string(good) + "/" + std::to_string(starts) + " start cells within 1.2x BFS (" +
              fmt(pct, 1) + "%), " + fmt(secs) + " s"};
}

struct PresetRun {
  std::string preset;
  std::vector<eval::PolicySource> policies;
  std::map<std::string, std::vector<rl::EpisodeLog>> logs;
};

PresetRun train_preset(const std::string& preset, const grid::WorldConfig& world) {
  PresetRun run;
  run.preset = preset;
  for (const char* action : kLearned) {
    rl::TrainConfig tc;
    tc.action = action;
    tc.reward = rl::preset(preset);
    tc.total_steps = kTrainSteps;
    tc.seed = kTrainSeed;
    auto result = rl::train(table1(), world, tc,
                            rl::scenario_sampler(rl::training_scenarios(action), world));
    run.logs[action] = std::move(result.episodes);
    run.policies.push_back(
        {action, std::make_shared<const rl::QTable>(std::move(result.table)), preset});
  }
  return run;
}

eval::EvalReport evaluate(const PresetRun& run, int scenario, const grid::WorldConfig& world) {
  eval::EvalConfig ec;
  ec.scenario = scenario;
  ec.episodes = kEpisodes;
  ec.seed = kEvalSeed;
  ec.preset = run.preset;
  ec.policies = run.policies;
  ec.jobs = jobs();
  return eval::evaluate(table1(), world, ec).report;
}

const eval::EvalReport& by_preset(const std::vector<eval::EvalReport>& reports,
                                  const std::string& preset) {
  for (const auto& r : reports) {
    if (r.preset == preset) return r;
  }
  throw std::logic_error("missing preset " + preset);
}

Outcome scenario_two(const std::vector<eval::EvalReport>& reports, double secs) {
  const auto& standard = by_preset(reports, "standard").metrics;
  const auto& nree = by_preset(reports, "nr_ee").metrics;
  const double s_pct = standard.pct_episodes_with_violation;
  const double n_pct = nree.pct_episodes_with_violation;
  const bool ratio = s_pct > 0.0 && s_pct >= 5.0 * n_pct;
  const bool low = n_pct <= 5.0;
  const bool slower = standard.completion_steps.mean > nree.completion_steps.mean;
  return {ratio && low && slower && secs < 1800.0,
          "violations standard " + fmt(s_pct, 1) + "% vs nr_ee " + fmt(n_pct, 1) +
              "%, completion standard " + fmt(standard.completion_steps.mean) + " vs nr_ee " +
              fmt(nree.completion_steps.mean) + " steps, " + fmt(secs, 0) + " s"};
}

Outcome scenario_one(const std::vector<eval::EvalReport>& reports) {
  const double s_pct = by_preset(reports, "standard").metrics.pct_episodes_with_violation;
  bool all_below = true;
  std::string detail = "standard " + fmt(s_pct, 1) + "%";
  for (const char* p : {"neg_reward", "end_episode", "nr_ee"}) {
    const auto& m = by_preset(reports, p).metrics;
    all_below = all_below && m.pct_episodes_with_violation < s_pct;
    detail += std::string(", ") + p + " " + fmt(m.pct_episodes_with_violation, 1) + "%";
  }
  detail += "; completion means";
  for (const auto& r : reports) detail += " " + r.preset + "=" + fmt(r.metrics.completion_steps.mean);
  return {all_below, detail};
}

Outcome no_reset(const std::map<std::string, std::vector<rl::EpisodeLog>>& logs) {
  std::size_t witnesses = 0;
  std::string example;
  for (const auto& [action, episodes] : logs) {
    std::ostringstream csv;
    rl::write_training_csv(csv, episodes);
    std::istringstream in(csv.str());
    std::string line;
    std::getline(in, line);
    struct Row {
      std::uint64_t mission, episode, t_start, t_end;
    };
    std::vector<Row> rows;
    while (std::getline(in, line)) {
      std::vector<std::string> f;
      std::stringstream ss(line);
      std::string cell;
      while (std::getline(ss, cell, ',')) f.push_back(cell);
      rows.push_back({std::stoull(f.at(0)), std::stoull(f.at(1)), std::stoull(f.at(2)),
                      std::stoull(f.at(3))});
    }
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const Row& a = rows[i - 1];
      const Row& b = rows[i];
      if (a.mission == b.mission && a.t_start < a.t_end && a.t_end < b.t_start && b.t_start < b.t_end) {
        if (witnesses++ == 0) {
          example = action + " mission " + std::to_string(a.mission) + ": episode " +
                    std::to_string(a.episode) + " t=" + std::to_string(a.t_start) + ".." +
                    std::to_string(a.t_end) + ", episode " + std::to_string(b.episode) + " t=" +
                    std::to_string(b.t_start) + ".." + std::to_string(b.t_end);
        }
      }
    }
  }
  return {witnesses >= 1, std::to_string(witnesses) + " episode pairs share a mission clock with an "
                              "untrained span between them" + (example.empty() ? "" : " (" + example + ")")};
}

std::string pipeline_bytes(const grid::WorldConfig& world) {
  const auto compiled = chain::compile(read_file(source_path("data/table1.bt")));
  std::string bytes = chain::tree_file_json(compiled).dump();
  eval::EvalConfig ec;
  ec.scenario = 2;
  ec.episodes = 100;
  ec.seed = kEvalSeed;
  ec.preset = "nr_ee";
  ec.jobs = jobs();
  for (const char* action : kLearned) {
    rl::TrainConfig tc;
    tc.action = action;
    tc.reward = rl::preset("nr_ee");
    tc.total_steps = 20000;
    tc.seed = kTrainSeed;
    auto result = rl::train(compiled, world, tc,
                            rl::scenario_sampler(rl::training_scenarios(action), world));
    bytes += rl::to_json(result.table).dump();
    ec.policies.push_back({action, std::make_shared<const rl::QTable>(std::move(result.table)), "nr_ee"});
  }
  bytes += eval::to_json(eval::evaluate(compiled, world, ec).report).dump();
  return bytes;
}

Outcome determinism(const grid::WorldConfig& world) {
  const std::string a = pipeline_bytes(world);
  const std::string b = pipeline_bytes(world);
  return {a == b, "two compile/train/eval runs: " + std::to_string(a.size()) + " bytes, " +
                      (a == b ? "identical" : "different")};
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > 9) {
      std::cerr << "usage: " << argv[0] << " [criterion 1-9]\n";
      return 2;
    }
  }
  const auto wanted = [only](int n) { return only == 0 || only == n; };

  int failed = 0;
  auto report = [&failed](int n, const Outcome& o) {
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail
              << std::endl;
    if (!o.pass) ++failed;
  };

  if (wanted(1)) report(1, tick_oracle());
  if (wanted(2)) report(2, backchain_golden());
  if (wanted(3)) report(3, acc_soundness());
  if (wanted(4)) report(4, reward_cases());
  if (wanted(5)) report(5, policy_quality());

  const grid::WorldConfig world;
  if (wanted(6) || wanted(7) || wanted(8)) {
    const auto t0 = Clock::now();
    std::vector<std::future<PresetRun>> pending;
    for (const auto& preset : rl::preset_names()) {
      pending.push_back(std::async(std::launch::async, train_preset, preset, std::cref(world)));
    }
    std::vector<PresetRun> runs;
    for (auto& f : pending) runs.push_back(f.get());
    std::vector<eval::EvalReport> s2;
    std::vector<eval::EvalReport> s1;
    for (const auto& run : runs) s2.push_back(evaluate(run, 2, world));
    const double s2_secs = seconds_since(t0);
    for (const auto& run : runs) s1.push_back(evaluate(run, 1, world));

    if (wanted(6)) report(6, scenario_two(s2, s2_secs));
    if (wanted(7)) report(7, scenario_one(s1));
    if (wanted(8)) {
      for (const auto& run : runs) {
        if (run.preset == "end_episode") report(8, no_reset(run.logs));
      }
    }
    std::cout << "\nScenario 2\n";
    eval::write_markdown(std::cout, s2);
    std::cout << "\nScenario 1\n";
    eval::write_markdown(std::cout, s1);
  }
  if (wanted(9)) report(9, determinism(world));

  std::cout << "\n" << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
