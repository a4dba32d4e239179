#include <benchmark/benchmark.h>

#include <fstream>
#include <iterator>
#include <stdexcept>

#include "accbt/bt/mission.hpp"
#include "accbt/chain/compiled.hpp"
#include "accbt/grid/agent.hpp"
#include "accbt/grid/env.hpp"
#include "accbt/grid/scenario.hpp"
#include "accbt/grid/step.hpp"
#include "accbt/rl/features.hpp"
#include "accbt/rl/qtable.hpp"

using namespace accbt;

namespace {

const chain::CompiledSpec& table1() {
  static const chain::CompiledSpec compiled = [] {
    std::ifstream in(std::string(ACCBT_SOURCE_DIR) + "/data/table1.bt");
    if (!in) throw std::runtime_error("cannot read data/table1.bt");
    return chain::compile(std::string(std::istreambuf_iterator<char>(in), {}));
  }();
  return compiled;
}

void BM_Compile(benchmark::State& state) {
  std::ifstream in(std::string(ACCBT_SOURCE_DIR) + "/data/table1.bt");
  const std::string text(std::istreambuf_iterator<char>(in), {});
  for (auto _ : state) benchmark::DoNotOptimize(chain::compile(text));
}
BENCHMARK(BM_Compile);

void BM_Tick(benchmark::State& state) {
  const grid::WorldConfig world;
  const auto bindings = grid::bind_agent(table1().spec, world);
  const grid::WorldState s = grid::make_scenario(static_cast<int>(state.range(0)), 1, world);
  for (auto _ : state) benchmark::DoNotOptimize(bt::tick_fast(table1().tree, s, bindings));
}
BENCHMARK(BM_Tick)->Arg(1)->Arg(2);

void BM_TickWithPath(benchmark::State& state) {
  const grid::WorldConfig world;
  const auto bindings = grid::bind_agent(table1().spec, world);
  const grid::WorldState s = grid::make_scenario(2, 1, world);
  for (auto _ : state) benchmark::DoNotOptimize(bt::tick(table1().tree, s, bindings));
}
BENCHMARK(BM_TickWithPath);

void BM_Step(benchmark::State& state) {
  const grid::WorldConfig world;
  const grid::WorldState start = grid::make_scenario(1, 1, world);
  grid::Rng rng(3);
  grid::WorldState s = start;
  std::size_t i = 0;
  for (auto _ : state) {
    s = grid::step(s, grid::kAllActions[i++ % 4], rng, world);
    if (!s.agent.alive || s.t > 200) s = start;
  }
}
BENCHMARK(BM_Step);

void BM_Encode(benchmark::State& state) {
  const rl::FeatureCodec codec(static_cast<rl::FeatureCodec::Kind>(state.range(0)));
  const grid::WorldState s = grid::make_scenario(2, 1, grid::WorldConfig{});
  for (auto _ : state) benchmark::DoNotOptimize(codec.encode(s));
}
BENCHMARK(BM_Encode)->Arg(0)->Arg(1);

void BM_QUpdate(benchmark::State& state) {
  rl::QTable q("Chase cow", rl::FeatureCodec(rl::FeatureCodec::Kind::ChaseCow));
  std::uint32_t s = 0;
  for (auto _ : state) {
    const std::uint32_t next = (s * 2654435761U) % q.state_count();
    rl::q_update(q, s, s % q.action_count(), -0.1, next, false);
    s = next;
  }
}
BENCHMARK(BM_QUpdate);

void BM_ScriptedMission(benchmark::State& state) {
  const grid::WorldConfig world;
  const auto bindings = grid::bind_agent(table1().spec, world);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    grid::GridEnv env(grid::make_scenario(static_cast<int>(state.range(0)), seed, world), seed, world);
    ++seed;
    benchmark::DoNotOptimize(bt::step_mission(table1().tree, env, bindings, 2000));
  }
}
BENCHMARK(BM_ScriptedMission)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
