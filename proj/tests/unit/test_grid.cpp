#include <gtest/gtest.h>

#include "accbt/bt/mission.hpp"
#include "accbt/grid/agent.hpp"
#include "accbt/grid/conditions.hpp"
#include "accbt/grid/env.hpp"
#include "accbt/grid/scenario.hpp"
#include "accbt/grid/scripted.hpp"
#include "accbt/grid/step.hpp"
#include "accbt/grid/world_json.hpp"
#include "oracles.hpp"

using namespace accbt;
using namespace accbt::grid;
using accbt::testing::arena_config;
using accbt::testing::arena_state;

namespace {

// Quiet 12x12 world: no fire, hostile dead, cow static and far away.
WorldConfig quiet_config() {
  WorldConfig c;
  c.cow_move_prob = 0.0;
  c.sword_break_prob = 0.0;
  return c;
}

WorldState quiet_state(const WorldConfig& c) {
  WorldState s = arena_state({5, 5}, {0, 11}, c);
  s.agent.hungry = false;
  return s;
}

TEST(Step, MoveEastAdvancesAgentAndClock) {
  const WorldConfig c = quiet_config();
  Rng rng(1);
  const WorldState next = step(quiet_state(c), PrimitiveAction::MoveE, rng, c);
  EXPECT_EQ(next.agent.pos, (Pos{6, 5}));
  EXPECT_EQ(next.t, 1u);
  EXPECT_EQ(next.agent.hp, c.agent_max_hp);
}

TEST(Step, MovesAreClippedAtWallsAndBlockedByTheCow) {
  const WorldConfig c = quiet_config();
  Rng rng(1);
  WorldState s = quiet_state(c);
  s.agent.pos = {0, 0};
  EXPECT_EQ(step(s, PrimitiveAction::MoveN, rng, c).agent.pos, (Pos{0, 0}));
  EXPECT_EQ(step(s, PrimitiveAction::MoveW, rng, c).agent.pos, (Pos{0, 0}));
  s.cow.pos = {1, 0};
  EXPECT_EQ(step(s, PrimitiveAction::MoveE, rng, c).agent.pos, (Pos{0, 0}));
}

TEST(Step, AttackKillsAdjacentWeakHostile) {
  const WorldConfig c = quiet_config();
  Rng rng(1);
  WorldState s = quiet_state(c);
  s.inventory.sword = true;
  s.hostile = {{6, 5}, 2, true, true};
  const WorldState next = step(s, PrimitiveAction::Attack, rng, c);
  EXPECT_EQ(next.hostile.hp, 0);
  EXPECT_FALSE(next.hostile.alive);
}

TEST(Step, AttackOnAdjacentCowYieldsFood) {
  const WorldConfig c = quiet_config();
  Rng rng(1);
  WorldState s = quiet_state(c);
  s.cow.pos = {5, 6};
  const WorldState next = step(s, PrimitiveAction::Attack, rng, c);
  EXPECT_FALSE(next.cow.alive);
  EXPECT_EQ(next.inventory.food, 1);
  const WorldState fed = step(next, PrimitiveAction::Eat, rng, c);
  EXPECT_EQ(fed.inventory.food, 0);
  EXPECT_FALSE(fed.agent.hungry);
}

TEST(Step, WaitingOnFireCostsFireDamage) {
  const WorldConfig c = quiet_config();
  Rng rng(1);
  WorldState s = quiet_state(c);
  s.fire_cells = {{5, 5}};
  const WorldState next = step(s, PrimitiveAction::Wait, rng, c);
  EXPECT_EQ(next.agent.hp, c.agent_max_hp - 2);
}

TEST(Step, AgentDiesWhenHpRunsOut) {
  const WorldConfig c = quiet_config();
  Rng rng(1);
  WorldState s = quiet_state(c);
  s.fire_cells = {{5, 5}};
  s.agent.hp = 2;
  const WorldState next = step(s, PrimitiveAction::Wait, rng, c);
  EXPECT_LE(next.agent.hp, 0);
  EXPECT_FALSE(next.agent.alive);
}

TEST(Step, SameSeedGivesSameTrajectory) {
  const WorldConfig c;
  for (int id : {1, 2}) {
    GridEnv a(make_scenario(id, 5, c), 11, c);
    GridEnv b(make_scenario(id, 5, c), 11, c);
    for (int i = 0; i < 60 && a.agent_alive(); ++i) {
      const auto cmd = kAllActions[static_cast<std::size_t>(i * 7 % 9)];
      a.apply(cmd);
      b.apply(cmd);
      ASSERT_EQ(a.state(), b.state());
      ASSERT_EQ(a.digest(), b.digest());
    }
  }
}

TEST(Step, StateIsMarkovAcrossSerialisation) {
  // A snapshot restored from JSON evolves exactly like the original under
  // the same random stream.
  const WorldConfig c;
  GridEnv env(make_scenario(1, 3, c), 8, c);
  for (int i = 0; i < 5; ++i) env.apply(PrimitiveAction::MoveS);
  nlohmann::json j = env.state();
  WorldState restored = j.get<WorldState>();
  ASSERT_EQ(restored, env.state());
  Rng r1(42);
  Rng r2(42);
  WorldState a = env.state();
  WorldState b = restored;
  for (int i = 0; i < 20 && a.agent.alive; ++i) {
    a = step(a, PrimitiveAction::MoveE, r1, c);
    b = step(b, PrimitiveAction::MoveE, r2, c);
    ASSERT_EQ(a, b);
  }
}

TEST(Step, InvariantsHoldOnRandomWalks) {
  const WorldConfig c;
  Rng pick(77);
  for (int id : {1, 2}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      GridEnv env(make_scenario(id, seed, c), seed + 100, c);
      const int start_food = env.state().inventory.food;
      for (int i = 0; i < 200 && env.agent_alive(); ++i) {
        const WorldState before = env.state();
        env.apply(kAllActions[pick.below(kAllActions.size())]);
        const WorldState& s = env.state();
        ASSERT_EQ(s.t, before.t + 1);
        ASSERT_TRUE(s.in_bounds(s.agent.pos));
        ASSERT_TRUE(s.in_bounds(s.hostile.pos));
        ASSERT_TRUE(s.cow_roam.contains(s.cow.pos) || !s.cow.alive);
        ASSERT_LE(s.agent.hp, c.agent_max_hp);
        ASSERT_GE(s.hostile.hp, 0);
        ASSERT_LE(s.hostile.hp, before.hostile.hp);
        if (s.cow.alive) {
          ASSERT_NE(s.agent.pos, s.cow.pos);
        }
        ASSERT_EQ(s.fire_cells, before.fire_cells);
        // Food only comes from the one cow (no apple in these layouts).
        ASSERT_LE(s.inventory.food, start_food + 1);
      }
    }
  }
}

TEST(Env, RejectsCommandsToADeadAgent) {
  const WorldConfig c;
  WorldState s = make_scenario(1, 0, c);
  s.agent.alive = false;
  GridEnv env(s, 0, c);
  EXPECT_THROW(env.apply(PrimitiveAction::Wait), bt::EnvironmentFault);
  GridEnv live(make_scenario(1, 0, c), 0, c);
  EXPECT_THROW(live.apply(static_cast<PrimitiveAction>(42)), bt::EnvironmentFault);
}

TEST(Conditions, DeadHostileIsAlwaysSafe) {
  const WorldConfig c;
  WorldState s = quiet_state(c);
  s.hostile = {{5, 6}, 0, false, false};
  EXPECT_TRUE(condition("Safe from hostiles", s, c));
}

TEST(Conditions, HostileRadiusBoundary) {
  const WorldConfig c;
  WorldState s = quiet_state(c);
  s.hostile = {{8, 5}, 6, true, false};
  EXPECT_FALSE(condition("Safe from hostiles", s, c));
  s.hostile.pos = {9, 5};
  EXPECT_TRUE(condition("Safe from hostiles", s, c));
}

TEST(Conditions, FireCellIsUnsafe) {
  const WorldConfig c;
  WorldState s = quiet_state(c);
  EXPECT_TRUE(condition("Safe from fire", s, c));
  s.fire_cells = {{5, 5}};
  EXPECT_FALSE(condition("safe FROM fire", s, c));
}

TEST(Conditions, CowSightAndClosenessUseChebyshevRadii) {
  const WorldConfig c;
  WorldState s = quiet_state(c);
  s.cow.pos = {6, 6};
  EXPECT_TRUE(holds(Condition::IsCloseToCow, s, c));
  s.cow.pos = {7, 6};
  EXPECT_FALSE(holds(Condition::IsCloseToCow, s, c));
  EXPECT_TRUE(holds(Condition::CanSeeCow, s, c));
  s.cow.pos = {11, 11};
  EXPECT_TRUE(holds(Condition::CanSeeCow, s, c));
  s.agent.pos = {4, 4};
  EXPECT_FALSE(holds(Condition::CanSeeCow, s, c));
}

TEST(Conditions, UnknownNameThrows) {
  const WorldConfig c;
  EXPECT_THROW(condition("Has diamonds", quiet_state(c), c), UnknownCondition);
  EXPECT_FALSE(find_condition("Has diamonds").has_value());
  EXPECT_EQ(find_condition("has SWORD"), Condition::HasSword);
}

TEST(Scripted, ChaseCowStepsTowardsCowDueEast) {
  const WorldConfig c;
  WorldState s = quiet_state(c);
  s.cow.pos = {9, 5};
  EXPECT_EQ(scripted_policy("Chase cow", s, c), PrimitiveAction::MoveE);
}

TEST(Scripted, KillCowAttacksAdjacentCow) {
  const WorldConfig c;
  WorldState s = quiet_state(c);
  s.cow.pos = {5, 4};
  EXPECT_EQ(scripted_policy("Kill Cow", s, c), PrimitiveAction::Attack);
}

TEST(Scripted, EscapeFromFireTakesTheOnlySafeNeighbour) {
  const WorldConfig c;
  WorldState s = quiet_state(c);
  s.fire_cells = {{4, 5}, {5, 5}, {5, 6}, {6, 5}};
  EXPECT_EQ(scripted_policy("Escape from fire", s, c), PrimitiveAction::MoveN);
}

TEST(Scripted, DefeatHostileAttacksWhenAdjacent) {
  const WorldConfig c;
  WorldState s = quiet_state(c);
  s.hostile = {{5, 6}, 6, true, true};
  EXPECT_EQ(scripted_policy("Defeat hostile", s, c), PrimitiveAction::Attack);
  s.hostile.pos = {5, 8};
  EXPECT_EQ(scripted_policy("Defeat hostile", s, c), PrimitiveAction::MoveS);
}

TEST(Scripted, UnknownActionThrows) {
  const WorldConfig c;
  EXPECT_THROW(scripted_policy("Fly", quiet_state(c), c), UnknownAction);
  EXPECT_TRUE(has_scripted_policy("eat"));
  EXPECT_FALSE(has_scripted_policy("Fly"));
}

TEST(Scripted, GreedyStepFallsBackWhenBlocked) {
  WorldState s = quiet_state(WorldConfig{});
  s.cow.pos = {6, 5};
  EXPECT_EQ(greedy_step(s, {5, 5}, {9, 6}), PrimitiveAction::MoveS);
  EXPECT_EQ(greedy_step(s, {5, 5}, {5, 5}), PrimitiveAction::Wait);
}

TEST(Scenario, OneStartsNearTheHostileAndFed) {
  const WorldConfig c;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const WorldState s = make_scenario(1, seed, c);
    EXPECT_FALSE(condition("Safe from hostiles", s, c));
    EXPECT_TRUE(condition("Not hungry", s, c));
    EXPECT_TRUE(condition("Safe from fire", s, c));
  }
}

TEST(Scenario, TwoStartsHungryWithOtherGoalsTrue) {
  const WorldConfig c;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const WorldState s = make_scenario(2, seed, c);
    EXPECT_FALSE(condition("Not hungry", s, c));
    EXPECT_TRUE(condition("Safe from hostiles", s, c));
    EXPECT_TRUE(condition("Safe from fire", s, c));
  }
}

TEST(Scenario, SameIdAndSeedGiveSameState) {
  const WorldConfig c;
  EXPECT_EQ(make_scenario(2, 9, c), make_scenario(2, 9, c));
  EXPECT_EQ(digest(make_scenario(1, 9, c)), digest(make_scenario(1, 9, c)));
  EXPECT_NE(digest(make_scenario(1, 9, c)), digest(make_scenario(2, 9, c)));
  EXPECT_THROW(make_scenario(3, 0, c), InvalidScenario);
}

TEST(Scenario, ScriptedAgentCompletesScenarioTwo) {
  const WorldConfig c;
  const auto& compiled = accbt::testing::table1();
  const AgentBindings b = bind_agent(compiled.spec, c);
  std::size_t completed = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GridEnv env(make_scenario(2, seed, c), seed + 1000, c);
    const auto trace = bt::step_mission(compiled.tree, env, b, 2000);
    if (trace.reason != bt::MissionEnd::RootSuccess) continue;
    ++completed;
    for (const auto& goal : compiled.spec.goals) EXPECT_TRUE(condition(goal, env.state(), c));
  }
  EXPECT_GE(completed, 18u);
}

TEST(Agent, UnknownConditionInSpecIsRejected) {
  const WorldConfig c;
  const auto spec = chain::parse_spec("goal \"Has diamonds\"\n");
  EXPECT_THROW(bind_agent(spec, c), UnknownCondition);
  const auto spec2 = chain::parse_spec("goal \"Has food\"\naction \"Fly\" { pre: []; post: \"Has food\" }\n");
  EXPECT_THROW(bind_agent(spec2, c), UnknownAction);
}

TEST(WorldJson, MissingKeysKeepDefaults) {
  WorldConfig c;
  from_json(nlohmann::json::parse(R"({"fire_damage": 3})"), c);
  EXPECT_EQ(c.fire_damage, 3);
  EXPECT_EQ(c.width, 12);
  EXPECT_EQ(nlohmann::json(c)["scenarios"], nlohmann::json(WorldConfig{})["scenarios"]);
  nlohmann::json j = c;
  WorldConfig back;
  from_json(j, back);
  EXPECT_EQ(nlohmann::json(back), j);
}

TEST(Arena, BfsOracleCountsMovesToAdjacency) {
  const WorldConfig c = arena_config(7);
  EXPECT_EQ(accbt::testing::bfs_steps_to_cow({0, 0}, {3, 3}, c), 4);
  EXPECT_EQ(accbt::testing::bfs_steps_to_cow({0, 3}, {3, 3}, c), 2);
  EXPECT_EQ(accbt::testing::bfs_steps_to_cow({2, 2}, {3, 3}, c), 0);
  EXPECT_EQ(accbt::testing::bfs_steps_to_cow({6, 0}, {0, 6}, c), 10);
}

}  // namespace
