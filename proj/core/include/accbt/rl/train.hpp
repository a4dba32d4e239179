#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "accbt/chain/compiled.hpp"
#include "accbt/grid/rng.hpp"
#include "accbt/grid/world.hpp"
#include "accbt/rl/qtable.hpp"
#include "accbt/rl/reward.hpp"

namespace accbt::rl {

enum class EpisodeEnd : std::uint8_t { Postcondition, AccViolation, Death, StepLimit };
std::string_view to_string(EpisodeEnd end);

/// One span during which the trained action was the executing action. The
/// span may be interrupted by other actions (`other_steps`) when the tree
/// switches away without ending the episode.
struct EpisodeLog {
  std::size_t index = 0;
  std::size_t mission = 0;
  std::uint64_t t_start = 0;  ///< world clock when the episode began
  std::uint64_t t_end = 0;    ///< world clock after its last trained step
  std::size_t steps = 0;      ///< trained-action steps
  std::size_t other_steps = 0;
  double reward = 0.0;
  EpisodeEnd reason = EpisodeEnd::StepLimit;
  std::size_t acc_steps = 0;  ///< trained steps that ended with an ACC false
  std::vector<double> rewards;
};

struct TrainConfig {
  std::string action;
  RewardConfig reward;
  std::uint64_t total_steps = 200000;  ///< budget of trained-action steps
  std::uint64_t seed = 0;
  Hyperparameters hyper;
  std::size_t episode_step_limit = 500;
  std::size_t mission_step_cap = 2000;
};

/// Draws the start state of a fresh mission.
using ScenarioSampler = std::function<grid::WorldState(grid::Rng&)>;

ScenarioSampler scenario_sampler(int scenario, const grid::WorldConfig& world);
/// Draws each mission's scenario uniformly from `scenarios`.
ScenarioSampler scenario_sampler(std::vector<int> scenarios, const grid::WorldConfig& world);
/// Scenarios that exercise a learned action: {1, 2} for Defeat hostile, {2}
/// for Chase cow. Throws grid::UnknownAction.
std::vector<int> training_scenarios(std::string_view action);

struct TrainResult {
  QTable table;
  std::vector<EpisodeLog> episodes;
  std::uint64_t env_steps = 0;
  std::size_t missions = 0;
};

/// Tabular Q-learning of one learned action inside the full tree.
///
/// Whole missions are run. Whenever the tick selects the trained action it
/// acts epsilon-greedily and the transition is learned; every other action
/// runs its scripted controller. An episode ends on the postcondition, on
/// death, after `episode_step_limit` trained steps, or on an ACC violation
/// when the reward config says so. Ending an episode does not reset the
/// world; the next episode starts when the tick selects the action again.
/// When the tick switches away without ending the episode, the last
/// transition is completed at the state where the action is selected again.
/// Missions restart from `sampler` on death, when the root stops running, or
/// after `mission_step_cap` steps.
TrainResult train(const chain::CompiledSpec& compiled, const grid::WorldConfig& world,
                  const TrainConfig& config, const ScenarioSampler& sampler);

/// mission,episode,t_start,t_end,steps,other_steps,reward,reason,acc_steps
void write_training_csv(std::ostream& out, const std::vector<EpisodeLog>& episodes);

}  // namespace accbt::rl
