#include "accbt/rl/train.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <ostream>

#include "accbt/bt/tick.hpp"
#include "accbt/grid/agent.hpp"
#include "accbt/grid/scenario.hpp"
#include "accbt/grid/scripted.hpp"
#include "accbt/grid/step.hpp"
#include "accbt/names.hpp"

namespace accbt::rl {

namespace {

std::string shortest(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

double epsilon_at(const Hyperparameters& h, std::uint64_t done, std::uint64_t total) {
  const double span = h.epsilon_decay_fraction * static_cast<double>(total);
  if (span <= 0.0) return h.epsilon_end;
  const double frac = std::min(1.0, static_cast<double>(done) / span);
  return h.epsilon_start + (h.epsilon_end - h.epsilon_start) * frac;
}

struct Pending {
  std::uint32_t s;
  std::size_t a;
  double r;
  std::uint32_t s_next;
};

}  // namespace

std::string_view to_string(EpisodeEnd end) {
  switch (end) {
    case EpisodeEnd::Postcondition: return "postcondition";
    case EpisodeEnd::AccViolation: return "acc_violation";
    case EpisodeEnd::Death: return "death";
    case EpisodeEnd::StepLimit: return "step_limit";
  }
  return "?";
}

ScenarioSampler scenario_sampler(int scenario, const grid::WorldConfig& world) {
  if (scenario != 1 && scenario != 2) throw grid::InvalidScenario(scenario);
  return [scenario, &world](grid::Rng& rng) {
    return grid::make_scenario(scenario, rng.below(UINT64_MAX), world);
  };
}

ScenarioSampler scenario_sampler(std::vector<int> scenarios, const grid::WorldConfig& world) {
  if (scenarios.empty()) throw grid::InvalidScenario(0);
  for (int id : scenarios) {
    if (id != 1 && id != 2) throw grid::InvalidScenario(id);
  }
  if (scenarios.size() == 1) return scenario_sampler(scenarios.front(), world);
  return [scenarios = std::move(scenarios), &world](grid::Rng& rng) {
    const int id = scenarios[rng.below(scenarios.size())];
    return grid::make_scenario(id, rng.below(UINT64_MAX), world);
  };
}

std::vector<int> training_scenarios(std::string_view action) {
  const std::string key = fold_name(action);
  if (key == "defeat hostile") return {1, 2};
  if (key == "chase cow") return {2};
  throw grid::UnknownAction(std::string(action));
}

TrainResult train(const chain::CompiledSpec& compiled, const grid::WorldConfig& world,
                  const TrainConfig& config, const ScenarioSampler& sampler) {
  const chain::ActionSpec* spec = chain::find_action(compiled.spec.actions, config.action);
  if (!spec) throw grid::UnknownAction(config.action);
  if (spec->impl != bt::ImplKind::Learned) throw NonLearnedAction(spec->name);
  const ActionModel model = action_model(compiled, spec->name);
  validate(config.reward);
  if (config.episode_step_limit == 0) throw RlError("episode step limit must be positive");

  const FeatureCodec codec = FeatureCodec::for_action(spec->name);
  TrainResult result{QTable(spec->name, codec, config.hyper), {}, 0, 0};
  QTable& table = result.table;
  table.reward = config.reward;
  table.seed = config.seed;
  table.total_steps = config.total_steps;
  if (config.total_steps == 0) return result;

  const grid::AgentBindings bindings = grid::bind_agent(compiled.spec, world);
  const std::string trained_key = fold_name(spec->name);
  const grid::Rng root(config.seed);
  grid::Rng env_rng = root.split(1);
  grid::Rng explore = root.split(2);
  grid::Rng scenario_rng = root.split(3);
  // Guards against trees that rarely select the trained action.
  const std::uint64_t env_cap = config.total_steps * 50 + 100000;

  grid::WorldState state = sampler(scenario_rng);
  std::size_t mission_steps = 0;
  std::uint64_t trained = 0;
  std::optional<Pending> pending;
  std::optional<EpisodeLog> episode;

  auto close_episode = [&](EpisodeEnd reason) {
    episode->reason = reason;
    result.episodes.push_back(std::move(*episode));
    episode.reset();
  };
  auto end_mission = [&](bool died) {
    if (pending) {
      table.update(pending->s, pending->a, pending->r, pending->s_next, false);
      pending.reset();
    }
    if (episode) close_episode(died ? EpisodeEnd::Death : EpisodeEnd::StepLimit);
    state = sampler(scenario_rng);
    mission_steps = 0;
    ++result.missions;
  };

  while (trained < config.total_steps && result.env_steps < env_cap) {
    const auto [status, leaf] = bt::tick_fast(compiled.tree, state, bindings);
    if (status != bt::Status::Running || mission_steps >= config.mission_step_cap) {
      end_mission(false);
      continue;
    }

    if (leaf->key() != trained_key) {
      state = grid::step(state, bindings.action(leaf->key()).policy(state), env_rng, world);
      ++result.env_steps;
      ++mission_steps;
      if (episode) ++episode->other_steps;
      if (!state.agent.alive) end_mission(true);
      continue;
    }

    const std::uint32_t s = codec.encode(state);
    if (pending) {
      table.update(pending->s, pending->a, pending->r, s, false);
      pending.reset();
    }
    if (!episode) {
      episode.emplace();
      episode->index = result.episodes.size();
      episode->mission = result.missions;
      episode->t_start = state.t;
    }
    const double eps = epsilon_at(config.hyper, trained, config.total_steps);
    const std::size_t a = explore.chance(eps) ? explore.below(codec.action_count())
                                              : table.best_action(s);
    grid::WorldState next = grid::step(state, codec.actions()[a], env_rng, world);
    ++trained;
    ++result.env_steps;
    ++mission_steps;

    const RewardOutcome out = reward(model, next, config.reward, world);
    episode->steps += 1;
    episode->reward += out.value;
    episode->rewards.push_back(out.value);
    episode->t_end = next.t;
    if (model.acc_violated(next, world)) ++episode->acc_steps;

    const std::uint32_t s_next = codec.encode(next);
    const bool dead = !next.agent.alive;
    if (out.kind == RewardCase::Postcondition) {
      table.update(s, a, out.value, s_next, true);
      close_episode(EpisodeEnd::Postcondition);
    } else if (dead) {
      table.update(s, a, out.value, s_next, true);
      close_episode(EpisodeEnd::Death);
    } else if (out.kind == RewardCase::AccViolation && config.reward.end_episode_on_acc) {
      table.update(s, a, out.value, s_next, true);
      close_episode(EpisodeEnd::AccViolation);
    } else if (episode->steps >= config.episode_step_limit) {
      table.update(s, a, out.value, s_next, false);
      close_episode(EpisodeEnd::StepLimit);
    } else {
      pending = Pending{s, a, out.value, s_next};
    }
    state = std::move(next);
    if (dead) end_mission(true);
  }
  if (pending) table.update(pending->s, pending->a, pending->r, pending->s_next, false);
  if (episode) close_episode(EpisodeEnd::StepLimit);
  return result;
}

void write_training_csv(std::ostream& out, const std::vector<EpisodeLog>& episodes) {
  out << "mission,episode,t_start,t_end,steps,other_steps,reward,reason,acc_steps\n";
  for (const auto& e : episodes) {
    out << e.mission << ',' << e.index << ',' << e.t_start << ',' << e.t_end << ',' << e.steps
        << ',' << e.other_steps << ',' << shortest(e.reward) << ',' << to_string(e.reason) << ','
        << e.acc_steps << '\n';
  }
}

}  // namespace accbt::rl
