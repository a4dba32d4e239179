#include "accbt/rl/reward.hpp"

#include "accbt/grid/scripted.hpp"
#include "accbt/names.hpp"

namespace accbt::rl {

namespace {

grid::Condition resolve(const std::string& name) {
  const auto c = grid::find_condition(name);
  if (!c) throw grid::UnknownCondition(name);
  return *c;
}

}  // namespace

RewardConfig preset(std::string_view name) {
  const std::string key = fold_name(name);
  if (key == "standard") return {1000.0, -0.1, 0.0, false, "standard"};
  if (key == "neg_reward") return {1000.0, -0.1, -10.0, false, "neg_reward"};
  if (key == "end_episode") return {1000.0, -0.1, 0.0, true, "end_episode"};
  if (key == "nr_ee") return {1000.0, -0.1, -1000.0, true, "nr_ee"};
  throw UnknownPreset(std::string(name));
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"standard", "neg_reward", "end_episode", "nr_ee"};
  return names;
}

void validate(const RewardConfig& c) {
  if (!(c.m_p > 0.0)) throw InvalidRewardConfig("M_p must be positive");
  if (!(c.m_t <= 0.0)) throw InvalidRewardConfig("M_t must not be positive");
  if (!(c.m_acc <= c.m_t) && c.m_acc != 0.0) {
    throw InvalidRewardConfig("M_ACC must not exceed M_t");
  }
}

std::string_view to_string(RewardCase c) {
  switch (c) {
    case RewardCase::Postcondition: return "postcondition";
    case RewardCase::AccViolation: return "acc_violation";
    case RewardCase::Step: return "step";
  }
  return "?";
}

bool ActionModel::acc_violated(const grid::WorldState& state,
                               const grid::WorldConfig& world) const {
  for (grid::Condition c : acc) {
    if (!grid::holds(c, state, world)) return true;
  }
  return false;
}

ActionModel action_model(const chain::CompiledSpec& compiled, std::string_view action) {
  const chain::ActionSpec* spec = chain::find_action(compiled.spec.actions, action);
  if (!spec) throw grid::UnknownAction(std::string(action));
  const auto* acc = compiled.acc.find(action);
  if (!acc) throw NoAccTable(spec->name);
  ActionModel m;
  m.name = spec->name;
  m.postcondition = resolve(spec->postcondition);
  for (const auto& c : *acc) m.acc.push_back(resolve(c));
  return m;
}

RewardOutcome reward(const ActionModel& model, const grid::WorldState& after,
                     const RewardConfig& config, const grid::WorldConfig& world) {
  if (grid::holds(model.postcondition, after, world)) {
    return {config.m_p, RewardCase::Postcondition};
  }
  if (model.acc_violated(after, world)) {
    return {config.m_acc != 0.0 ? config.m_acc : config.m_t, RewardCase::AccViolation};
  }
  return {config.m_t, RewardCase::Step};
}

RewardOutcome reward(const chain::CompiledSpec& compiled, std::string_view action,
                     const grid::WorldState& after, const RewardConfig& config,
                     const grid::WorldConfig& world) {
  return reward(action_model(compiled, action), after, config, world);
}

}  // namespace accbt::rl
