#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "accbt/chain/compiled.hpp"
#include "accbt/grid/conditions.hpp"
#include "accbt/grid/world.hpp"

namespace accbt::rl {

class RlError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownPreset : public RlError {
 public:
  explicit UnknownPreset(const std::string& name) : RlError("unknown reward preset: " + name) {}
};

class InvalidRewardConfig : public RlError {
 public:
  using RlError::RlError;
};

class NoAccTable : public RlError {
 public:
  explicit NoAccTable(const std::string& action) : RlError("no ACC entry for action: " + action) {}
};

class NonLearnedAction : public RlError {
 public:
  explicit NonLearnedAction(const std::string& action)
      : RlError("action is not marked learned: " + action) {}
};

/// Reward constants of one training setup. An m_acc of 0 means the setup has
/// no ACC penalty: violating steps then earn m_t like any other step.
struct RewardConfig {
  double m_p = 1000.0;
  double m_t = -0.1;
  double m_acc = 0.0;
  bool end_episode_on_acc = false;
  std::string preset = "standard";

  friend bool operator==(const RewardConfig&, const RewardConfig&) = default;
};

/// standard | neg_reward | end_episode | nr_ee. Throws UnknownPreset.
RewardConfig preset(std::string_view name);
const std::vector<std::string>& preset_names();

/// Checks m_p > 0 >= m_t >= m_acc; throws InvalidRewardConfig.
void validate(const RewardConfig& config);

enum class RewardCase : std::uint8_t { Postcondition, AccViolation, Step };
std::string_view to_string(RewardCase c);

struct RewardOutcome {
  double value = 0.0;
  RewardCase kind = RewardCase::Step;
};

/// Postcondition and resolved ACC conditions of one action.
struct ActionModel {
  std::string name;
  grid::Condition postcondition{};
  std::vector<grid::Condition> acc;

  /// True when some ACC condition is false in `state`.
  bool acc_violated(const grid::WorldState& state, const grid::WorldConfig& world) const;
};

/// Resolves `action` against a compiled tree. Throws grid::UnknownAction if
/// the action spec has no such action and NoAccTable if derive_acc produced no
/// entry (the action is not in the tree).
ActionModel action_model(const chain::CompiledSpec& compiled, std::string_view action);

/// Three-case reward, checked in order: postcondition holds in `after`, some
/// ACC condition is false in `after`, otherwise the step reward.
RewardOutcome reward(const ActionModel& model, const grid::WorldState& after,
                     const RewardConfig& config, const grid::WorldConfig& world);

RewardOutcome reward(const chain::CompiledSpec& compiled, std::string_view action,
                     const grid::WorldState& after, const RewardConfig& config,
                     const grid::WorldConfig& world);

}  // namespace accbt::rl
