#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "accbt/bt/mission.hpp"
#include "accbt/chain/compiled.hpp"
#include "accbt/eval/metrics.hpp"
#include "accbt/grid/world.hpp"
#include "accbt/rl/qtable.hpp"

namespace accbt::eval {

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PolicyLoadError : public EvalError {
 public:
  using EvalError::EvalError;
};

class ScenarioError : public EvalError {
 public:
  using EvalError::EvalError;
};

/// A q-table that does not fit the tree: unknown or non-learned action, or a
/// codec other than the one the action uses.
class CompatibilityError : public EvalError {
 public:
  using EvalError::EvalError;
};

/// Controller for one learned action; a null table means its scripted
/// controller.
struct PolicySource {
  std::string action;
  std::shared_ptr<const rl::QTable> table;
  std::string origin = "scripted";
};

struct EvalConfig {
  int scenario = 2;
  std::size_t episodes = 1000;
  std::size_t mission_step_cap = 2000;
  /// Learned actions not listed run their scripted controller.
  std::vector<PolicySource> policies;
  std::string preset = "scripted";
  /// Restricts the watched ACC conditions; all ACCs of the learned actions
  /// when unset.
  std::optional<std::vector<std::string>> tracked_conditions;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  bool keep_traces = false;
};

struct EvalReport {
  static constexpr int kSchemaVersion = 1;

  int scenario = 0;
  std::string preset;
  std::uint64_t seed = 0;
  std::size_t mission_step_cap = 0;
  std::vector<std::pair<std::string, std::string>> policies;  ///< action, origin
  std::vector<TrackedAcc> tracked;
  Aggregate metrics;
  std::vector<MissionMetrics> missions;

  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

struct EvalResult {
  EvalReport report;
  std::vector<bt::MissionTrace> traces;  ///< filled when keep_traces is set
};

/// Seeds of mission i: the start state is drawn with
/// mix_seed(seed, 2i) and the world's random stream with mix_seed(seed, 2i+1).
std::uint64_t scenario_seed(std::uint64_t seed, std::size_t mission);
std::uint64_t env_seed(std::uint64_t seed, std::size_t mission);

/// Throws CompatibilityError when `table` cannot drive its action in the tree.
void check_compatible(const chain::CompiledSpec& compiled, const rl::QTable& table);

/// ACC sets of the learned actions, optionally restricted to `only`.
std::vector<TrackedAcc> tracked_accs(const chain::CompiledSpec& compiled,
                                     const std::optional<std::vector<std::string>>& only);

/// Runs `episodes` independent missions of the scenario with greedy learned
/// controllers and aggregates their violation and completion metrics. The
/// result does not depend on `jobs`.
EvalResult evaluate(const chain::CompiledSpec& compiled, const grid::WorldConfig& world,
                    const EvalConfig& config);

/// Recomputes the metrics of `report` from stored traces (same order).
EvalReport recompute(const EvalReport& report, const std::vector<bt::MissionTrace>& traces);

}  // namespace accbt::eval
