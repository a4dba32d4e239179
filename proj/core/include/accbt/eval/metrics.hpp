#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "accbt/bt/mission.hpp"
#include "accbt/eval/stats.hpp"

namespace accbt::eval {

/// ACC conditions watched while `action` executes.
struct TrackedAcc {
  std::string action;
  std::vector<std::string> conditions;

  friend bool operator==(const TrackedAcc&, const TrackedAcc&) = default;
};

struct MissionMetrics {
  std::size_t index = 0;
  bt::MissionEnd reason = bt::MissionEnd::StepLimit;
  std::size_t steps = 0;
  /// Steps whose executing action is tracked and that end with one of that
  /// action's tracked conditions false.
  std::size_t violation_steps = 0;
  /// Same count per condition, indexed like the report's condition list.
  std::vector<std::size_t> condition_steps;

  bool completed() const noexcept {
    return reason == bt::MissionEnd::RootSuccess || reason == bt::MissionEnd::AlreadySucceeded;
  }
  friend bool operator==(const MissionMetrics&, const MissionMetrics&) = default;
};

/// Distinct tracked condition names in first-seen order.
std::vector<std::string> tracked_conditions(const std::vector<TrackedAcc>& tracked);

/// Violation accounting for one trace. A step counts only through the ACC
/// set of the action executing at that step; a condition that is false
/// while some other action runs is not a violation. Throws bt::BtError if
/// a tracked condition is not recorded in the trace.
MissionMetrics mission_metrics(const bt::MissionTrace& trace,
                               const std::vector<TrackedAcc>& tracked, std::size_t index = 0);

struct ConditionBreakdown {
  std::string condition;
  double pct_episodes = 0.0;
  Summary steps;

  friend bool operator==(const ConditionBreakdown&, const ConditionBreakdown&) = default;
};

/// Aggregates over all missions, in index order.
struct Aggregate {
  std::size_t episodes = 0;
  double pct_episodes_with_violation = 0.0;
  Summary violation_steps;   ///< over all missions
  Summary completion_steps;  ///< over completed missions only
  std::size_t completed = 0;
  std::size_t timeouts = 0;
  std::size_t deaths = 0;
  std::size_t failures = 0;
  std::vector<ConditionBreakdown> per_condition;

  friend bool operator==(const Aggregate&, const Aggregate&) = default;
};

Aggregate aggregate(const std::vector<MissionMetrics>& missions,
                    const std::vector<std::string>& conditions);

}  // namespace accbt::eval
