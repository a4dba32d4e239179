#include "accbt/eval/metrics.hpp"

#include <algorithm>

#include "accbt/names.hpp"

namespace accbt::eval {

std::vector<std::string> tracked_conditions(const std::vector<TrackedAcc>& tracked) {
  std::vector<std::string> out;
  std::vector<std::string> keys;
  for (const auto& t : tracked) {
    for (const auto& c : t.conditions) {
      const std::string key = fold_name(c);
      if (std::find(keys.begin(), keys.end(), key) != keys.end()) continue;
      keys.push_back(key);
      out.push_back(c);
    }
  }
  return out;
}

MissionMetrics mission_metrics(const bt::MissionTrace& trace,
                               const std::vector<TrackedAcc>& tracked, std::size_t index) {
  const std::vector<std::string> conditions = tracked_conditions(tracked);

  auto trace_slot = [&](const std::string& name) {
    const std::string key = fold_name(name);
    for (std::size_t i = 0; i < trace.conditions.size(); ++i) {
      if (fold_name(trace.conditions[i]) == key) return i;
    }
    throw bt::BtError("trace does not record tracked condition '" + name + "'");
  };
  auto report_slot = [&](const std::string& name) {
    const std::string key = fold_name(name);
    for (std::size_t i = 0; i < conditions.size(); ++i) {
      if (fold_name(conditions[i]) == key) return i;
    }
    return conditions.size();
  };

  // Per tracked action: (trace slot, report slot) of each watched condition.
  struct Watch {
    std::string key;
    std::vector<std::pair<std::size_t, std::size_t>> slots;
  };
  std::vector<Watch> watches;
  for (const auto& t : tracked) {
    Watch w{fold_name(t.action), {}};
    for (const auto& c : t.conditions) w.slots.emplace_back(trace_slot(c), report_slot(c));
    watches.push_back(std::move(w));
  }

  MissionMetrics m;
  m.index = index;
  m.reason = trace.reason;
  m.steps = trace.steps.size();
  m.condition_steps.assign(conditions.size(), 0);
  for (const auto& step : trace.steps) {
    const std::string key = fold_name(step.action);
    const auto it = std::find_if(watches.begin(), watches.end(),
                                 [&](const Watch& w) { return w.key == key; });
    if (it == watches.end()) continue;
    bool violated = false;
    for (const auto& [trace_i, report_i] : it->slots) {
      if (!step.truth[trace_i]) {
        violated = true;
        ++m.condition_steps[report_i];
      }
    }
    if (violated) ++m.violation_steps;
  }
  return m;
}

Aggregate aggregate(const std::vector<MissionMetrics>& missions,
                    const std::vector<std::string>& conditions) {
  Aggregate a;
  a.episodes = missions.size();
  RunningStats violations;
  RunningStats completion;
  std::vector<RunningStats> per(conditions.size());
  std::vector<std::size_t> per_hit(conditions.size(), 0);
  std::size_t with_violation = 0;
  for (const auto& m : missions) {
    violations.push(static_cast<double>(m.violation_steps));
    if (m.violation_steps > 0) ++with_violation;
    for (std::size_t c = 0; c < conditions.size(); ++c) {
      const std::size_t n = c < m.condition_steps.size() ? m.condition_steps[c] : 0;
      per[c].push(static_cast<double>(n));
      if (n > 0) ++per_hit[c];
    }
    switch (m.reason) {
      case bt::MissionEnd::AlreadySucceeded:
      case bt::MissionEnd::RootSuccess:
        ++a.completed;
        completion.push(static_cast<double>(m.steps));
        break;
      case bt::MissionEnd::StepLimit: ++a.timeouts; break;
      case bt::MissionEnd::AgentDied: ++a.deaths; break;
      case bt::MissionEnd::RootFailure: ++a.failures; break;
    }
  }
  const double n = static_cast<double>(std::max<std::size_t>(missions.size(), 1));
  a.pct_episodes_with_violation = 100.0 * static_cast<double>(with_violation) / n;
  a.violation_steps = violations.summary();
  a.completion_steps = completion.summary();
  for (std::size_t c = 0; c < conditions.size(); ++c) {
    a.per_condition.push_back(
        {conditions[c], 100.0 * static_cast<double>(per_hit[c]) / n, per[c].summary()});
  }
  return a;
}

}  // namespace accbt::eval
