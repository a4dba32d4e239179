#include "accbt/eval/evaluate.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "accbt/grid/agent.hpp"
#include "accbt/grid/env.hpp"
#include "accbt/grid/rng.hpp"
#include "accbt/grid/scenario.hpp"
#include "accbt/grid/scripted.hpp"
#include "accbt/names.hpp"
#include "accbt/rl/features.hpp"

namespace accbt::eval {

std::uint64_t scenario_seed(std::uint64_t seed, std::size_t mission) {
  return grid::mix_seed(seed, 2 * static_cast<std::uint64_t>(mission));
}

std::uint64_t env_seed(std::uint64_t seed, std::size_t mission) {
  return grid::mix_seed(seed, 2 * static_cast<std::uint64_t>(mission) + 1);
}

void check_compatible(const chain::CompiledSpec& compiled, const rl::QTable& table) {
  const chain::ActionSpec* spec = chain::find_action(compiled.spec.actions, table.action());
  if (!spec) throw CompatibilityError("q-table action '" + table.action() + "' is not in the tree");
  if (spec->impl != bt::ImplKind::Learned) {
    throw CompatibilityError("q-table action '" + table.action() + "' is not marked learned");
  }
  rl::FeatureCodec expected = [&] {
    try {
      return rl::FeatureCodec::for_action(spec->name);
    } catch (const grid::UnknownAction&) {
      throw CompatibilityError("no feature codec for action '" + spec->name + "'");
    }
  }();
  if (expected.kind() != table.codec().kind() || expected.version() != table.codec().version()) {
    throw CompatibilityError("q-table codec " + std::string(table.codec().name()) + " v" +
                             std::to_string(table.codec().version()) + " does not match " +
                             std::string(expected.name()) + " v" +
                             std::to_string(expected.version()));
  }
}

std::vector<TrackedAcc> tracked_accs(const chain::CompiledSpec& compiled,
                                     const std::optional<std::vector<std::string>>& only) {
  std::vector<TrackedAcc> out;
  for (const auto& entry : compiled.acc.entries()) {
    const chain::ActionSpec* spec = chain::find_action(compiled.spec.actions, entry.action);
    if (!spec || spec->impl != bt::ImplKind::Learned) continue;
    TrackedAcc t{entry.action, {}};
    for (const auto& c : entry.conditions) {
      if (only) {
        const std::string key = fold_name(c);
        bool keep = false;
        for (const auto& o : *only) keep = keep || fold_name(o) == key;
        if (!keep) continue;
      }
      t.conditions.push_back(c);
    }
    out.push_back(std::move(t));
  }
  return out;
}

EvalResult evaluate(const chain::CompiledSpec& compiled, const grid::WorldConfig& world,
                    const EvalConfig& config) {
  if (config.scenario != 1 && config.scenario != 2) {
    throw ScenarioError("scenario must be 1 or 2, got " + std::to_string(config.scenario));
  }
  if (config.episodes == 0) throw EvalError("episodes must be at least 1");
  for (const auto& p : config.policies) {
    if (p.table) check_compatible(compiled, *p.table);
  }

  EvalResult result;
  EvalReport& report = result.report;
  report.scenario = config.scenario;
  report.preset = config.preset;
  report.seed = config.seed;
  report.mission_step_cap = config.mission_step_cap;
  report.tracked = tracked_accs(compiled, config.tracked_conditions);
  for (const auto& a : compiled.spec.actions) {
    if (a.impl != bt::ImplKind::Learned) continue;
    std::string origin = "scripted";
    for (const auto& p : config.policies) {
      if (fold_name(p.action) == fold_name(a.name) && p.table) origin = p.origin;
    }
    report.policies.emplace_back(a.name, origin);
  }

  const std::size_t n = config.episodes;
  std::vector<MissionMetrics> missions(n);
  std::vector<bt::MissionTrace> traces(config.keep_traces ? n : 0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    try {
      grid::AgentBindings bindings = grid::bind_agent(compiled.spec, world);
      for (const auto& p : config.policies) {
        if (p.table) bindings.set_policy(p.table->action(), rl::extract_policy(p.table));
      }
      for (std::size_t i = next++; i < n; i = next++) {
        grid::GridEnv env(grid::make_scenario(config.scenario, scenario_seed(config.seed, i), world),
                          env_seed(config.seed, i), world);
        bt::MissionTrace trace =
            bt::step_mission(compiled.tree, env, bindings, config.mission_step_cap);
        missions[i] = mission_metrics(trace, report.tracked, i);
        if (config.keep_traces) traces[i] = std::move(trace);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = n;
    }
  };

  const unsigned jobs = std::max(1U, std::min<unsigned>(config.jobs, static_cast<unsigned>(n)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  report.metrics = aggregate(missions, tracked_conditions(report.tracked));
  report.missions = std::move(missions);
  result.traces = std::move(traces);
  return result;
}

EvalReport recompute(const EvalReport& report, const std::vector<bt::MissionTrace>& traces) {
  EvalReport out = report;
  out.missions.clear();
  for (std::size_t i = 0; i < traces.size(); ++i) {
    out.missions.push_back(mission_metrics(traces[i], report.tracked, i));
  }
  out.metrics = aggregate(out.missions, tracked_conditions(report.tracked));
  return out;
}

}  // namespace accbt::eval
