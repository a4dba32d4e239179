#include "accbt/grid/agent.hpp"

#include <vector>

#include "accbt/grid/conditions.hpp"
#include "accbt/grid/scripted.hpp"

namespace accbt::grid {

namespace {

Condition resolve(const std::string& name) {
  const auto c = find_condition(name);
  if (!c) throw UnknownCondition(name);
  return *c;
}

}  // namespace

AgentBindings bind_agent(const chain::SpecFile& spec, const WorldConfig& config) {
  AgentBindings b;
  const WorldConfig* cfg = &config;
  auto bind = [&](const std::string& name) {
    const Condition c = resolve(name);
    b.bind_condition(name, [c, cfg](const WorldState& s) { return holds(c, s, *cfg); });
  };
  for (const auto& g : spec.goals) bind(g);
  for (const auto& a : spec.actions) {
    for (const auto& p : a.preconditions) bind(p);
    bind(a.postcondition);

    std::vector<Condition> pre;
    for (const auto& p : a.preconditions) pre.push_back(resolve(p));
    const Condition post = resolve(a.postcondition);
    if (!has_scripted_policy(a.name)) throw UnknownAction(a.name);

    AgentBindings::Action action;
    action.status = [pre, post, cfg](const WorldState& s) {
      if (holds(post, s, *cfg)) return bt::Status::Success;
      for (Condition c : pre) {
        if (!holds(c, s, *cfg)) return bt::Status::Failure;
      }
      return bt::Status::Running;
    };
    action.policy = [name = a.name, cfg](const WorldState& s) {
      return scripted_policy(name, s, *cfg);
    };
    b.bind_action(a.name, std::move(action));
  }
  return b;
}

}  // namespace accbt::grid
