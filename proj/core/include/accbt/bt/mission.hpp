#pragma once

#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "accbt/bt/tick.hpp"

namespace accbt::bt {

/// The environment rejected a primitive command; points at a policy or
/// binding bug rather than a modelling condition.
class EnvironmentFault : public BtError {
 public:
  using BtError::BtError;
};

enum class MissionEnd : std::uint8_t {
  AlreadySucceeded,
  RootSuccess,
  RootFailure,
  AgentDied,
  StepLimit,
};

std::string_view to_string(MissionEnd end);

struct TraceStep {
  std::uint64_t t = 0;           ///< environment clock after the step
  std::string action;            ///< executing action this step
  Status root_status = Status::Running;
  std::uint64_t digest = 0;      ///< digest of the state after the step
  std::vector<bool> truth;       ///< condition values after the step
};

/// Record of one root-driven run. `truth` vectors are indexed like
/// `conditions`.
struct MissionTrace {
  std::vector<std::string> conditions;
  std::vector<bool> initial_truth;
  std::vector<TraceStep> steps;
  MissionEnd reason = MissionEnd::StepLimit;

  std::size_t length() const noexcept { return steps.size(); }
};

/// JSON-lines dump: a header line {"mission", "conditions", "initial"}, one
/// line per step {"step", "t", "action", "root", "digest", "truth"} and an end
/// line {"end", "steps"}. Several traces may follow each other in one stream.
void write_trace_jsonl(std::ostream& out, const MissionTrace& trace, std::size_t mission = 0);

/// Reads every trace in a write_trace_jsonl stream; throws BtError on
/// malformed input.
std::vector<MissionTrace> read_trace_jsonl(std::istream& in);

template <class Env>
concept MissionEnvironment = requires(Env& env, const Env& cenv,
                                      const typename Env::command_type& command) {
  typename Env::state_type;
  { cenv.state() } -> std::convertible_to<const typename Env::state_type&>;
  env.apply(command);
  { cenv.agent_alive() } -> std::convertible_to<bool>;
  { cenv.clock() } -> std::convertible_to<std::uint64_t>;
  { cenv.digest() } -> std::convertible_to<std::uint64_t>;
};

/// Runs x_{t+1} = f(x_t, u_0(x_t)) with u_0 the root's composed controller
/// until the root leaves its Running region, the agent dies, or `max_steps`
/// commands have been applied.
template <MissionEnvironment Env>
MissionTrace step_mission(
    const Node& root, Env& env,
    const Bindings<typename Env::state_type, typename Env::command_type>& bindings,
    std::size_t max_steps) {
  MissionTrace trace;
  trace.conditions = condition_names(root);
  std::vector<std::string> keys;
  keys.reserve(trace.conditions.size());
  for (const auto& name : trace.conditions) keys.push_back(fold_name(name));

  auto truth_of = [&](const auto& state) {
    std::vector<bool> truth(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) truth[i] = bindings.condition(keys[i])(state);
    return truth;
  };

  trace.initial_truth = truth_of(env.state());
  for (;;) {
    const auto [status, leaf] = tick_fast(root, env.state(), bindings);
    if (status == Status::Success) {
      trace.reason = trace.steps.empty() ? MissionEnd::AlreadySucceeded : MissionEnd::RootSuccess;
      break;
    }
    if (status == Status::Failure) {
      trace.reason = MissionEnd::RootFailure;
      break;
    }
    if (trace.steps.size() >= max_steps) {
      trace.reason = MissionEnd::StepLimit;
      break;
    }
    const auto& binding = bindings.action(leaf->key());
    if (!binding.policy) throw UnresolvedId(leaf->name());
    env.apply(binding.policy(env.state()));

    TraceStep step;
    step.t = env.clock();
    step.action = leaf->name();
    step.root_status = status;
    step.digest = env.digest();
    step.truth = truth_of(env.state());
    trace.steps.push_back(std::move(step));

    if (!env.agent_alive()) {
      trace.reason = MissionEnd::AgentDied;
      break;
    }
  }
  return trace;
}

}  // namespace accbt::bt
