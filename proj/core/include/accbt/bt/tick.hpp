#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "accbt/bt/node.hpp"
#include "accbt/names.hpp"

namespace accbt::bt {

/// Controller and status function of an action leaf.
template <class State, class Command>
struct ActionBinding {
  std::function<Command(const State&)> policy;
  std::function<Status(const State&)> status;
};

/// Resolves leaf ids to predicates and action bindings. Lookup uses folded
/// names, so "Has sword" and "has sword" bind to the same entry.
template <class State, class Command>
class Bindings {
 public:
  using ConditionFn = std::function<bool(const State&)>;
  using Action = ActionBinding<State, Command>;

  void bind_condition(std::string_view name, ConditionFn predicate) {
    conditions_[fold_name(name)] = std::move(predicate);
  }
  void bind_action(std::string_view name, Action action) {
    actions_[fold_name(name)] = std::move(action);
  }
  /// Replaces only the controller of an already bound action.
  void set_policy(std::string_view name, std::function<Command(const State&)> policy) {
    action(fold_name(name)).policy = std::move(policy);
  }

  const ConditionFn& condition(const std::string& key) const {
    auto it = conditions_.find(key);
    if (it == conditions_.end() || !it->second) throw UnresolvedId(key);
    return it->second;
  }
  const Action& action(const std::string& key) const {
    auto it = actions_.find(key);
    if (it == actions_.end() || !it->second.status) throw UnresolvedId(key);
    return it->second;
  }
  Action& action(const std::string& key) {
    auto it = actions_.find(key);
    if (it == actions_.end()) throw UnresolvedId(key);
    return it->second;
  }
  bool has_condition(std::string_view name) const { return conditions_.contains(fold_name(name)); }
  bool has_action(std::string_view name) const { return actions_.contains(fold_name(name)); }

 private:
  std::unordered_map<std::string, ConditionFn> conditions_;
  std::unordered_map<std::string, Action> actions_;
};

struct TickResult {
  Status status = Status::Failure;
  /// Display name of the action leaf whose controller the root selected.
  std::optional<std::string> executing_action;
  /// Root to the leaf that decided the root's status.
  std::vector<NodeId> visited_path;
};

namespace detail {

struct Decision {
  Status status;
  const Node* action;
};

template <class State, class Command>
Decision tick_node(const Node& node, const State& state, const Bindings<State, Command>& bindings,
                   std::vector<NodeId>* path) {
  if (path) path->push_back(node.id());
  switch (node.kind()) {
    case NodeKind::Condition:
      return {bindings.condition(node.key())(state) ? Status::Success : Status::Failure, nullptr};
    case NodeKind::Action: {
      const Status s = bindings.action(node.key()).status(state);
      return {s, s == Status::Running ? &node : nullptr};
    }
    case NodeKind::Sequence:
    case NodeKind::Fallback: {
      const auto children = node.children();
      if (children.empty()) throw EmptyTree();
      // Sequence(T1, T2, ...) = Sequence(T1, Sequence(T2, ...)): the first
      // child outside its pass-through region decides; likewise Fallback.
      const Status pass =
          node.kind() == NodeKind::Sequence ? Status::Success : Status::Failure;
      const std::size_t mark = path ? path->size() : 0;
      for (std::size_t i = 0; i < children.size(); ++i) {
        Decision d = tick_node(children[i], state, bindings, path);
        if (d.status != pass || i + 1 == children.size()) return d;
        if (path) path->resize(mark);
      }
      break;
    }
  }
  throw EmptyTree();
}

}  // namespace detail

template <class State, class Command>
TickResult tick(const Node& root, const State& state, const Bindings<State, Command>& bindings) {
  TickResult result;
  const detail::Decision d = detail::tick_node(root, state, bindings, &result.visited_path);
  result.status = d.status;
  if (d.action) result.executing_action = d.action->name();
  return result;
}

/// Tick without path bookkeeping; returns the selected action leaf (or null).
template <class State, class Command>
std::pair<Status, const Node*> tick_fast(const Node& root, const State& state,
                                         const Bindings<State, Command>& bindings) {
  const detail::Decision d = detail::tick_node(root, state, bindings, nullptr);
  return {d.status, d.action};
}

/// Partition of a finite state list by tick status; holds indices.
struct Regions {
  std::vector<std::size_t> running;
  std::vector<std::size_t> success;
  std::vector<std::size_t> failure;
};

template <class State, class Command>
Regions regions(const Node& root, const std::vector<State>& states,
                const Bindings<State, Command>& bindings) {
  Regions out;
  for (std::size_t i = 0; i < states.size(); ++i) {
    switch (tick_fast(root, states[i], bindings).first) {
      case Status::Running: out.running.push_back(i); break;
      case Status::Success: out.success.push_back(i); break;
      case Status::Failure: out.failure.push_back(i); break;
    }
  }
  return out;
}

/// Checks every leaf of the tree resolves; throws UnresolvedId otherwise.
template <class State, class Command>
void check_resolved(const Node& node, const Bindings<State, Command>& bindings) {
  if (node.kind() == NodeKind::Condition) (void)bindings.condition(node.key());
  if (node.kind() == NodeKind::Action) (void)bindings.action(node.key());
  for (const Node& child : node.children()) check_resolved(child, bindings);
}

}  // namespace accbt::bt
