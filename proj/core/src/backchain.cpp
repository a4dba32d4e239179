#include "accbt/chain/backchain.hpp"

#include <deque>
#include <optional>
#include <unordered_set>

#include "accbt/names.hpp"

namespace accbt::chain {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " -> ";
    out += parts[i];
  }
  return out;
}

struct Site {
  bt::Node* leaf = nullptr;
  std::vector<std::string> guards;  // guard names of enclosing PPAs, outermost first
};

// Breadth-first search for the first condition leaf with a Sequence parent
// that some action achieves.
std::optional<Site> next_site(bt::Node& root, const std::vector<ActionSpec>& actions) {
  struct Item {
    bt::Node* node;
    std::vector<std::string> guards;
  };
  std::unordered_set<std::string> achievable;
  for (const auto& a : actions) achievable.insert(fold_name(a.postcondition));

  std::deque<Item> queue;
  queue.push_back({&root, {}});
  while (!queue.empty()) {
    Item item = std::move(queue.front());
    queue.pop_front();
    bt::Node& node = *item.node;
    if (!node.is_composite()) continue;
    std::vector<std::string> guards = item.guards;
    auto& children = node.mutable_children();
    if (node.kind() == bt::NodeKind::Fallback && !children.empty() &&
        children.front().kind() == bt::NodeKind::Condition) {
      guards.push_back(children.front().name());
    }
    for (bt::Node& child : children) {
      if (node.kind() == bt::NodeKind::Sequence && child.kind() == bt::NodeKind::Condition &&
          achievable.contains(child.key())) {
        return Site{&child, guards};
      }
      if (child.is_composite()) queue.push_back({&child, guards});
    }
  }
  return std::nullopt;
}

bt::Node expansion(const bt::Node& condition, const std::vector<ActionSpec>& actions) {
  std::vector<bt::Node> options;
  options.push_back(bt::Node::condition(condition.name()));
  for (const auto& a : actions) {
    if (fold_name(a.postcondition) != condition.key()) continue;
    std::vector<bt::Node> seq;
    for (const auto& pre : a.preconditions) seq.push_back(bt::Node::condition(pre));
    seq.push_back(bt::Node::action(a.name, a.impl));
    options.push_back(bt::Node::sequence(std::move(seq)));
  }
  return bt::Node::fallback(std::move(options));
}

}  // namespace

CyclicDependency::CyclicDependency(std::vector<std::string> path)
    : CompileError("cyclic dependency: " + join(path)), path_(std::move(path)) {}

BackchainResult backchain(const GoalList& goals, const std::vector<ActionSpec>& actions) {
  if (goals.empty()) throw EmptyGoalList();
  std::vector<bt::Node> leaves;
  for (const auto& g : goals) leaves.push_back(bt::Node::condition(g));
  bt::Node root = bt::Node::sequence(std::move(leaves));

  while (auto site = next_site(root, actions)) {
    const std::string& key = site->leaf->key();
    for (std::size_t i = 0; i < site->guards.size(); ++i) {
      if (fold_name(site->guards[i]) == key) {
        std::vector<std::string> path(site->guards.begin() + static_cast<std::ptrdiff_t>(i),
                                      site->guards.end());
        path.push_back(site->leaf->name());
        throw CyclicDependency(std::move(path));
      }
    }
    *site->leaf = expansion(*site->leaf, actions);
  }

  BackchainResult result{std::move(root), {}};
  bt::assign_preorder_ids(result.tree);

  std::unordered_set<std::string> achievable;
  for (const auto& a : actions) achievable.insert(fold_name(a.postcondition));
  std::unordered_set<std::string> noted;
  for (const auto& a : actions) {
    for (const auto& pre : a.preconditions) {
      const std::string k = fold_name(pre);
      if (!achievable.contains(k) && noted.insert(k).second) result.unachievable.push_back(pre);
    }
  }
  return result;
}

}  // namespace accbt::chain
