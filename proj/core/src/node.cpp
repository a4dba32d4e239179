#include "accbt/bt/node.hpp"

#include <unordered_set>

#include "accbt/names.hpp"

namespace accbt::bt {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Running: return "Running";
    case Status::Success: return "Success";
    case Status::Failure: return "Failure";
  }
  return "?";
}

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Sequence: return "sequence";
    case NodeKind::Fallback: return "fallback";
    case NodeKind::Condition: return "condition";
    case NodeKind::Action: return "action";
  }
  return "?";
}

std::string_view to_string(ImplKind impl) {
  return impl == ImplKind::Learned ? "learned" : "scripted";
}

ImplKind parse_impl_kind(std::string_view text) {
  if (text == "scripted") return ImplKind::Scripted;
  if (text == "learned") return ImplKind::Learned;
  throw BtError("unknown impl kind: " + std::string(text));
}

Node::Node(NodeKind kind, std::string name, ImplKind impl, std::vector<Node> children)
    : kind_(kind),
      name_(trim(name)),
      key_(fold_name(name)),
      impl_(impl),
      children_(std::move(children)) {}

Node Node::sequence(std::vector<Node> children) {
  if (children.empty()) throw EmptyTree();
  return Node(NodeKind::Sequence, {}, ImplKind::Scripted, std::move(children));
}

Node Node::fallback(std::vector<Node> children) {
  if (children.empty()) throw EmptyTree();
  return Node(NodeKind::Fallback, {}, ImplKind::Scripted, std::move(children));
}

Node Node::condition(std::string name) {
  return Node(NodeKind::Condition, std::move(name), ImplKind::Scripted, {});
}

Node Node::action(std::string name, ImplKind impl) {
  return Node(NodeKind::Action, std::move(name), impl, {});
}

bool operator==(const Node& a, const Node& b) {
  return a.kind_ == b.kind_ && a.name_ == b.name_ && a.impl_ == b.impl_ && a.id_ == b.id_ &&
         a.children_ == b.children_;
}

namespace {

void number(Node& node, NodeId& next) {
  node.set_id(next++);
  for (Node& child : node.mutable_children()) number(child, next);
}

void collect_ids(const Node& node, std::unordered_set<NodeId>& seen) {
  if (node.is_composite() && node.children().empty()) throw EmptyTree();
  if (!seen.insert(node.id()).second) {
    throw BtError("duplicate node id " + std::to_string(node.id()));
  }
  for (const Node& child : node.children()) collect_ids(child, seen);
}

}  // namespace

std::size_t assign_preorder_ids(Node& root) {
  NodeId next = 0;
  number(root, next);
  return next;
}

std::size_t count_nodes(const Node& root) {
  std::size_t n = 1;
  for (const Node& child : root.children()) n += count_nodes(child);
  return n;
}

void validate(const Node& root) {
  std::unordered_set<NodeId> seen;
  collect_ids(root, seen);
}

const Node* find_node(const Node& root, NodeId id) {
  if (root.id() == id) return &root;
  for (const Node& child : root.children()) {
    if (const Node* hit = find_node(child, id)) return hit;
  }
  return nullptr;
}

namespace {

void walk_conditions(const Node& node, std::unordered_set<std::string>& seen,
                     std::vector<std::string>& out) {
  if (node.kind() == NodeKind::Condition) {
    if (seen.insert(node.key()).second) out.push_back(node.name());
    return;
  }
  for (const Node& child : node.children()) walk_conditions(child, seen, out);
}

void walk_actions(const Node& node, std::vector<const Node*>& out) {
  if (node.kind() == NodeKind::Action) out.push_back(&node);
  for (const Node& child : node.children()) walk_actions(child, out);
}

}  // namespace

std::vector<std::string> condition_names(const Node& root) {
  std::unordered_set<std::string> seen;
  std::vector<std::string> out;
  walk_conditions(root, seen, out);
  return out;
}

std::vector<const Node*> action_leaves(const Node& root) {
  std::vector<const Node*> out;
  walk_actions(root, out);
  return out;
}

}  // namespace accbt::bt
