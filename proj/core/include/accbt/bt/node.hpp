#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace accbt::bt {

enum class Status : std::uint8_t { Running, Success, Failure };

std::string_view to_string(Status status);

enum class NodeKind : std::uint8_t { Sequence, Fallback, Condition, Action };

std::string_view to_string(NodeKind kind);

enum class ImplKind : std::uint8_t { Scripted, Learned };

std::string_view to_string(ImplKind impl);
ImplKind parse_impl_kind(std::string_view text);

using NodeId = std::uint32_t;

class BtError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A composite was built (or ticked) with no children.
class EmptyTree : public BtError {
 public:
  EmptyTree() : BtError("composite node has no children") {}
};

/// A leaf names a condition or action that has no binding.
class UnresolvedId : public BtError {
 public:
  explicit UnresolvedId(std::string id)
      : BtError("unresolved leaf id: " + id), id_(std::move(id)) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

/// Behavior tree node held by value. Composites own their children.
///
/// Leaves carry a display name plus a folded lookup key (see fold_name); the
/// key is what bindings resolve against. Node ids are assigned in preorder by
/// assign_preorder_ids and are unique within a tree.
class Node {
 public:
  static Node sequence(std::vector<Node> children);
  static Node fallback(std::vector<Node> children);
  static Node condition(std::string name);
  static Node action(std::string name, ImplKind impl = ImplKind::Scripted);

  NodeKind kind() const noexcept { return kind_; }
  bool is_composite() const noexcept {
    return kind_ == NodeKind::Sequence || kind_ == NodeKind::Fallback;
  }
  bool is_leaf() const noexcept { return !is_composite(); }

  const std::string& name() const noexcept { return name_; }
  const std::string& key() const noexcept { return key_; }
  ImplKind impl() const noexcept { return impl_; }
  NodeId id() const noexcept { return id_; }
  void set_id(NodeId id) noexcept { id_ = id; }

  std::span<const Node> children() const noexcept { return children_; }
  std::vector<Node>& mutable_children() noexcept { return children_; }

  friend bool operator==(const Node& a, const Node& b);

 private:
  Node(NodeKind kind, std::string name, ImplKind impl, std::vector<Node> children);

  NodeKind kind_;
  std::string name_;
  std::string key_;
  ImplKind impl_ = ImplKind::Scripted;
  NodeId id_ = 0;
  std::vector<Node> children_;
};

/// Numbers every node in preorder starting at 0; returns the node count.
std::size_t assign_preorder_ids(Node& root);

std::size_t count_nodes(const Node& root);

/// Throws BtError if two nodes share an id, EmptyTree on an empty composite.
void validate(const Node& root);

/// Finds a node by id, nullptr if absent.
const Node* find_node(const Node& root, NodeId id);

/// Distinct condition leaves in preorder of first occurrence (display names).
std::vector<std::string> condition_names(const Node& root);

/// Action leaves in preorder.
std::vector<const Node*> action_leaves(const Node& root);

}  // namespace accbt::bt
