#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "accbt/bt/node.hpp"
#include "accbt/chain/action_spec.hpp"

namespace accbt::chain {

/// The tree does not have the Fallback(guard, Sequence(..., action), ...)
/// shape produced by backchain.
class NotBackchained : public CompileError {
 public:
  using CompileError::CompileError;
};

/// Active constraint conditions per action, in tree preorder of the actions.
class AccTable {
 public:
  struct Entry {
    std::string action;
    std::vector<std::string> conditions;
  };

  void set(std::string action, std::vector<std::string> conditions);
  /// Case-folded lookup; nullptr if the action has no entry.
  const std::vector<std::string>* find(std::string_view action) const;
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  friend bool operator==(const AccTable& a, const AccTable& b);

 private:
  std::vector<Entry> entries_;
};

struct AccEntryEq {
  bool operator()(const AccTable::Entry& a, const AccTable::Entry& b) const {
    return a.action == b.action && a.conditions == b.conditions;
  }
};

/// Derives ACC(A) for every action leaf: walking root to A, each Sequence
/// ancestor contributes the success requirement of every left sibling (the
/// guard of a PPA subtree, or a bare condition). Fallback ancestors
/// contribute nothing. Conditions of A's own enclosing Sequence, A's declared
/// preconditions and A's postcondition are excluded. An action occurring more
/// than once gets the intersection over its occurrences.
AccTable derive_acc(const bt::Node& tree, const std::vector<ActionSpec>& specs);

/// {"<action>": ["<condition>", ...], ...}, key order as in the table.
nlohmann::ordered_json acc_to_json(const AccTable& table);
AccTable acc_from_json(const nlohmann::ordered_json& j);

}  // namespace accbt::chain
