#pragma once

#include <string>
#include <vector>

#include "accbt/bt/node.hpp"
#include "accbt/chain/action_spec.hpp"

namespace accbt::chain {

/// Expanding a condition would place it strictly inside a subtree guarded by
/// the same condition. `path` lists the guard chain from the outer occurrence
/// down to the offending leaf.
class CyclicDependency : public CompileError {
 public:
  explicit CyclicDependency(std::vector<std::string> path);
  const std::vector<std::string>& path() const noexcept { return path_; }

 private:
  std::vector<std::string> path_;
};

struct BackchainResult {
  bt::Node tree;
  /// Preconditions no action achieves; they stay plain condition checks.
  std::vector<std::string> unachievable;
};

/// Builds the backward chained tree: start from Sequence(goals) and, while a
/// condition leaf under a Sequence is the postcondition of some action,
/// replace it by Fallback(C, Sequence(pre(A1)..., A1), Sequence(pre(A2)..., A2), ...)
/// with achieving actions in declaration order. Leaves are expanded
/// outside-in, left to right. Node ids are assigned in preorder.
BackchainResult backchain(const GoalList& goals, const std::vector<ActionSpec>& actions);

}  // namespace accbt::chain
