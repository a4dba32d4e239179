#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "accbt/bt/node.hpp"

namespace accbt::chain {

struct ActionSpec {
  std::string name;
  std::vector<std::string> preconditions;  ///< order defines the Sequence order
  std::string postcondition;
  bt::ImplKind impl = bt::ImplKind::Scripted;

  friend bool operator==(const ActionSpec&, const ActionSpec&) = default;
};

using GoalList = std::vector<std::string>;

struct SpecFile {
  GoalList goals;
  std::vector<ActionSpec> actions;
};

class CompileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public CompileError {
 public:
  SyntaxError(std::size_t line, std::string expected)
      : CompileError("line " + std::to_string(line) + ": expected " + expected),
        line_(line),
        expected_(std::move(expected)) {}
  std::size_t line() const noexcept { return line_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::string expected_;
};

class DuplicateAction : public CompileError {
 public:
  DuplicateAction(std::size_t line, const std::string& name)
      : CompileError("line " + std::to_string(line) + ": duplicate action \"" + name + "\""),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class EmptyGoalList : public CompileError {
 public:
  EmptyGoalList() : CompileError("spec declares no goal") {}
};

/// Parses the action DSL:
///
///     # comment
///     goal "Safe from fire"
///     action "Kill Cow" { pre: ["Has sword", "Is close to cow"]; post: "Has food"; impl: scripted }
///
/// Declaration order of goals, actions and preconditions is preserved. A
/// condition keeps the spelling of its first occurrence; later spellings that
/// fold to the same key are normalised to it.
SpecFile parse_spec(std::string_view text);

/// Case-folded lookup of an action by name; nullptr if absent.
const ActionSpec* find_action(const std::vector<ActionSpec>& actions, std::string_view name);

}  // namespace accbt::chain
