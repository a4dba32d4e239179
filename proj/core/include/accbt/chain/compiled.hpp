#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "accbt/bt/node.hpp"
#include "accbt/chain/acc.hpp"
#include "accbt/chain/action_spec.hpp"

namespace accbt::chain {

inline constexpr int kTreeFormatVersion = 1;

/// Everything downstream stages need from a spec file.
struct CompiledSpec {
  SpecFile spec;
  bt::Node tree = bt::Node::condition("?");
  AccTable acc;
  std::vector<std::string> unachievable;
};

/// parse_spec + backchain + derive_acc.
CompiledSpec compile(std::string_view text);

/// tree.json: {"format", "version", "goals", "actions", "root"}.
nlohmann::ordered_json tree_file_json(const CompiledSpec& compiled);

/// Reads tree.json back; ACCs are re-derived from the stored tree.
CompiledSpec compiled_from_tree_file(const nlohmann::json& j);

}  // namespace accbt::chain
