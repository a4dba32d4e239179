#include "accbt/chain/compiled.hpp"

#include "accbt/bt/tree_json.hpp"
#include "accbt/chain/backchain.hpp"

namespace accbt::chain {

CompiledSpec compile(std::string_view text) {
  CompiledSpec out;
  out.spec = parse_spec(text);
  BackchainResult chained = backchain(out.spec.goals, out.spec.actions);
  out.tree = std::move(chained.tree);
  out.unachievable = std::move(chained.unachievable);
  out.acc = derive_acc(out.tree, out.spec.actions);
  return out;
}

nlohmann::ordered_json tree_file_json(const CompiledSpec& compiled) {
  nlohmann::ordered_json j;
  j["format"] = "accbt-tree";
  j["version"] = kTreeFormatVersion;
  j["goals"] = compiled.spec.goals;
  nlohmann::ordered_json actions = nlohmann::ordered_json::array();
  for (const auto& a : compiled.spec.actions) {
    actions.push_back({{"name", a.name},
                       {"pre", a.preconditions},
                       {"post", a.postcondition},
                       {"impl", std::string(bt::to_string(a.impl))}});
  }
  j["actions"] = std::move(actions);
  j["root"] = nlohmann::ordered_json::parse(bt::to_json(compiled.tree).dump());
  return j;
}

CompiledSpec compiled_from_tree_file(const nlohmann::json& j) {
  if (j.value("format", "") != "accbt-tree") throw CompileError("tree file: wrong format tag");
  if (j.value("version", 0) != kTreeFormatVersion) {
    throw CompileError("tree file: unsupported version " + j.value("version", nlohmann::json()).dump());
  }
  CompiledSpec out;
  out.spec.goals = j.at("goals").get<GoalList>();
  for (const auto& a : j.at("actions")) {
    ActionSpec spec;
    spec.name = a.at("name").get<std::string>();
    spec.preconditions = a.at("pre").get<std::vector<std::string>>();
    spec.postcondition = a.at("post").get<std::string>();
    spec.impl = bt::parse_impl_kind(a.at("impl").get<std::string>());
    out.spec.actions.push_back(std::move(spec));
  }
  out.tree = bt::node_from_json(j.at("root"));
  out.acc = derive_acc(out.tree, out.spec.actions);
  return out;
}

}  // namespace accbt::chain
