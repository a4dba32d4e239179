#include "accbt/bt/tree_json.hpp"

namespace accbt::bt {

nlohmann::json to_json(const Node& node) {
  nlohmann::json j;
  j["kind"] = std::string(to_string(node.kind()));
  j["id"] = node.id();
  if (node.is_composite()) {
    nlohmann::json children = nlohmann::json::array();
    for (const Node& child : node.children()) children.push_back(to_json(child));
    j["children"] = std::move(children);
  } else {
    j["name"] = node.name();
    if (node.kind() == NodeKind::Action) j["impl"] = std::string(to_string(node.impl()));
  }
  return j;
}

namespace {

Node parse(const nlohmann::json& j, bool& has_ids) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw BtError("tree json: node must be an object with a string 'kind'");
  }
  const std::string kind = j["kind"].get<std::string>();
  Node node = [&] {
    if (kind == "sequence" || kind == "fallback") {
      if (!j.contains("children") || !j["children"].is_array()) {
        throw BtError("tree json: composite without 'children' array");
      }
      std::vector<Node> children;
      for (const auto& c : j["children"]) children.push_back(parse(c, has_ids));
      return kind == "sequence" ? Node::sequence(std::move(children))
                                : Node::fallback(std::move(children));
    }
    if (!j.contains("name") || !j["name"].is_string()) {
      throw BtError("tree json: leaf without string 'name'");
    }
    if (kind == "condition") return Node::condition(j["name"].get<std::string>());
    if (kind == "action") {
      const ImplKind impl =
          j.contains("impl") ? parse_impl_kind(j["impl"].get<std::string>()) : ImplKind::Scripted;
      return Node::action(j["name"].get<std::string>(), impl);
    }
    throw BtError("tree json: unknown node kind '" + kind + "'");
  }();
  if (j.contains("id")) {
    node.set_id(j["id"].get<NodeId>());
  } else {
    has_ids = false;
  }
  return node;
}

}  // namespace

Node node_from_json(const nlohmann::json& j) {
  bool has_ids = true;
  Node root = parse(j, has_ids);
  if (!has_ids) assign_preorder_ids(root);
  validate(root);
  return root;
}

}  // namespace accbt::bt
