#include "accbt/chain/dot.hpp"

#include <sstream>
#include <unordered_set>

#include "accbt/names.hpp"

namespace accbt::chain {

namespace {

std::string quoted(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

struct Style {
  std::string highlight_key;
  std::string post_key;
  std::unordered_set<std::string> acc_keys;
};

void emit(const bt::Node& node, const Style& style, std::ostringstream& out) {
  out << "  n" << node.id() << " [";
  switch (node.kind()) {
    case bt::NodeKind::Sequence: out << "shape=box, label=\"->\""; break;
    case bt::NodeKind::Fallback: out << "shape=box, label=\"?\""; break;
    case bt::NodeKind::Condition:
      out << "shape=ellipse, label=" << quoted(node.name());
      if (style.acc_keys.contains(node.key())) {
        out << ", style=filled, fillcolor=palegreen, class=acc";
      } else if (!style.post_key.empty() && node.key() == style.post_key) {
        out << ", peripheries=2, color=red";
      }
      break;
    case bt::NodeKind::Action:
      out << "shape=box, style=\"rounded";
      if (node.key() == style.highlight_key) {
        out << ",filled\", fillcolor=yellow, peripheries=2";
      } else {
        out << "\"";
      }
      out << ", label=" << quoted(node.name());
      break;
  }
  out << "];\n";
  for (const auto& child : node.children()) {
    out << "  n" << node.id() << " -> n" << child.id() << ";\n";
  }
  for (const auto& child : node.children()) emit(child, style, out);
}

}  // namespace

std::string export_dot(const bt::Node& tree, const AccTable& acc,
                       const std::optional<std::string>& highlight,
                       const std::vector<ActionSpec>& specs) {
  Style style;
  if (highlight) {
    style.highlight_key = fold_name(*highlight);
    if (const auto* conditions = acc.find(*highlight)) {
      for (const auto& c : *conditions) style.acc_keys.insert(fold_name(c));
    }
    if (const ActionSpec* spec = find_action(specs, *highlight)) {
      style.post_key = fold_name(spec->postcondition);
    }
  }
  std::ostringstream out;
  out << "digraph behavior_tree {\n";
  out << "  node [fontname=\"Helvetica\"];\n";
  emit(tree, style, out);
  out << "}\n";
  return out.str();
}

}  // namespace accbt::chain
