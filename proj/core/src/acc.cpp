#include "accbt/chain/acc.hpp"

#include <algorithm>
#include <unordered_set>

#include "accbt/names.hpp"

namespace accbt::chain {

void AccTable::set(std::string action, std::vector<std::string> conditions) {
  const std::string key = fold_name(action);
  for (auto& e : entries_) {
    if (fold_name(e.action) == key) {
      e.conditions = std::move(conditions);
      return;
    }
  }
  entries_.push_back({std::move(action), std::move(conditions)});
}

const std::vector<std::string>* AccTable::find(std::string_view action) const {
  const std::string key = fold_name(action);
  for (const auto& e : entries_) {
    if (fold_name(e.action) == key) return &e.conditions;
  }
  return nullptr;
}

bool operator==(const AccTable& a, const AccTable& b) {
  return std::equal(a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end(),
                    AccEntryEq{});
}

namespace {

using Names = std::vector<std::string>;

std::string requirement(const bt::Node& sibling) {
  if (sibling.kind() == bt::NodeKind::Condition) return sibling.name();
  if (sibling.kind() == bt::NodeKind::Fallback && !sibling.children().empty() &&
      sibling.children().front().kind() == bt::NodeKind::Condition) {
    return sibling.children().front().name();
  }
  throw NotBackchained("node " + std::to_string(sibling.id()) +
                       " precedes an action under a Sequence but is neither a condition nor a "
                       "guarded Fallback");
}

void append_unique(Names& out, const Names& more) {
  for (const auto& n : more) {
    const std::string k = fold_name(n);
    if (std::none_of(out.begin(), out.end(), [&](const auto& x) { return fold_name(x) == k; })) {
      out.push_back(n);
    }
  }
}

bool contains_action(const bt::Node& node) {
  if (node.kind() == bt::NodeKind::Action) return true;
  return std::any_of(node.children().begin(), node.children().end(), contains_action);
}

struct Occurrence {
  const bt::Node* leaf;
  Names acc;
};

void walk(const bt::Node& node, const Names& outer, const Names& immediate,
          std::vector<Occurrence>& out) {
  switch (node.kind()) {
    case bt::NodeKind::Condition: return;
    case bt::NodeKind::Action: out.push_back({&node, outer}); return;
    case bt::NodeKind::Fallback: {
      Names merged = outer;
      append_unique(merged, immediate);
      for (const auto& child : node.children()) walk(child, merged, {}, out);
      return;
    }
    case bt::NodeKind::Sequence: {
      Names merged = outer;
      append_unique(merged, immediate);
      const auto children = node.children();
      std::size_t last_with_action = 0;
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (contains_action(children[i])) last_with_action = i;
      }
      Names left;
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (contains_action(children[i])) walk(children[i], merged, left, out);
        if (i < last_with_action) append_unique(left, {requirement(children[i])});
      }
      return;
    }
  }
}

}  // namespace

AccTable derive_acc(const bt::Node& tree, const std::vector<ActionSpec>& specs) {
  std::vector<Occurrence> occurrences;
  walk(tree, {}, {}, occurrences);

  AccTable table;
  std::vector<std::string> seen;
  for (const auto& occ : occurrences) {
    const std::string key = occ.leaf->key();
    std::unordered_set<std::string> excluded;
    if (const ActionSpec* spec = find_action(specs, occ.leaf->name())) {
      for (const auto& p : spec->preconditions) excluded.insert(fold_name(p));
      excluded.insert(fold_name(spec->postcondition));
    }
    Names acc;
    for (const auto& c : occ.acc) {
      if (!excluded.contains(fold_name(c))) acc.push_back(c);
    }
    if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
      seen.push_back(key);
      table.set(occ.leaf->name(), std::move(acc));
      continue;
    }
    // Repeated action: keep only conditions required at every occurrence.
    const Names* prev = table.find(key);
    Names kept;
    for (const auto& c : *prev) {
      const std::string k = fold_name(c);
      if (std::any_of(acc.begin(), acc.end(), [&](const auto& x) { return fold_name(x) == k; })) {
        kept.push_back(c);
      }
    }
    table.set(occ.leaf->name(), std::move(kept));
  }
  return table;
}

nlohmann::ordered_json acc_to_json(const AccTable& table) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& e : table.entries()) j[e.action] = e.conditions;
  return j;
}

AccTable acc_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object()) throw CompileError("acc json: expected an object");
  AccTable table;
  for (auto it = j.begin(); it != j.end(); ++it) {
    table.set(it.key(), it.value().get<std::vector<std::string>>());
  }
  return table;
}

}  // namespace accbt::chain
