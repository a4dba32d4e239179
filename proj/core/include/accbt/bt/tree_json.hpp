#pragma once

#include <nlohmann/json.hpp>

#include "accbt/bt/node.hpp"

namespace accbt::bt {

/// {"kind": "sequence"|"fallback", "id": n, "children": [...]} for
/// composites, {"kind": "condition", "id": n, "name": s} and
/// {"kind": "action", "id": n, "name": s, "impl": "scripted"|"learned"} for
/// leaves.
nlohmann::json to_json(const Node& node);

/// Inverse of to_json. Missing ids are assigned in preorder; present ids must
/// be unique. Throws BtError on malformed input, EmptyTree on a composite
/// without children.
Node node_from_json(const nlohmann::json& j);

}  // namespace accbt::bt
