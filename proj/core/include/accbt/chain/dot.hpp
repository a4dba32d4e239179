#pragma once

#include <optional>
#include <string>

#include "accbt/bt/node.hpp"
#include "accbt/chain/acc.hpp"

namespace accbt::chain {

/// Graphviz rendering of a tree. With `highlight` set, that action is drawn as
/// a filled double box, its postcondition guards as red double ellipses and
/// every condition in its ACC set as a filled green ellipse.
std::string export_dot(const bt::Node& tree, const AccTable& acc,
                       const std::optional<std::string>& highlight = std::nullopt,
                       const std::vector<ActionSpec>& specs = {});

}  // namespace accbt::chain
