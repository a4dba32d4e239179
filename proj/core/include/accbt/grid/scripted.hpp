#pragma once

#include <string>
#include <string_view>

#include "accbt/grid/world.hpp"

namespace accbt::grid {

class UnknownAction : public WorldError {
 public:
  explicit UnknownAction(const std::string& name) : WorldError("unknown action: " + name) {}
};

/// Hand-written controllers for the action list. Chase cow and Defeat
/// hostile are the baselines the learned controllers replace; both ignore
/// fire, and Chase cow ignores the hostile.
///
///   Escape from fire  step to the free neighbour with the fewest adjacent
///                     fire cells (ties: N, S, E, W)
///   Search for cow    head for the grid centre, then sweep an expanding
///                     square around it
///   Chase cow         greedy step towards the cow
///   Defeat hostile    Attack when adjacent, otherwise greedy approach
///   Kill Cow          Attack
///   Eat / Pick Apple / Craft sword   Eat / PickUp / Craft
PrimitiveAction scripted_policy(std::string_view action, const WorldState& state,
                                const WorldConfig& config);

bool has_scripted_policy(std::string_view action);

/// Greedy 4-connected step that reduces the larger axis gap first; falls back
/// to the other axis when the first cell is blocked. Wait when already there.
PrimitiveAction greedy_step(const WorldState& state, Pos from, Pos to);

}  // namespace accbt::grid
