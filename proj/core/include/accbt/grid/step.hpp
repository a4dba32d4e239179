#pragma once

#include "accbt/grid/rng.hpp"
#include "accbt/grid/world.hpp"

namespace accbt::grid {

/// One transition x' ~ P_a(x, .). The agent acts first, then the cow and
/// the hostile move, then fire damage is applied and t advances.
///
/// Agent: moves are clipped at walls and blocked by the cow or hostile.
/// Attack hits an adjacent hostile (preferred) or cow; a hit cow dies and
/// yields one food. Each swing with a sword breaks it with
/// `sword_break_prob`. Eat, PickUp and Craft are no-ops when not applicable.
///
/// Hostile: aggroes within `hostile_aggro_radius`, forgets the agent beyond
/// `hostile_deaggro_radius`, chases along the shortest fire-free path and hits when
/// adjacent, knocking the agent back with `knockback_prob`.
///
/// Draw order per step: sword break (if Attack with sword), cow move, cow
/// direction, knockback.
WorldState step(const WorldState& state, PrimitiveAction action, Rng& rng,
                const WorldConfig& config);

}  // namespace accbt::grid
