#pragma once

#include <functional>

#include "accbt/bt/tick.hpp"
#include "accbt/chain/action_spec.hpp"
#include "accbt/grid/world.hpp"

namespace accbt::grid {

using AgentBindings = bt::Bindings<WorldState, PrimitiveAction>;
using Policy = std::function<PrimitiveAction(const WorldState&)>;

/// Binds every condition named in `spec` to its gridworld predicate and every
/// action to its scripted controller. An action's status is Success when its
/// postcondition holds, Failure when a precondition is false, and Running
/// otherwise. Throws UnknownCondition or UnknownAction for names the world
/// does not provide. `config` must outlive the bindings.
AgentBindings bind_agent(const chain::SpecFile& spec, const WorldConfig& config);

}  // namespace accbt::grid
