#pragma once

#include <cstdint>

#include "accbt/grid/world.hpp"

namespace accbt::grid {

class InvalidScenario : public WorldError {
 public:
  explicit InvalidScenario(int id)
      : WorldError("invalid scenario id " + std::to_string(id) + " (expected 1 or 2)") {}
};

/// Starting state of scenario 1 (near a hostile, not hungry) or scenario 2
/// (hungry, hostile further off). Positions are drawn from the layout's spawn
/// boxes with a generator seeded by `seed`; the same (id, seed) always gives
/// the same state.
WorldState make_scenario(int id, std::uint64_t seed, const WorldConfig& config = {});

/// Builds a state from an explicit layout (used by tests and custom setups).
WorldState make_from_layout(const ScenarioLayout& layout, std::uint64_t seed,
                            const WorldConfig& config);

}  // namespace accbt::grid
