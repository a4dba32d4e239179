#pragma once

#include <cstdint>

#include "accbt/bt/mission.hpp"
#include "accbt/grid/rng.hpp"
#include "accbt/grid/step.hpp"
#include "accbt/grid/world.hpp"

namespace accbt::grid {

/// A world state plus its random stream, driven one primitive command at a
/// time. Satisfies bt::MissionEnvironment.
class GridEnv {
 public:
  using state_type = WorldState;
  using command_type = PrimitiveAction;

  GridEnv(WorldState state, std::uint64_t seed, const WorldConfig& config)
      : state_(std::move(state)), rng_(seed), config_(&config) {}

  const WorldState& state() const noexcept { return state_; }
  const WorldConfig& config() const noexcept { return *config_; }
  Rng& rng() noexcept { return rng_; }

  void apply(PrimitiveAction command) {
    if (static_cast<std::size_t>(command) >= kAllActions.size()) {
      throw bt::EnvironmentFault("invalid primitive command " +
                                 std::to_string(static_cast<int>(command)));
    }
    if (!state_.agent.alive) throw bt::EnvironmentFault("command issued to a dead agent");
    state_ = step(state_, command, rng_, *config_);
  }

  /// Replaces the world state; the random stream continues.
  void reset(WorldState state) { state_ = std::move(state); }

  bool agent_alive() const noexcept { return state_.agent.alive; }
  std::uint64_t clock() const noexcept { return state_.t; }
  std::uint64_t digest() const { return grid::digest(state_); }

 private:
  WorldState state_;
  Rng rng_;
  const WorldConfig* config_;
};

static_assert(bt::MissionEnvironment<GridEnv>);

}  // namespace accbt::grid
