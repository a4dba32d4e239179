#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "accbt/grid/world.hpp"

namespace accbt::grid {

enum class Condition : std::uint8_t {
  SafeFromFire,
  SafeFromHostiles,
  NotHungry,
  HasFood,
  IsCloseToCow,
  CanSeeCow,
  IsCloseToApple,
  HasSword,
  HasMaterials,
  HasCraftingTable,
};

inline constexpr std::size_t kConditionCount = 10;

class UnknownCondition : public WorldError {
 public:
  explicit UnknownCondition(const std::string& name)
      : WorldError("unknown condition: " + name) {}
};

/// Canonical spelling, e.g. "Safe from hostiles".
std::string_view condition_name(Condition c);
/// Case-folded lookup of a registered predicate name.
std::optional<Condition> find_condition(std::string_view name);

bool holds(Condition c, const WorldState& state, const WorldConfig& config);

/// By name; throws UnknownCondition.
bool condition(std::string_view name, const WorldState& state, const WorldConfig& config);

}  // namespace accbt::grid
