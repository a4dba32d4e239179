#include "accbt/grid/conditions.hpp"

#include "accbt/names.hpp"

namespace accbt::grid {

namespace {

constexpr std::array<std::string_view, kConditionCount> kNames = {
    "Safe from fire", "Safe from hostiles", "Not hungry",   "Has food",
    "Is close to cow", "Can see cow",       "Is close to apple", "Has sword",
    "Has materials",  "Has crafting table",
};

}  // namespace

std::string_view condition_name(Condition c) { return kNames[static_cast<std::size_t>(c)]; }

std::optional<Condition> find_condition(std::string_view name) {
  const std::string key = fold_name(name);
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (fold_name(kNames[i]) == key) return static_cast<Condition>(i);
  }
  // Table-style shorthand used by some action lists.
  if (key == "close to cow") return Condition::IsCloseToCow;
  return std::nullopt;
}

bool holds(Condition c, const WorldState& s, const WorldConfig& cfg) {
  switch (c) {
    case Condition::SafeFromFire: return !s.on_fire(s.agent.pos);
    case Condition::SafeFromHostiles:
      return !s.hostile.alive || chebyshev(s.agent.pos, s.hostile.pos) > cfg.safe_hostile_radius;
    case Condition::NotHungry: return !s.agent.hungry;
    case Condition::HasFood: return s.inventory.food >= 1;
    case Condition::IsCloseToCow:
      return s.cow.alive && chebyshev(s.agent.pos, s.cow.pos) <= cfg.close_radius;
    case Condition::CanSeeCow:
      return s.cow.alive && chebyshev(s.agent.pos, s.cow.pos) <= cfg.cow_sight_radius;
    case Condition::IsCloseToApple:
      return s.apple.present && chebyshev(s.agent.pos, s.apple.pos) <= cfg.close_radius;
    case Condition::HasSword: return s.inventory.sword;
    case Condition::HasMaterials: return s.inventory.materials;
    case Condition::HasCraftingTable:
      return chebyshev(s.agent.pos, s.crafting_table) <= cfg.close_radius;
  }
  return false;
}

bool condition(std::string_view name, const WorldState& state, const WorldConfig& config) {
  const auto c = find_condition(name);
  if (!c) throw UnknownCondition(std::string(name));
  return holds(*c, state, config);
}

}  // namespace accbt::grid
