#include "accbt/grid/scenario.hpp"

#include <algorithm>
#include <vector>

#include "accbt/grid/rng.hpp"

namespace accbt::grid {

namespace {

std::vector<Pos> band(int x, int y0, int y1) {
  std::vector<Pos> cells;
  for (int y = y0; y <= y1; ++y) cells.push_back({x, y});
  return cells;
}

template <class Pred>
Pos pick(const Box& box, Rng& rng, Pred ok, const char* what) {
  std::vector<Pos> candidates;
  for (int y = box.y0; y <= box.y1; ++y) {
    for (int x = box.x0; x <= box.x1; ++x) {
      if (ok(Pos{x, y})) candidates.push_back({x, y});
    }
  }
  if (candidates.empty()) throw WorldError(std::string("no valid spawn cell for ") + what);
  return candidates[rng.below(candidates.size())];
}

}  // namespace

std::array<ScenarioLayout, 2> WorldConfig::default_layouts() {
  // Scenario 1: the agent spawns with the fire band at its back and the
  // hostile two cells in front of it.
  ScenarioLayout one;
  one.fire = band(5, 2, 9);
  one.agent_spawn = {6, 3, 6, 8};
  one.hostile_spawn = {7, 1, 9, 10};
  one.hostile_distance = 2;
  one.cow_spawn = {1, 3, 3, 8};
  one.cow_roam = {0, 0, 3, 11};
  one.hungry = false;
  one.sword = true;
  one.crafting_table = {0, 11};

  // Scenario 2: hungry agent in the south-east with the cow in sight to the
  // north-west. The hostile waits in the south-west corner, within reach of
  // routes that head west first, and the fire band sits beside it.
  ScenarioLayout two;
  two.fire = band(3, 9, 11);
  for (Pos p : band(4, 9, 11)) two.fire.push_back(p);
  two.fire.push_back({5, 10});
  two.fire.push_back({5, 11});
  two.agent_spawn = {6, 9, 7, 10};
  two.hostile_spawn = {1, 9, 2, 11};
  two.hostile_distance = 5;
  two.cow_spawn = {1, 4, 2, 5};
  two.cow_roam = {1, 4, 2, 5};
  two.hungry = true;
  two.sword = true;
  two.crafting_table = {0, 0};
  return {one, two};
}

WorldState make_from_layout(const ScenarioLayout& layout, std::uint64_t seed,
                            const WorldConfig& config) {
  Rng rng(seed);
  WorldState s;
  s.width = config.width;
  s.height = config.height;
  s.fire_cells = layout.fire;
  std::sort(s.fire_cells.begin(), s.fire_cells.end());
  s.fire_cells.erase(std::unique(s.fire_cells.begin(), s.fire_cells.end()), s.fire_cells.end());
  for (Pos f : s.fire_cells) {
    if (!s.in_bounds(f)) throw WorldError("fire cell out of bounds");
  }
  s.cow_roam = layout.cow_roam;

  auto free = [&](Pos p) { return s.in_bounds(p) && !s.on_fire(p); };
  s.agent.pos = pick(layout.agent_spawn, rng, free, "agent");
  s.agent.hp = config.agent_max_hp;
  s.agent.hungry = layout.hungry;
  s.agent.alive = true;

  s.hostile.pos = pick(
      layout.hostile_spawn, rng,
      [&](Pos p) {
        return free(p) && p != s.agent.pos &&
               chebyshev(p, s.agent.pos) == layout.hostile_distance;
      },
      "hostile");
  s.hostile.hp = config.hostile_max_hp;
  s.hostile.alive = config.hostile_max_hp > 0;
  s.hostile.aggro = false;

  s.cow.pos = pick(
      layout.cow_spawn, rng,
      [&](Pos p) { return free(p) && p != s.agent.pos && p != s.hostile.pos; }, "cow");
  s.cow.alive = true;

  s.inventory.food = layout.food;
  s.inventory.sword = layout.sword;
  s.inventory.materials = layout.materials;
  s.crafting_table = layout.crafting_table;
  if (layout.apple) {
    s.apple = {*layout.apple, true};
  } else {
    s.apple = {{0, 0}, false};
  }
  s.t = 0;
  return s;
}

WorldState make_scenario(int id, std::uint64_t seed, const WorldConfig& config) {
  if (id != 1 && id != 2) throw InvalidScenario(id);
  return make_from_layout(config.scenarios[static_cast<std::size_t>(id - 1)], seed, config);
}

}  // namespace accbt::grid
