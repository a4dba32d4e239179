#include "accbt/grid/world.hpp"

#include <algorithm>
#include <tuple>

#include "accbt/grid/rng.hpp"

namespace accbt::grid {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string_view to_string(PrimitiveAction action) {
  switch (action) {
    case PrimitiveAction::MoveN: return "MoveN";
    case PrimitiveAction::MoveS: return "MoveS";
    case PrimitiveAction::MoveE: return "MoveE";
    case PrimitiveAction::MoveW: return "MoveW";
    case PrimitiveAction::Attack: return "Attack";
    case PrimitiveAction::Eat: return "Eat";
    case PrimitiveAction::PickUp: return "PickUp";
    case PrimitiveAction::Craft: return "Craft";
    case PrimitiveAction::Wait: return "Wait";
  }
  return "?";
}

std::optional<PrimitiveAction> parse_action(std::string_view text) {
  for (PrimitiveAction a : kAllActions) {
    if (to_string(a) == text) return a;
  }
  return std::nullopt;
}

Pos move_delta(PrimitiveAction action) {
  switch (action) {
    case PrimitiveAction::MoveN: return {0, -1};
    case PrimitiveAction::MoveS: return {0, 1};
    case PrimitiveAction::MoveE: return {1, 0};
    case PrimitiveAction::MoveW: return {-1, 0};
    default: return {0, 0};
  }
}

bool WorldState::on_fire(Pos p) const {
  return std::binary_search(fire_cells.begin(), fire_cells.end(), p);
}

std::optional<Pos> WorldState::nearest_fire(Pos from) const {
  std::optional<Pos> best;
  auto rank = [&](Pos p) { return std::make_tuple(chebyshev(from, p), manhattan(from, p), p); };
  for (Pos f : fire_cells) {
    if (!best || rank(f) < rank(*best)) best = f;
  }
  return best;
}

namespace {

struct Fnv {
  std::uint64_t h = 1469598103934665603ULL;
  void add(std::int64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= static_cast<std::uint64_t>(v >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  }
  void add(Pos p) {
    add(p.x);
    add(p.y);
  }
};

}  // namespace

std::uint64_t digest(const WorldState& s) {
  Fnv f;
  f.add(s.width);
  f.add(s.height);
  f.add(static_cast<std::int64_t>(s.fire_cells.size()));
  for (Pos p : s.fire_cells) f.add(p);
  f.add(s.cow_roam.x0);
  f.add(s.cow_roam.y0);
  f.add(s.cow_roam.x1);
  f.add(s.cow_roam.y1);
  f.add(s.agent.pos);
  f.add(s.agent.hp);
  f.add(s.agent.hungry);
  f.add(s.agent.alive);
  f.add(s.inventory.food);
  f.add(s.inventory.sword);
  f.add(s.inventory.materials);
  f.add(s.cow.pos);
  f.add(s.cow.alive);
  f.add(s.hostile.pos);
  f.add(s.hostile.hp);
  f.add(s.hostile.alive);
  f.add(s.hostile.aggro);
  f.add(s.crafting_table);
  f.add(s.apple.pos);
  f.add(s.apple.present);
  f.add(static_cast<std::int64_t>(s.t));
  return f.h;
}

}  // namespace accbt::grid
