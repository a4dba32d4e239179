#include "accbt/grid/scripted.hpp"

#include <limits>
#include <vector>

#include "accbt/names.hpp"

namespace accbt::grid {

namespace {

bool free_for_agent(const WorldState& s, Pos p) {
  return s.in_bounds(p) && !(s.cow.alive && s.cow.pos == p) &&
         !(s.hostile.alive && s.hostile.pos == p);
}

constexpr PrimitiveAction kMoves[] = {PrimitiveAction::MoveN, PrimitiveAction::MoveS,
                                      PrimitiveAction::MoveE, PrimitiveAction::MoveW};

Pos shifted(Pos p, PrimitiveAction a) {
  const Pos d = move_delta(a);
  return {p.x + d.x, p.y + d.y};
}

int fire_around(const WorldState& s, Pos p) {
  int n = 0;
  for (Pos f : s.fire_cells) n += chebyshev(f, p) <= 1;
  return n;
}

PrimitiveAction escape_fire(const WorldState& s) {
  if (!s.on_fire(s.agent.pos)) return PrimitiveAction::Wait;
  std::optional<PrimitiveAction> best;
  int best_score = std::numeric_limits<int>::max();
  for (PrimitiveAction a : kMoves) {
    const Pos p = shifted(s.agent.pos, a);
    if (!free_for_agent(s, p) || s.on_fire(p)) continue;
    const int score = fire_around(s, p);
    if (score < best_score) {
      best_score = score;
      best = a;
    }
  }
  if (best) return *best;
  // Surrounded by fire: head for the closest non-fire cell.
  std::optional<Pos> target;
  for (int y = 0; y < s.height; ++y) {
    for (int x = 0; x < s.width; ++x) {
      const Pos p{x, y};
      if (s.on_fire(p) || !free_for_agent(s, p)) continue;
      if (!target || manhattan(s.agent.pos, p) < manhattan(s.agent.pos, *target)) target = p;
    }
  }
  return target ? greedy_step(s, s.agent.pos, *target) : PrimitiveAction::Wait;
}

// Cells of a square spiral around the grid centre (E1 S1 W2 N2 E3 S3 ...),
// restricted to the grid.
std::vector<Pos> sweep_path(const WorldState& s) {
  std::vector<Pos> path;
  Pos p{s.width / 2, s.height / 2};
  const std::size_t total = static_cast<std::size_t>(s.width) * static_cast<std::size_t>(s.height);
  path.push_back(p);
  constexpr PrimitiveAction kLegs[] = {PrimitiveAction::MoveE, PrimitiveAction::MoveS,
                                       PrimitiveAction::MoveW, PrimitiveAction::MoveN};
  for (int leg = 0; path.size() < total; ++leg) {
    const int length = leg / 2 + 1;
    for (int i = 0; i < length; ++i) {
      p = shifted(p, kLegs[leg % 4]);
      if (s.in_bounds(p)) path.push_back(p);
    }
  }
  return path;
}

PrimitiveAction search_cow(const WorldState& s) {
  // The waypoint advances one spiral cell per tick of the world clock, so the
  // sweep needs no memory beyond t.
  const std::vector<Pos> path = sweep_path(s);
  const Pos waypoint = path[s.t % path.size()];
  if (waypoint == s.agent.pos) return PrimitiveAction::Wait;
  return greedy_step(s, s.agent.pos, waypoint);
}

constexpr std::string_view kScripted[] = {"escape from fire", "search for cow", "chase cow",
                                          "defeat hostile",   "kill cow",       "eat",
                                          "pick apple",       "craft sword"};

}  // namespace

bool has_scripted_policy(std::string_view action) {
  const std::string key = fold_name(action);
  for (std::string_view k : kScripted) {
    if (k == key) return true;
  }
  return false;
}

PrimitiveAction greedy_step(const WorldState& s, Pos from, Pos to) {
  const int dx = to.x - from.x;
  const int dy = to.y - from.y;
  if (dx == 0 && dy == 0) return PrimitiveAction::Wait;
  const PrimitiveAction along_x = dx > 0 ? PrimitiveAction::MoveE : PrimitiveAction::MoveW;
  const PrimitiveAction along_y = dy > 0 ? PrimitiveAction::MoveS : PrimitiveAction::MoveN;
  const bool x_first = std::abs(dx) >= std::abs(dy);
  const PrimitiveAction first = x_first ? along_x : along_y;
  const PrimitiveAction second = x_first ? along_y : along_x;
  const bool second_useful = x_first ? dy != 0 : dx != 0;
  if (free_for_agent(s, shifted(from, first))) return first;
  if (second_useful && free_for_agent(s, shifted(from, second))) return second;
  return first;
}

PrimitiveAction scripted_policy(std::string_view action, const WorldState& s,
                                const WorldConfig& config) {
  (void)config;
  const std::string key = fold_name(action);
  if (key == "escape from fire") return escape_fire(s);
  if (key == "search for cow") return search_cow(s);
  if (key == "chase cow") {
    return s.cow.alive ? greedy_step(s, s.agent.pos, s.cow.pos) : PrimitiveAction::Wait;
  }
  if (key == "defeat hostile") {
    if (!s.hostile.alive) return PrimitiveAction::Wait;
    if (chebyshev(s.agent.pos, s.hostile.pos) <= 1) return PrimitiveAction::Attack;
    return greedy_step(s, s.agent.pos, s.hostile.pos);
  }
  if (key == "kill cow") return PrimitiveAction::Attack;
  if (key == "eat") return PrimitiveAction::Eat;
  if (key == "pick apple") return PrimitiveAction::PickUp;
  if (key == "craft sword") return PrimitiveAction::Craft;
  throw UnknownAction(std::string(action));
}

}  // namespace accbt::grid
