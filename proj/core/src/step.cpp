#include "accbt/grid/step.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <vector>

namespace accbt::grid {

namespace {

int sign(int v) { return (v > 0) - (v < 0); }

bool blocked_for_agent(const WorldState& s, Pos p) {
  if (!s.in_bounds(p)) return true;
  if (s.cow.alive && s.cow.pos == p) return true;
  if (s.hostile.alive && s.hostile.pos == p) return true;
  return false;
}

void agent_acts(WorldState& s, PrimitiveAction action, Rng& rng, const WorldConfig& cfg) {
  switch (action) {
    case PrimitiveAction::MoveN:
    case PrimitiveAction::MoveS:
    case PrimitiveAction::MoveE:
    case PrimitiveAction::MoveW: {
      const Pos d = move_delta(action);
      const Pos target{s.agent.pos.x + d.x, s.agent.pos.y + d.y};
      if (!blocked_for_agent(s, target)) s.agent.pos = target;
      break;
    }
    case PrimitiveAction::Attack: {
      if (s.hostile.alive && chebyshev(s.agent.pos, s.hostile.pos) <= 1) {
        s.hostile.hp = std::max(0, s.hostile.hp - cfg.agent_attack_damage);
        if (s.hostile.hp == 0) {
          s.hostile.alive = false;
          s.hostile.aggro = false;
        }
      } else if (s.cow.alive && chebyshev(s.agent.pos, s.cow.pos) <= 1) {
        s.cow.alive = false;
        s.inventory.food += 1;
      }
      if (s.inventory.sword && rng.chance(cfg.sword_break_prob)) s.inventory.sword = false;
      break;
    }
    case PrimitiveAction::Eat:
      if (s.inventory.food > 0) {
        s.inventory.food -= 1;
        s.agent.hungry = false;
      }
      break;
    case PrimitiveAction::PickUp:
      if (s.apple.present && chebyshev(s.agent.pos, s.apple.pos) <= 1) {
        s.apple.present = false;
        s.inventory.food += 1;
      }
      break;
    case PrimitiveAction::Craft:
      if (s.inventory.materials && chebyshev(s.agent.pos, s.crafting_table) <= 1) {
        s.inventory.sword = true;
        s.inventory.materials = false;
      }
      break;
    case PrimitiveAction::Wait: break;
  }
}

void cow_moves(WorldState& s, Rng& rng, const WorldConfig& cfg) {
  if (!s.cow.alive || !rng.chance(cfg.cow_move_prob)) return;
  static constexpr PrimitiveAction kDirs[] = {PrimitiveAction::MoveN, PrimitiveAction::MoveS,
                                              PrimitiveAction::MoveE, PrimitiveAction::MoveW};
  const Pos d = move_delta(kDirs[rng.below(4)]);
  const Pos target{s.cow.pos.x + d.x, s.cow.pos.y + d.y};
  if (!s.in_bounds(target) || !s.cow_roam.contains(target) || s.on_fire(target)) return;
  if (target == s.agent.pos || (s.hostile.alive && target == s.hostile.pos)) return;
  s.cow.pos = target;
}

bool hostile_can_enter(const WorldState& s, Pos p) {
  return s.in_bounds(p) && !s.on_fire(p) && p != s.agent.pos && !(s.cow.alive && p == s.cow.pos);
}

constexpr int kUnreachable = std::numeric_limits<int>::max();

// BFS distances from `goal` over fire-free cells, 4-connected. The cow blocks.
std::vector<int> path_distances(const WorldState& s, Pos goal) {
  std::vector<int> dist(static_cast<std::size_t>(s.width * s.height), kUnreachable);
  auto index = [&](Pos p) { return static_cast<std::size_t>(p.y * s.width + p.x); };
  std::vector<Pos> frontier{goal};
  dist[index(goal)] = 0;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const Pos p = frontier[head];
    const Pos next[] = {{p.x, p.y - 1}, {p.x, p.y + 1}, {p.x + 1, p.y}, {p.x - 1, p.y}};
    for (Pos q : next) {
      if (!s.in_bounds(q) || s.on_fire(q) || (s.cow.alive && q == s.cow.pos)) continue;
      if (dist[index(q)] != kUnreachable) continue;
      dist[index(q)] = dist[index(p)] + 1;
      frontier.push_back(q);
    }
  }
  return dist;
}

void hostile_acts(WorldState& s, Rng& rng, const WorldConfig& cfg) {
  if (!s.hostile.alive) return;
  const int dist = chebyshev(s.agent.pos, s.hostile.pos);
  if (dist <= cfg.hostile_aggro_radius) {
    s.hostile.aggro = true;
  } else if (dist > cfg.hostile_deaggro_radius) {
    s.hostile.aggro = false;
  }
  if (!s.hostile.aggro) return;

  if (dist <= 1) {
    s.agent.hp -= cfg.hostile_attack_damage;
    if (rng.chance(cfg.knockback_prob)) {
      const Pos push{s.agent.pos.x + sign(s.agent.pos.x - s.hostile.pos.x),
                     s.agent.pos.y + sign(s.agent.pos.y - s.hostile.pos.y)};
      if (!blocked_for_agent(s, push)) s.agent.pos = push;
    }
    return;
  }

  // Chase along fire-free path distance; ties prefer the larger axis gap,
  // then the smaller one, then N, S, E, W.
  const std::vector<int> dist_to_agent = path_distances(s, s.agent.pos);
  auto at = [&](Pos p) { return dist_to_agent[static_cast<std::size_t>(p.y * s.width + p.x)]; };
  const int dx = s.agent.pos.x - s.hostile.pos.x;
  const int dy = s.agent.pos.y - s.hostile.pos.y;
  const Pos along_x{s.hostile.pos.x + sign(dx), s.hostile.pos.y};
  const Pos along_y{s.hostile.pos.x, s.hostile.pos.y + sign(dy)};
  const bool x_first = std::abs(dx) >= std::abs(dy);
  const Pos order[] = {x_first ? along_x : along_y,
                       x_first ? along_y : along_x,
                       {s.hostile.pos.x, s.hostile.pos.y - 1},
                       {s.hostile.pos.x, s.hostile.pos.y + 1},
                       {s.hostile.pos.x + 1, s.hostile.pos.y},
                       {s.hostile.pos.x - 1, s.hostile.pos.y}};
  std::optional<Pos> best;
  int best_d = at(s.hostile.pos);
  for (Pos p : order) {
    if (p == s.hostile.pos || !hostile_can_enter(s, p)) continue;
    const int d = at(p);
    if (d < best_d) {
      best_d = d;
      best = p;
    }
  }
  if (best) s.hostile.pos = *best;
}

}  // namespace

WorldState step(const WorldState& state, PrimitiveAction action, Rng& rng,
                const WorldConfig& config) {
  if (!state.agent.alive) throw WorldError("step called on a dead agent");
  WorldState s = state;
  agent_acts(s, action, rng, config);
  cow_moves(s, rng, config);
  hostile_acts(s, rng, config);
  if (s.on_fire(s.agent.pos)) s.agent.hp -= config.fire_damage;
  s.agent.hp = std::clamp(s.agent.hp, 0, config.agent_max_hp);
  s.agent.alive = s.agent.hp > 0;
  s.t += 1;
  return s;
}

}  // namespace accbt::grid
