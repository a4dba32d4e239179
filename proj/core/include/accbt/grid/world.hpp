#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace accbt::grid {

struct Pos {
  int x = 0;
  int y = 0;
  friend bool operator==(const Pos&, const Pos&) = default;
  friend auto operator<=>(const Pos&, const Pos&) = default;
};

inline int chebyshev(Pos a, Pos b) { return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y)); }
inline int manhattan(Pos a, Pos b) { return std::abs(a.x - b.x) + std::abs(a.y - b.y); }

/// Inclusive rectangle of cells.
struct Box {
  int x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  bool contains(Pos p) const { return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1; }
  friend bool operator==(const Box&, const Box&) = default;
};

/// North is -y, east is +x.
enum class PrimitiveAction : std::uint8_t { MoveN, MoveS, MoveE, MoveW, Attack, Eat, PickUp, Craft, Wait };

inline constexpr std::array<PrimitiveAction, 9> kAllActions = {
    PrimitiveAction::MoveN, PrimitiveAction::MoveS, PrimitiveAction::MoveE,
    PrimitiveAction::MoveW, PrimitiveAction::Attack, PrimitiveAction::Eat,
    PrimitiveAction::PickUp, PrimitiveAction::Craft, PrimitiveAction::Wait};

std::string_view to_string(PrimitiveAction action);
std::optional<PrimitiveAction> parse_action(std::string_view text);
/// Offset of a move action; (0,0) for non-moves.
Pos move_delta(PrimitiveAction action);

class WorldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Spawn geometry and starting inventory of one evaluation scenario.
struct ScenarioLayout {
  std::vector<Pos> fire;
  Box agent_spawn;
  Box hostile_spawn;
  int hostile_distance = 2;  ///< exact Chebyshev distance agent-hostile at spawn
  Box cow_spawn;
  Box cow_roam;
  bool hungry = false;
  bool sword = true;
  int food = 0;
  bool materials = false;
  Pos crafting_table;
  std::optional<Pos> apple;
};

/// Environment constants. None of these come from a reference environment;
/// they are chosen so the scenario contrasts (cheap fire fix versus costly
/// fight) show up on a 12x12 grid.
struct WorldConfig {
  int width = 12;
  int height = 12;
  int agent_max_hp = 20;
  int hostile_max_hp = 6;
  int agent_attack_damage = 2;
  int hostile_attack_damage = 1;
  int hostile_aggro_radius = 3;
  int hostile_deaggro_radius = 6;
  int safe_hostile_radius = 3;
  int cow_sight_radius = 6;
  int close_radius = 1;
  double sword_break_prob = 0.01;
  double cow_move_prob = 0.5;
  int fire_damage = 2;
  /// A hostile hit pushes the agent one cell away from the hostile.
  double knockback_prob = 0.5;
  std::array<ScenarioLayout, 2> scenarios = default_layouts();

  static std::array<ScenarioLayout, 2> default_layouts();
};

struct AgentState {
  Pos pos;
  int hp = 20;
  bool hungry = false;
  bool alive = true;
  friend bool operator==(const AgentState&, const AgentState&) = default;
};

struct Inventory {
  int food = 0;
  bool sword = false;
  bool materials = false;
  friend bool operator==(const Inventory&, const Inventory&) = default;
};

struct CowState {
  Pos pos;
  bool alive = true;
  friend bool operator==(const CowState&, const CowState&) = default;
};

struct HostileState {
  Pos pos;
  int hp = 6;
  bool alive = true;
  bool aggro = false;
  friend bool operator==(const HostileState&, const HostileState&) = default;
};

struct AppleState {
  Pos pos;
  bool present = false;
  friend bool operator==(const AppleState&, const AppleState&) = default;
};

/// Full MDP state. Fire cells and the cow's roaming box are fixed for a
/// mission; everything else evolves through step().
struct WorldState {
  int width = 12;
  int height = 12;
  std::vector<Pos> fire_cells;  ///< sorted, unique
  Box cow_roam;
  AgentState agent;
  Inventory inventory;
  CowState cow;
  HostileState hostile;
  Pos crafting_table;
  AppleState apple;
  std::uint64_t t = 0;

  bool in_bounds(Pos p) const { return p.x >= 0 && p.y >= 0 && p.x < width && p.y < height; }
  bool on_fire(Pos p) const;
  /// Nearest fire cell by Chebyshev, then Manhattan distance, then position.
  std::optional<Pos> nearest_fire(Pos from) const;

  friend bool operator==(const WorldState&, const WorldState&) = default;
};

/// FNV-1a digest of every state field.
std::uint64_t digest(const WorldState& state);

}  // namespace accbt::grid
