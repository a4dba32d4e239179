#include "accbt/rl/features.hpp"

#include <algorithm>
#include <array>

#include "accbt/grid/scripted.hpp"
#include "accbt/names.hpp"

namespace accbt::rl {

namespace {

using grid::PrimitiveAction;

constexpr std::array<PrimitiveAction, 5> kChaseActions = {
    PrimitiveAction::MoveN, PrimitiveAction::MoveS, PrimitiveAction::MoveE,
    PrimitiveAction::MoveW, PrimitiveAction::Wait};

constexpr std::array<PrimitiveAction, 6> kFightActions = {
    PrimitiveAction::MoveN, PrimitiveAction::MoveS,  PrimitiveAction::MoveE,
    PrimitiveAction::MoveW, PrimitiveAction::Attack, PrimitiveAction::Wait};

// Offset (to - from) clipped to [-r, r] per axis, as an index in [0, (2r+1)^2).
std::uint32_t offset_index(grid::Pos from, grid::Pos to, int r) {
  const int dx = std::clamp(to.x - from.x, -r, r) + r;
  const int dy = std::clamp(to.y - from.y, -r, r) + r;
  return static_cast<std::uint32_t>(dy * (2 * r + 1) + dx);
}

constexpr std::uint32_t cells(int r) { return static_cast<std::uint32_t>((2 * r + 1) * (2 * r + 1)); }

constexpr int kCowR = 6;
constexpr int kHostileR = 4;
constexpr int kFireR = 2;

std::uint32_t fire_index(const grid::WorldState& s) {
  const auto f = s.nearest_fire(s.agent.pos);
  return f ? offset_index(s.agent.pos, *f, kFireR) : cells(kFireR);
}

// Chase cow sees the hostile only within kHostileR, then "far", then "dead".
std::uint32_t chase_hostile_index(const grid::WorldState& s) {
  if (!s.hostile.alive) return cells(kHostileR) + 1;
  if (grid::chebyshev(s.agent.pos, s.hostile.pos) > kHostileR) return cells(kHostileR);
  return offset_index(s.agent.pos, s.hostile.pos, kHostileR);
}

std::uint32_t fight_hostile_index(const grid::WorldState& s) {
  return s.hostile.alive ? offset_index(s.agent.pos, s.hostile.pos, kHostileR) : cells(kHostileR);
}

std::uint32_t hp_bucket(int hp) { return hp <= 2 ? 0 : hp <= 4 ? 1 : 2; }

}  // namespace

FeatureCodec::FeatureCodec(Kind kind) : kind_(kind) {}

FeatureCodec FeatureCodec::for_action(std::string_view action) {
  const std::string key = fold_name(action);
  if (key == "chase cow") return FeatureCodec(Kind::ChaseCow);
  if (key == "defeat hostile") return FeatureCodec(Kind::DefeatHostile);
  throw grid::UnknownAction(std::string(action));
}

FeatureCodec FeatureCodec::by_name(std::string_view name) {
  if (name == "chase_cow") return FeatureCodec(Kind::ChaseCow);
  if (name == "defeat_hostile") return FeatureCodec(Kind::DefeatHostile);
  throw grid::UnknownAction(std::string(name));
}

std::string_view FeatureCodec::name() const noexcept {
  return kind_ == Kind::ChaseCow ? "chase_cow" : "defeat_hostile";
}

std::uint32_t FeatureCodec::state_count() const noexcept {
  if (kind_ == Kind::ChaseCow) {
    return cells(kCowR) * (cells(kHostileR) + 2) * (cells(kFireR) + 1) * 2;
  }
  return (cells(kHostileR) + 1) * (cells(kFireR) + 1) * 3;
}

std::span<const grid::PrimitiveAction> FeatureCodec::actions() const noexcept {
  if (kind_ == Kind::ChaseCow) return kChaseActions;
  return kFightActions;
}

std::size_t FeatureCodec::action_index(grid::PrimitiveAction action) const noexcept {
  const auto a = actions();
  return static_cast<std::size_t>(std::find(a.begin(), a.end(), action) - a.begin());
}

std::uint32_t FeatureCodec::encode(const grid::WorldState& s) const {
  if (kind_ == Kind::ChaseCow) {
    const std::uint32_t cow = s.cow.alive ? offset_index(s.agent.pos, s.cow.pos, kCowR)
                                          : offset_index(s.agent.pos, s.agent.pos, kCowR);
    std::uint32_t index = cow;
    index = index * (cells(kHostileR) + 2) + chase_hostile_index(s);
    index = index * (cells(kFireR) + 1) + fire_index(s);
    index = index * 2 + (s.inventory.sword ? 1U : 0U);
    return index;
  }
  std::uint32_t index = fight_hostile_index(s);
  index = index * (cells(kFireR) + 1) + fire_index(s);
  index = index * 3 + hp_bucket(s.hostile.hp);
  return index;
}

}  // namespace accbt::rl
