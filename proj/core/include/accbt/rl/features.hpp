#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "accbt/grid/world.hpp"

namespace accbt::rl {

/// Tabular state abstraction for one learned action. Offsets are measured
/// from the agent and clipped per axis.
///
///   chase_cow       cow offset in [-6,6]^2, hostile offset in [-4,4]^2 or
///                   "far" (beyond 4) or "dead", nearest fire offset in
///                   [-2,2]^2 or "none", sword flag; moves and Wait
///   defeat_hostile  hostile offset in [-4,4]^2 or "dead", nearest fire
///                   offset in [-2,2]^2 or "none", hostile hp bucket
///                   {1-2, 3-4, 5-6}; moves, Attack and Wait
class FeatureCodec {
 public:
  enum class Kind : std::uint8_t { ChaseCow, DefeatHostile };

  static constexpr int kVersion = 1;

  explicit FeatureCodec(Kind kind);

  /// Codec for a learned action name; throws grid::UnknownAction.
  static FeatureCodec for_action(std::string_view action);
  /// By codec name ("chase_cow", "defeat_hostile"); throws grid::UnknownAction.
  static FeatureCodec by_name(std::string_view name);

  Kind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept;
  int version() const noexcept { return kVersion; }
  std::uint32_t state_count() const noexcept;
  std::span<const grid::PrimitiveAction> actions() const noexcept;
  std::size_t action_count() const noexcept { return actions().size(); }
  /// Index of `action` in actions(), or action_count() if absent.
  std::size_t action_index(grid::PrimitiveAction action) const noexcept;

  std::uint32_t encode(const grid::WorldState& state) const;

 private:
  Kind kind_;
};

}  // namespace accbt::rl
