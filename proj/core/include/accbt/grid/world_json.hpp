#pragma once

#include <nlohmann/json.hpp>

#include "accbt/grid/world.hpp"

namespace accbt::grid {

void to_json(nlohmann::json& j, const Pos& p);
void from_json(const nlohmann::json& j, Pos& p);
void to_json(nlohmann::json& j, const Box& b);
void from_json(const nlohmann::json& j, Box& b);
void to_json(nlohmann::json& j, const ScenarioLayout& l);
void from_json(const nlohmann::json& j, ScenarioLayout& l);

/// Every key is optional on input; missing keys keep their defaults.
void to_json(nlohmann::json& j, const WorldConfig& c);
void from_json(const nlohmann::json& j, WorldConfig& c);

/// State snapshot; round-trips exactly.
void to_json(nlohmann::json& j, const WorldState& s);
void from_json(const nlohmann::json& j, WorldState& s);

}  // namespace accbt::grid
