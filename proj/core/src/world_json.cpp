#include "accbt/grid/world_json.hpp"

#include <algorithm>

namespace accbt::grid {

void to_json(nlohmann::json& j, const Pos& p) { j = nlohmann::json::array({p.x, p.y}); }

void from_json(const nlohmann::json& j, Pos& p) {
  if (!j.is_array() || j.size() != 2) throw WorldError("position must be [x, y]");
  p.x = j[0].get<int>();
  p.y = j[1].get<int>();
}

void to_json(nlohmann::json& j, const Box& b) { j = nlohmann::json::array({b.x0, b.y0, b.x1, b.y1}); }

void from_json(const nlohmann::json& j, Box& b) {
  if (!j.is_array() || j.size() != 4) throw WorldError("box must be [x0, y0, x1, y1]");
  b = {j[0].get<int>(), j[1].get<int>(), j[2].get<int>(), j[3].get<int>()};
}

void to_json(nlohmann::json& j, const ScenarioLayout& l) {
  j = {{"fire", l.fire},
       {"agent_spawn", l.agent_spawn},
       {"hostile_spawn", l.hostile_spawn},
       {"hostile_distance", l.hostile_distance},
       {"cow_spawn", l.cow_spawn},
       {"cow_roam", l.cow_roam},
       {"hungry", l.hungry},
       {"sword", l.sword},
       {"food", l.food},
       {"materials", l.materials},
       {"crafting_table", l.crafting_table}};
  j["apple"] = l.apple ? nlohmann::json(*l.apple) : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json& j, ScenarioLayout& l) {
  auto opt = [&](const char* key, auto& field) {
    if (j.contains(key)) j.at(key).get_to(field);
  };
  opt("fire", l.fire);
  opt("agent_spawn", l.agent_spawn);
  opt("hostile_spawn", l.hostile_spawn);
  opt("hostile_distance", l.hostile_distance);
  opt("cow_spawn", l.cow_spawn);
  opt("cow_roam", l.cow_roam);
  opt("hungry", l.hungry);
  opt("sword", l.sword);
  opt("food", l.food);
  opt("materials", l.materials);
  opt("crafting_table", l.crafting_table);
  if (j.contains("apple")) {
    if (j["apple"].is_null()) {
      l.apple.reset();
    } else {
      l.apple = j["apple"].get<Pos>();
    }
  }
}

void to_json(nlohmann::json& j, const WorldConfig& c) {
  j = {{"width", c.width},
       {"height", c.height},
       {"agent_max_hp", c.agent_max_hp},
       {"hostile_max_hp", c.hostile_max_hp},
       {"agent_attack_damage", c.agent_attack_damage},
       {"hostile_attack_damage", c.hostile_attack_damage},
       {"hostile_aggro_radius", c.hostile_aggro_radius},
       {"hostile_deaggro_radius", c.hostile_deaggro_radius},
       {"safe_hostile_radius", c.safe_hostile_radius},
       {"cow_sight_radius", c.cow_sight_radius},
       {"close_radius", c.close_radius},
       {"sword_break_prob", c.sword_break_prob},
       {"cow_move_prob", c.cow_move_prob},
       {"fire_damage", c.fire_damage},
       {"knockback_prob", c.knockback_prob},
       {"scenarios", c.scenarios}};
}

void from_json(const nlohmann::json& j, WorldConfig& c) {
  auto opt = [&](const char* key, auto& field) {
    if (j.contains(key)) j.at(key).get_to(field);
  };
  opt("width", c.width);
  opt("height", c.height);
  opt("agent_max_hp", c.agent_max_hp);
  opt("hostile_max_hp", c.hostile_max_hp);
  opt("agent_attack_damage", c.agent_attack_damage);
  opt("hostile_attack_damage", c.hostile_attack_damage);
  opt("hostile_aggro_radius", c.hostile_aggro_radius);
  opt("hostile_deaggro_radius", c.hostile_deaggro_radius);
  opt("safe_hostile_radius", c.safe_hostile_radius);
  opt("cow_sight_radius", c.cow_sight_radius);
  opt("close_radius", c.close_radius);
  opt("sword_break_prob", c.sword_break_prob);
  opt("cow_move_prob", c.cow_move_prob);
  opt("fire_damage", c.fire_damage);
  opt("knockback_prob", c.knockback_prob);
  if (j.contains("scenarios")) {
    const auto& arr = j.at("scenarios");
    if (!arr.is_array() || arr.size() != 2) throw WorldError("config: 'scenarios' needs 2 entries");
    for (std::size_t i = 0; i < 2; ++i) from_json(arr[i], c.scenarios[i]);
  }
  if (c.width <= 0 || c.height <= 0) throw WorldError("config: grid size must be positive");
}

void to_json(nlohmann::json& j, const WorldState& s) {
  j = {{"width", s.width},
       {"height", s.height},
       {"fire_cells", s.fire_cells},
       {"cow_roam", s.cow_roam},
       {"agent",
        {{"pos", s.agent.pos}, {"hp", s.agent.hp}, {"hungry", s.agent.hungry},
         {"alive", s.agent.alive}}},
       {"inventory",
        {{"food", s.inventory.food}, {"sword", s.inventory.sword},
         {"materials", s.inventory.materials}}},
       {"cow", {{"pos", s.cow.pos}, {"alive", s.cow.alive}}},
       {"hostile",
        {{"pos", s.hostile.pos}, {"hp", s.hostile.hp}, {"alive", s.hostile.alive},
         {"aggro", s.hostile.aggro}}},
       {"crafting_table", s.crafting_table},
       {"apple", {{"pos", s.apple.pos}, {"present", s.apple.present}}},
       {"t", s.t}};
}

void from_json(const nlohmann::json& j, WorldState& s) {
  j.at("width").get_to(s.width);
  j.at("height").get_to(s.height);
  j.at("fire_cells").get_to(s.fire_cells);
  std::sort(s.fire_cells.begin(), s.fire_cells.end());
  j.at("cow_roam").get_to(s.cow_roam);
  const auto& a = j.at("agent");
  a.at("pos").get_to(s.agent.pos);
  a.at("hp").get_to(s.agent.hp);
  a.at("hungry").get_to(s.agent.hungry);
  a.at("alive").get_to(s.agent.alive);
  const auto& inv = j.at("inventory");
  inv.at("food").get_to(s.inventory.food);
  inv.at("sword").get_to(s.inventory.sword);
  inv.at("materials").get_to(s.inventory.materials);
  j.at("cow").at("pos").get_to(s.cow.pos);
  j.at("cow").at("alive").get_to(s.cow.alive);
  const auto& h = j.at("hostile");
  h.at("pos").get_to(s.hostile.pos);
  h.at("hp").get_to(s.hostile.hp);
  h.at("alive").get_to(s.hostile.alive);
  h.at("aggro").get_to(s.hostile.aggro);
  j.at("crafting_table").get_to(s.crafting_table);
  j.at("apple").at("pos").get_to(s.apple.pos);
  j.at("apple").at("present").get_to(s.apple.present);
  j.at("t").get_to(s.t);
}

}  // namespace accbt::grid
