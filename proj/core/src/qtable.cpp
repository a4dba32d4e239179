#include "accbt/rl/qtable.hpp"

#include <cmath>

#include "accbt/grid/scripted.hpp"

namespace accbt::rl {

QTable::QTable(std::string action, FeatureCodec codec, Hyperparameters hyper)
    : action_(std::move(action)),
      codec_(codec),
      hyper_(hyper),
      n_actions_(codec.action_count()),
      q_(static_cast<std::size_t>(codec.state_count()) * n_actions_, 0.0),
      n_(q_.size(), 0) {}

std::size_t QTable::index(std::uint32_t s, std::size_t a) const {
  if (s >= codec_.state_count() || a >= n_actions_) {
    throw RlError("q-table index out of range");
  }
  return static_cast<std::size_t>(s) * n_actions_ + a;
}

double QTable::max_value(std::uint32_t s) const { return value(s, best_action(s)); }

std::size_t QTable::best_action(std::uint32_t s) const {
  const std::size_t base = index(s, 0);
  std::size_t best = 0;
  for (std::size_t a = 1; a < n_actions_; ++a) {
    if (q_[base + a] > q_[base + best]) best = a;
  }
  return best;
}

void QTable::update(std::uint32_t s, std::size_t a, double r, std::uint32_t s_next,
                    bool terminal) {
  const double target = r + (terminal ? 0.0 : hyper_.gamma * max_value(s_next));
  const std::size_t i = index(s, a);
  q_[i] += hyper_.alpha * (target - q_[i]);
  n_[i] += 1;
}

bool operator==(const QTable& a, const QTable& b) {
  return a.action_ == b.action_ && a.codec_.kind() == b.codec_.kind() && a.hyper_ == b.hyper_ &&
         a.q_ == b.q_ && a.n_ == b.n_ && a.reward == b.reward && a.seed == b.seed &&
         a.total_steps == b.total_steps;
}

void q_update(QTable& table, std::uint32_t s, std::size_t a, double r, std::uint32_t s_next,
              bool terminal) {
  table.update(s, a, r, s_next, terminal);
}

grid::PrimitiveAction GreedyPolicy::operator()(const grid::WorldState& state) const {
  return table_->codec().actions()[choose(table_->codec().encode(state))];
}

GreedyPolicy extract_policy(const QTable& table) {
  return GreedyPolicy(std::make_shared<const QTable>(table));
}

GreedyPolicy extract_policy(std::shared_ptr<const QTable> table) {
  return GreedyPolicy(std::move(table));
}

nlohmann::ordered_json to_json(const QTable& t) {
  nlohmann::ordered_json j;
  j["format"] = "accbt-qtable";
  j["version"] = QTable::kFormatVersion;
  j["action"] = t.action();
  nlohmann::ordered_json codec;
  codec["name"] = t.codec().name();
  codec["version"] = t.codec().version();
  codec["states"] = t.state_count();
  codec["actions"] = nlohmann::ordered_json::array();
  for (auto a : t.codec().actions()) codec["actions"].push_back(grid::to_string(a));
  j["codec"] = codec;
  const auto& h = t.hyper();
  j["hyperparameters"] = {{"alpha", h.alpha},
                          {"gamma", h.gamma},
                          {"epsilon_start", h.epsilon_start},
                          {"epsilon_end", h.epsilon_end},
                          {"epsilon_decay_fraction", h.epsilon_decay_fraction}};
  j["reward"] = {{"preset", t.reward.preset},
                 {"m_p", t.reward.m_p},
                 {"m_t", t.reward.m_t},
                 {"m_acc", t.reward.m_acc},
                 {"end_episode_on_acc", t.reward.end_episode_on_acc}};
  j["seed"] = t.seed;
  j["total_steps"] = t.total_steps;
  auto entries = nlohmann::ordered_json::array();
  for (std::uint32_t s = 0; s < t.state_count(); ++s) {
    for (std::size_t a = 0; a < t.action_count(); ++a) {
      const double v = t.value(s, a);
      const std::uint32_t n = t.visits(s, a);
      if (n == 0 && v == 0.0) continue;
      entries.push_back({s, a, v, n});
    }
  }
  j["entries"] = std::move(entries);
  return j;
}

QTable qtable_from_json(const nlohmann::json& j) {
  try {
    if (j.at("format") != "accbt-qtable") throw QTableFormatError("not a q-table file");
    if (j.at("version") != QTable::kFormatVersion) {
      throw QTableFormatError("unsupported q-table version " + j.at("version").dump());
    }
    const auto& c = j.at("codec");
    const FeatureCodec codec = FeatureCodec::by_name(c.at("name").get<std::string>());
    if (c.at("version").get<int>() != codec.version() ||
        c.at("states").get<std::uint32_t>() != codec.state_count() ||
        c.at("actions").size() != codec.action_count()) {
      throw QTableFormatError("q-table codec does not match codec " + std::string(codec.name()) +
                              " v" + std::to_string(codec.version()));
    }
    Hyperparameters h;
    const auto& hj = j.at("hyperparameters");
    hj.at("alpha").get_to(h.alpha);
    hj.at("gamma").get_to(h.gamma);
    hj.at("epsilon_start").get_to(h.epsilon_start);
    hj.at("epsilon_end").get_to(h.epsilon_end);
    hj.at("epsilon_decay_fraction").get_to(h.epsilon_decay_fraction);
    QTable t(j.at("action").get<std::string>(), codec, h);
    const auto& r = j.at("reward");
    r.at("preset").get_to(t.reward.preset);
    r.at("m_p").get_to(t.reward.m_p);
    r.at("m_t").get_to(t.reward.m_t);
    r.at("m_acc").get_to(t.reward.m_acc);
    r.at("end_episode_on_acc").get_to(t.reward.end_episode_on_acc);
    j.at("seed").get_to(t.seed);
    j.at("total_steps").get_to(t.total_steps);
    for (const auto& e : j.at("entries")) {
      const auto s = e.at(0).get<std::uint32_t>();
      const auto a = e.at(1).get<std::size_t>();
      const double v = e.at(2).get<double>();
      if (!std::isfinite(v)) throw QTableFormatError("non-finite q-value");
      if (s >= t.state_count() || a >= t.action_count()) {
        throw QTableFormatError("q-table entry out of range");
      }
      t.set_value(s, a, v);
      t.set_visits(s, a, e.at(3).get<std::uint32_t>());
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw QTableFormatError(std::string("malformed q-table: ") + e.what());
  } catch (const grid::UnknownAction& e) {
    throw QTableFormatError(std::string("unknown codec: ") + e.what());
  }
}

}  // namespace accbt::rl
