#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "accbt/rl/features.hpp"
#include "accbt/rl/reward.hpp"

namespace accbt::rl {

class QTableFormatError : public RlError {
 public:
  using RlError::RlError;
};

struct Hyperparameters {
  double alpha = 0.1;
  double gamma = 0.99;
  double epsilon_start = 1.0;
  double epsilon_end = 0.05;
  /// Fraction of the step budget over which epsilon decays linearly.
  double epsilon_decay_fraction = 0.5;

  friend bool operator==(const Hyperparameters&, const Hyperparameters&) = default;
};

/// Dense action-value table over a codec's state and action sets. Entries
/// never visited stay 0.
class QTable {
 public:
  static constexpr int kFormatVersion = 1;

  QTable(std::string action, FeatureCodec codec, Hyperparameters hyper = {});

  const std::string& action() const noexcept { return action_; }
  const FeatureCodec& codec() const noexcept { return codec_; }
  const Hyperparameters& hyper() const noexcept { return hyper_; }
  std::size_t action_count() const noexcept { return n_actions_; }
  std::uint32_t state_count() const noexcept { return codec_.state_count(); }

  double value(std::uint32_t s, std::size_t a) const { return q_[index(s, a)]; }
  void set_value(std::uint32_t s, std::size_t a, double v) { q_[index(s, a)] = v; }
  std::uint32_t visits(std::uint32_t s, std::size_t a) const { return n_[index(s, a)]; }
  void set_visits(std::uint32_t s, std::size_t a, std::uint32_t n) { n_[index(s, a)] = n; }
  double max_value(std::uint32_t s) const;
  /// First action index with the maximal value.
  std::size_t best_action(std::uint32_t s) const;

  /// Q(s,a) += alpha * (r + gamma * max_a' Q(s',a') * [not terminal] - Q(s,a)).
  void update(std::uint32_t s, std::size_t a, double r, std::uint32_t s_next, bool terminal);

  /// Training provenance stored with the table.
  RewardConfig reward;
  std::uint64_t seed = 0;
  std::uint64_t total_steps = 0;

  friend bool operator==(const QTable& a, const QTable& b);

 private:
  std::size_t index(std::uint32_t s, std::size_t a) const;

  std::string action_;
  FeatureCodec codec_;
  Hyperparameters hyper_;
  std::size_t n_actions_;
  std::vector<double> q_;
  std::vector<std::uint32_t> n_;
};

/// Free-function form of QTable::update.
void q_update(QTable& table, std::uint32_t s, std::size_t a, double r, std::uint32_t s_next,
              bool terminal);

/// Greedy controller u(x) = argmax_a Q(x, a); ties go to the first action in
/// the codec's enumeration.
class GreedyPolicy {
 public:
  explicit GreedyPolicy(std::shared_ptr<const QTable> table) : table_(std::move(table)) {}
  std::size_t choose(std::uint32_t s) const { return table_->best_action(s); }
  grid::PrimitiveAction operator()(const grid::WorldState& state) const;

 private:
  std::shared_ptr<const QTable> table_;
};

/// The copying overload snapshots the table; the shared one aliases it.
GreedyPolicy extract_policy(const QTable& table);
GreedyPolicy extract_policy(std::shared_ptr<const QTable> table);

/// {"format": "accbt-qtable", "version", "action", "codec": {name, version,
/// states, actions}, "hyperparameters", "reward", "seed", "total_steps",
/// "entries": [[state, action, value, visits], ...]} with only visited or
/// non-zero entries listed, in index order.
nlohmann::ordered_json to_json(const QTable& table);
/// Throws QTableFormatError on a wrong format, version or codec.
QTable qtable_from_json(const nlohmann::json& j);

}  // namespace accbt::rl
