#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "accbt/eval/evaluate.hpp"

namespace accbt::eval {

class MismatchedScenarios : public EvalError {
 public:
  using EvalError::EvalError;
};

/// Competition ranking (1, 2, 2, 4): lower values rank first, equal values
/// share a rank.
struct RankEntry {
  std::string preset;
  double value = 0.0;
  std::size_t rank = 0;
};

/// Whether the "standard" report is strictly worse than one ACC-aware preset.
struct StandardVersus {
  std::string preset;
  bool more_violations = false;
  bool slower_completion = false;
  bool both() const noexcept { return more_violations && slower_completion; }
};

struct ComparisonSummary {
  int scenario = 0;
  std::vector<RankEntry> by_violation;   ///< violation-episode percentage
  std::vector<RankEntry> by_completion;  ///< completion-steps mean
  std::vector<std::string> ties;         ///< one line per tied pair
  std::vector<StandardVersus> standard_versus;  ///< empty without a "standard" report
  /// Largest completion mean within 10% of the smallest.
  bool completion_differences_small = false;
  std::vector<std::string> notes;
};

/// Needs at least two reports, all of one scenario; throws EvalError or
/// MismatchedScenarios.
ComparisonSummary compare(const std::vector<EvalReport>& reports);

nlohmann::ordered_json to_json(const ComparisonSummary& summary);

}  // namespace accbt::eval
