#include "accbt/eval/compare.hpp"

#include <algorithm>
#include <numeric>

#include "accbt/eval/report.hpp"
#include "accbt/names.hpp"

namespace accbt::eval {

namespace {

std::vector<RankEntry> rank(const std::vector<EvalReport>& reports, double (*metric)(const EvalReport&)) {
  std::vector<std::size_t> order(reports.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return metric(reports[a]) < metric(reports[b]);
  });
  std::vector<RankEntry> out;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const EvalReport& r = reports[order[pos]];
    RankEntry e{r.preset, metric(r), pos + 1};
    if (pos > 0 && out.back().value == e.value) e.rank = out.back().rank;
    out.push_back(std::move(e));
  }
  return out;
}

double violation_pct(const EvalReport& r) { return r.metrics.pct_episodes_with_violation; }
double completion_mean(const EvalReport& r) { return r.metrics.completion_steps.mean; }

void note_ties(const std::vector<RankEntry>& ranking, const char* metric,
               std::vector<std::string>& ties) {
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    for (std::size_t j = i + 1; j < ranking.size() && ranking[j].rank == ranking[i].rank; ++j) {
      ties.push_back(std::string(metric) + " tie: " + ranking[i].preset + " = " +
                     ranking[j].preset + " (" + format_metric(ranking[i].value) + ")");
    }
  }
}

}  // namespace

ComparisonSummary compare(const std::vector<EvalReport>& reports) {
  if (reports.size() < 2) throw EvalError("compare needs at least two reports");
  for (const auto& r : reports) {
    if (r.scenario != reports.front().scenario) {
      throw MismatchedScenarios("reports cover scenarios " +
                                std::to_string(reports.front().scenario) + " and " +
                                std::to_string(r.scenario));
    }
  }
  ComparisonSummary s;
  s.scenario = reports.front().scenario;
  s.by_violation = rank(reports, violation_pct);
  s.by_completion = rank(reports, completion_mean);
  note_ties(s.by_violation, "violation", s.ties);
  note_ties(s.by_completion, "completion", s.ties);

  const auto standard = std::find_if(reports.begin(), reports.end(), [](const EvalReport& r) {
    return fold_name(r.preset) == "standard";
  });
  if (standard != reports.end()) {
    for (const auto& r : reports) {
      if (&r == &*standard) continue;
      s.standard_versus.push_back({r.preset, violation_pct(*standard) > violation_pct(r),
                                   completion_mean(*standard) > completion_mean(r)});
    }
  }

  const double lo = s.by_completion.front().value;
  const double hi = s.by_completion.back().value;
  s.completion_differences_small = lo > 0.0 ? (hi - lo) / lo < 0.10 : hi == lo;
  if (s.completion_differences_small) s.notes.push_back("completion differences small");
  return s;
}

nlohmann::ordered_json to_json(const ComparisonSummary& s) {
  auto ranking = [](const std::vector<RankEntry>& r) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& e : r) arr.push_back({{"preset", e.preset}, {"value", e.value}, {"rank", e.rank}});
    return arr;
  };
  nlohmann::ordered_json j;
  j["scenario"] = s.scenario;
  j["by_violation"] = ranking(s.by_violation);
  j["by_completion"] = ranking(s.by_completion);
  j["ties"] = s.ties;
  auto versus = nlohmann::ordered_json::array();
  for (const auto& v : s.standard_versus) {
    versus.push_back({{"preset", v.preset},
                      {"more_violations", v.more_violations},
                      {"slower_completion", v.slower_completion},
                      {"both", v.both()}});
  }
  j["standard_versus"] = versus;
  j["completion_differences_small"] = s.completion_differences_small;
  j["notes"] = s.notes;
  return j;
}

}  // namespace accbt::eval
