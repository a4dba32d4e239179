#include "accbt/eval/report.hpp"

#include <cstdio>
#include <ostream>

namespace accbt::eval {

namespace {

nlohmann::ordered_json summary_json(const Summary& s) {
  return {{"count", s.count}, {"mean", s.mean}, {"sd", s.sd}};
}

Summary summary_from(const nlohmann::ordered_json& j) {
  Summary s;
  j.at("count").get_to(s.count);
  j.at("mean").get_to(s.mean);
  j.at("sd").get_to(s.sd);
  return s;
}

bt::MissionEnd parse_end(const std::string& text) {
  for (bt::MissionEnd e : {bt::MissionEnd::AlreadySucceeded, bt::MissionEnd::RootSuccess,
                           bt::MissionEnd::RootFailure, bt::MissionEnd::AgentDied,
                           bt::MissionEnd::StepLimit}) {
    if (bt::to_string(e) == text) return e;
  }
  throw EvalError("report: unknown mission end '" + text + "'");
}

}  // namespace

nlohmann::ordered_json to_json(const EvalReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = "accbt-eval-report";
  j["schema_version"] = EvalReport::kSchemaVersion;
  j["scenario"] = r.scenario;
  j["preset"] = r.preset;
  j["seed"] = r.seed;
  j["seed_rule"] = "mission i: start state from mix_seed(seed, 2i), world stream from mix_seed(seed, 2i+1)";
  j["episodes"] = r.metrics.episodes;
  j["mission_step_cap"] = r.mission_step_cap;
  nlohmann::ordered_json policies = nlohmann::ordered_json::object();
  for (const auto& [action, origin] : r.policies) policies[action] = origin;
  j["policies"] = policies;
  nlohmann::ordered_json tracked = nlohmann::ordered_json::object();
  for (const auto& t : r.tracked) tracked[t.action] = t.conditions;
  j["tracked"] = tracked;

  const Aggregate& m = r.metrics;
  nlohmann::ordered_json metrics;
  metrics["pct_episodes_with_acc_violation"] = m.pct_episodes_with_violation;
  metrics["acc_violation_steps"] = summary_json(m.violation_steps);
  metrics["completion_steps"] = summary_json(m.completion_steps);
  metrics["completed"] = m.completed;
  metrics["timeouts"] = m.timeouts;
  metrics["deaths"] = m.deaths;
  metrics["failures"] = m.failures;
  auto per = nlohmann::ordered_json::array();
  for (const auto& c : m.per_condition) {
    per.push_back({{"condition", c.condition},
                   {"pct_episodes", c.pct_episodes},
                   {"steps", summary_json(c.steps)}});
  }
  metrics["per_condition"] = per;
  j["metrics"] = metrics;

  auto missions = nlohmann::ordered_json::array();
  for (const auto& mm : r.missions) {
    missions.push_back({mm.index, std::string(bt::to_string(mm.reason)), mm.steps,
                        mm.violation_steps, mm.condition_steps});
  }
  j["missions"] = missions;
  return j;
}

EvalReport report_from_json(const nlohmann::ordered_json& j) {
  try {
    if (j.at("schema") != "accbt-eval-report") throw EvalError("not an evaluation report");
    if (j.at("schema_version") != EvalReport::kSchemaVersion) {
      throw EvalError("unsupported report schema version " + j.at("schema_version").dump());
    }
    EvalReport r;
    j.at("scenario").get_to(r.scenario);
    j.at("preset").get_to(r.preset);
    j.at("seed").get_to(r.seed);
    j.at("mission_step_cap").get_to(r.mission_step_cap);
    for (const auto& [action, origin] : j.at("policies").items()) {
      r.policies.emplace_back(action, origin.get<std::string>());
    }
    for (const auto& [action, conds] : j.at("tracked").items()) {
      r.tracked.push_back({action, conds.get<std::vector<std::string>>()});
    }
    const auto& m = j.at("metrics");
    Aggregate& a = r.metrics;
    j.at("episodes").get_to(a.episodes);
    m.at("pct_episodes_with_acc_violation").get_to(a.pct_episodes_with_violation);
    a.violation_steps = summary_from(m.at("acc_violation_steps"));
    a.completion_steps = summary_from(m.at("completion_steps"));
    m.at("completed").get_to(a.completed);
    m.at("timeouts").get_to(a.timeouts);
    m.at("deaths").get_to(a.deaths);
    m.at("failures").get_to(a.failures);
    for (const auto& c : m.at("per_condition")) {
      a.per_condition.push_back({c.at("condition").get<std::string>(),
                                 c.at("pct_episodes").get<double>(), summary_from(c.at("steps"))});
    }
    for (const auto& mm : j.at("missions")) {
      MissionMetrics x;
      mm.at(0).get_to(x.index);
      x.reason = parse_end(mm.at(1).get<std::string>());
      mm.at(2).get_to(x.steps);
      mm.at(3).get_to(x.violation_steps);
      mm.at(4).get_to(x.condition_steps);
      r.missions.push_back(std::move(x));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw EvalError(std::string("malformed report: ") + e.what());
  }
}

std::string format_metric(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", value);
  return buf;
}

void write_csv(std::ostream& out, const std::vector<EvalReport>& reports) {
  out << "scenario,preset,episodes,acc_violation_pct,acc_violation_steps_mean,"
         "acc_violation_steps_sd,completion_steps_mean,completion_steps_sd,completed,timeouts,"
         "deaths,failures\n";
  for (const auto& r : reports) {
    const Aggregate& m = r.metrics;
    out << r.scenario << ',' << r.preset << ',' << m.episodes << ','
        << format_metric(m.pct_episodes_with_violation) << ','
        << format_metric(m.violation_steps.mean) << ',' << format_metric(m.violation_steps.sd)
        << ',' << format_metric(m.completion_steps.mean) << ','
        << format_metric(m.completion_steps.sd) << ',' << m.completed << ',' << m.timeouts << ','
        << m.deaths << ',' << m.failures << '\n';
  }
}

void write_markdown(std::ostream& out, const std::vector<EvalReport>& reports) {
  out << "| Scenario | Preset | Episodes | ACC violations (% episodes) | ACC violations (steps) "
         "mean | sd | Time to completion (steps) mean | sd | Completed | Timeouts | Deaths | "
         "Failures |\n";
  out << "|---|---|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : reports) {
    const Aggregate& m = r.metrics;
    out << "| " << r.scenario << " | " << r.preset << " | " << m.episodes << " | "
        << format_metric(m.pct_episodes_with_violation) << " | "
        << format_metric(m.violation_steps.mean) << " | " << format_metric(m.violation_steps.sd)
        << " | " << format_metric(m.completion_steps.mean) << " | "
        << format_metric(m.completion_steps.sd) << " | " << m.completed << " | " << m.timeouts
        << " | " << m.deaths << " | " << m.failures << " |\n";
  }
}

}  // namespace accbt::eval
