#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "accbt/eval/evaluate.hpp"

namespace accbt::eval {

/// Report schema {"schema": "accbt-eval-report", "schema_version", ...}.
nlohmann::ordered_json to_json(const EvalReport& report);
/// Throws EvalError on a wrong schema or version.
EvalReport report_from_json(const nlohmann::ordered_json& j);

/// Fixed three-decimal rendering shared by the CSV and Markdown tables.
std::string format_metric(double value);

/// One row per report: scenario, preset, episodes, violation percentage,
/// violation steps mean and sd, completion mean and sd, then completed,
/// timeouts, deaths and failures counts.
void write_csv(std::ostream& out, const std::vector<EvalReport>& reports);
void write_markdown(std::ostream& out, const std::vector<EvalReport>& reports);

}  // namespace accbt::eval
