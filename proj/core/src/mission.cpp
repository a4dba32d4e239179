#include "accbt/bt/mission.hpp"

#include <nlohmann/json.hpp>
#include <istream>
#include <optional>
#include <ostream>

namespace accbt::bt {

std::string_view to_string(MissionEnd end) {
  switch (end) {
    case MissionEnd::AlreadySucceeded: return "AlreadySucceeded";
    case MissionEnd::RootSuccess: return "RootSuccess";
    case MissionEnd::RootFailure: return "RootFailure";
    case MissionEnd::AgentDied: return "AgentDied";
    case MissionEnd::StepLimit: return "StepLimit";
  }
  return "?";
}

namespace {

MissionEnd parse_end(const std::string& text) {
  for (MissionEnd e : {MissionEnd::AlreadySucceeded, MissionEnd::RootSuccess,
                       MissionEnd::RootFailure, MissionEnd::AgentDied, MissionEnd::StepLimit}) {
    if (to_string(e) == text) return e;
  }
  throw BtError("trace: unknown mission end '" + text + "'");
}

Status parse_status(const std::string& text) {
  for (Status st : {Status::Running, Status::Success, Status::Failure}) {
    if (to_string(st) == text) return st;
  }
  throw BtError("trace: unknown status '" + text + "'");
}

}  // namespace

void write_trace_jsonl(std::ostream& out, const MissionTrace& trace, std::size_t mission) {
  nlohmann::ordered_json header = {{"mission", mission},
                                   {"conditions", trace.conditions},
                                   {"initial", trace.initial_truth}};
  out << header.dump() << '\n';
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const TraceStep& step = trace.steps[i];
    nlohmann::ordered_json line = {
        {"step", i},
        {"t", step.t},
        {"action", step.action},
        {"root", std::string(to_string(step.root_status))},
        {"digest", step.digest},
        {"truth", step.truth},
    };
    out << line.dump() << '\n';
  }
  nlohmann::ordered_json end = {{"end", std::string(to_string(trace.reason))},
                                {"steps", trace.steps.size()}};
  out << end.dump() << '\n';
}

std::vector<MissionTrace> read_trace_jsonl(std::istream& in) {
  std::vector<MissionTrace> traces;
  std::optional<MissionTrace> open;
  std::string line;
  std::size_t lineno = 0;
  try {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      const auto j = nlohmann::json::parse(line);
      if (j.contains("conditions")) {
        if (open) throw BtError("trace: header before end line");
        open.emplace();
        j.at("conditions").get_to(open->conditions);
        open->initial_truth = j.at("initial").get<std::vector<bool>>();
      } else if (j.contains("end")) {
        if (!open) throw BtError("trace: end line without header");
        open->reason = parse_end(j.at("end").get<std::string>());
        if (j.at("steps").get<std::size_t>() != open->steps.size()) {
          throw BtError("trace: step count mismatch");
        }
        traces.push_back(std::move(*open));
        open.reset();
      } else {
        if (!open) throw BtError("trace: step line without header");
        TraceStep step;
        j.at("t").get_to(step.t);
        j.at("action").get_to(step.action);
        step.root_status = parse_status(j.at("root").get<std::string>());
        j.at("digest").get_to(step.digest);
        step.truth = j.at("truth").get<std::vector<bool>>();
        if (step.truth.size() != open->conditions.size()) {
          throw BtError("trace: truth vector has the wrong length");
        }
        open->steps.push_back(std::move(step));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw BtError("trace line " + std::to_string(lineno) + ": " + e.what());
  }
  if (open) throw BtError("trace: missing end line");
  return traces;
}

}  // namespace accbt::bt
