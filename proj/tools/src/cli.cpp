#include "accbt/cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "accbt/bt/mission.hpp"
#include "accbt/chain/backchain.hpp"
#include "accbt/chain/compiled.hpp"
#include "accbt/chain/dot.hpp"
#include "accbt/cli/manifest.hpp"
#include "accbt/eval/compare.hpp"
#include "accbt/eval/evaluate.hpp"
#include "accbt/eval/report.hpp"
#include "accbt/grid/scripted.hpp"
#include "accbt/grid/world_json.hpp"
#include "accbt/names.hpp"
#include "accbt/rl/qtable.hpp"
#include "accbt/rl/reward.hpp"
#include "accbt/rl/train.hpp"

#ifndef ACCBT_VERSION
#define ACCBT_VERSION "0.0.0"
#endif

namespace accbt::cli {

namespace fs = std::filesystem;

namespace {

class Failure : public std::runtime_error {
 public:
  Failure(ExitCode code, const std::string& message) : std::runtime_error(message), code_(code) {}
  ExitCode code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure(kUsage, "cannot read " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

nlohmann::json read_json(const fs::path& path, ExitCode on_error) {
  const std::string text = read_text(path);
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Failure(on_error, path.string() + ": " + e.what());
  }
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure(kUsage, "cannot write " + path.string());
  out << text;
}

fs::path output_root() {
  const char* env = std::getenv("ACCBT_OUT");
  return env != nullptr && *env != '\0' ? fs::path(env) : fs::path(".");
}

fs::path prepare_dir(const std::string& requested, const std::string& fallback) {
  const fs::path dir = requested.empty() ? output_root() / fallback : fs::path(requested);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Failure(kUsage, "cannot create " + dir.string() + ": " + ec.message());
  return dir;
}

std::string slug(std::string_view text) {
  std::string out;
  for (char c : text) {
    const auto u = static_cast<unsigned char>(c);
    out += std::isalnum(u) ? static_cast<char>(std::tolower(u)) : '_';
  }
  return out;
}

grid::WorldConfig load_world(const std::string& path) {
  if (path.empty()) return {};
  const nlohmann::json j = read_json(path, kConfig);
  try {
    return j.get<grid::WorldConfig>();
  } catch (const std::exception& e) {
    throw Failure(kConfig, path + ": " + e.what());
  }
}

chain::CompiledSpec load_tree(const fs::path& dir) {
  const fs::path file = dir / "tree.json";
  const nlohmann::json j = read_json(file, kUsage);
  try {
    return chain::compiled_from_tree_file(j);
  } catch (const nlohmann::json::exception& e) {
    throw Failure(kUsage, file.string() + ": " + e.what());
  } catch (const chain::CompileError& e) {
    throw Failure(kUsage, file.string() + ": " + e.what());
  }
}

RunManifest base_manifest(const std::string& command, const std::vector<std::string>& args,
                          const fs::path& out_dir) {
  RunManifest m;
  m.tool_version = ACCBT_VERSION;
  m.command = command;
  m.args = args;
  m.output_dir = out_dir.string();
  return m;
}

// compile ----------------------------------------------------------------

struct CompileOptions {
  std::string spec;
  std::string out;
  bool dot = true;
  std::string highlight;
};

void print_acc_table(std::ostream& out, const chain::CompiledSpec& compiled) {
  std::size_t width = 6;
  for (const auto& e : compiled.acc.entries()) width = std::max(width, e.action.size());
  out << std::left << std::setw(static_cast<int>(width + 2)) << "action" << "ACC\n";
  for (const auto& e : compiled.acc.entries()) {
    out << std::setw(static_cast<int>(width + 2)) << e.action;
    if (e.conditions.empty()) out << "-";
    for (std::size_t i = 0; i < e.conditions.size(); ++i) {
      out << (i ? ", " : "") << e.conditions[i];
    }
    out << '\n';
  }
  out << std::right;
}

int cmd_compile(const CompileOptions& o, const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  const std::string text = read_text(o.spec);
  chain::CompiledSpec compiled;
  try {
    compiled = chain::compile(text);
  } catch (const chain::CyclicDependency& e) {
    throw Failure(kCompile, o.spec + ": " + e.what());
  } catch (const chain::CompileError& e) {
    throw Failure(kUsage, o.spec + ": " + e.what());
  }
  std::optional<std::string> highlight;
  if (!o.highlight.empty()) {
    const auto* spec = chain::find_action(compiled.spec.actions, o.highlight);
    if (spec == nullptr) throw Failure(kUsage, "--highlight: no action named \"" + o.highlight + "\"");
    highlight = spec->name;
  }

  const fs::path dir = prepare_dir(o.out, "tree");
  RunManifest manifest = base_manifest("compile", args, dir);
  manifest.spec_path = o.spec;
  manifest.add_input("spec", o.spec);

  write_text(dir / "tree.json", chain::tree_file_json(compiled).dump(2) + "\n");
  write_text(dir / "acc.json", chain::acc_to_json(compiled.acc).dump(2) + "\n");
  manifest.outputs = {"tree.json", "acc.json"};
  if (o.dot) {
    write_text(dir / "tree.dot",
               chain::export_dot(compiled.tree, compiled.acc, highlight, compiled.spec.actions));
    manifest.outputs.push_back("tree.dot");
  }
  write_manifest(dir, manifest);

  for (const auto& c : compiled.unachievable) {
    err << "note: no action achieves \"" << c << "\"; it stays a plain check\n";
  }
  print_acc_table(out, compiled);
  return kOk;
}

// train ------------------------------------------------------------------

struct TrainOptions {
  std::string tree;
  std::string action;
  std::string preset = "standard";
  std::optional<double> m_p;
  std::optional<double> m_t;
  std::optional<double> m_acc;
  std::optional<bool> end_episode;
  std::uint64_t steps = 200000;
  std::uint64_t seed = 0;
  std::size_t episode_limit = 500;
  std::string world;
  std::string out;
};

rl::RewardConfig reward_config(const TrainOptions& o) {
  rl::RewardConfig rc;
  try {
    rc = rl::preset(o.preset);
  } catch (const rl::UnknownPreset& e) {
    throw Failure(kConfig, e.what());
  }
  if (o.m_p || o.m_t || o.m_acc || o.end_episode) {
    if (o.m_p) rc.m_p = *o.m_p;
    if (o.m_t) rc.m_t = *o.m_t;
    if (o.m_acc) rc.m_acc = *o.m_acc;
    if (o.end_episode) rc.end_episode_on_acc = *o.end_episode;
    if (!(rc == rl::preset(o.preset))) rc.preset = "custom";
  }
  try {
    rl::validate(rc);
  } catch (const rl::InvalidRewardConfig& e) {
    throw Failure(kConfig, e.what());
  }
  return rc;
}

int cmd_train(const TrainOptions& o, const std::vector<std::string>& args, std::ostream& out) {
  const fs::path tree_dir = o.tree.empty() ? output_root() / "tree" : fs::path(o.tree);
  const chain::CompiledSpec compiled = load_tree(tree_dir);
  const grid::WorldConfig world = load_world(o.world);
  const rl::RewardConfig rc = reward_config(o);

  const auto* spec = chain::find_action(compiled.spec.actions, o.action);
  if (spec == nullptr) throw Failure(kConfig, "no action named \"" + o.action + "\" in the tree");
  if (spec->impl != bt::ImplKind::Learned) {
    throw Failure(kConfig, "action \"" + spec->name + "\" is not marked learned");
  }

  rl::TrainConfig tc;
  tc.action = spec->name;
  tc.reward = rc;
  tc.total_steps = o.steps;
  tc.seed = o.seed;
  tc.episode_step_limit = o.episode_limit;
  const rl::TrainResult result = [&] {
    try {
      return rl::train(compiled, world, tc,
                       rl::scenario_sampler(rl::training_scenarios(spec->name), world));
    } catch (const rl::RlError& e) {
      throw Failure(kConfig, e.what());
    } catch (const grid::UnknownAction& e) {
      throw Failure(kConfig, e.what());
    }
  }();

  const fs::path dir = prepare_dir(o.out, "train-" + slug(spec->name) + "-" + rc.preset);
  RunManifest manifest = base_manifest("train", args, dir);
  manifest.spec_path = (tree_dir / "tree.json").string();
  manifest.world_config = o.world;
  manifest.preset = rc.preset;
  manifest.seeds = {{"train", o.seed}};
  manifest.add_input("tree", tree_dir / "tree.json");
  if (!o.world.empty()) manifest.add_input("world", o.world);

  write_text(dir / "qtable.json", rl::to_json(result.table).dump() + "\n");
  std::ostringstream csv;
  rl::write_training_csv(csv, result.episodes);
  write_text(dir / "training.csv", csv.str());
  manifest.outputs = {"qtable.json", "training.csv"};
  write_manifest(dir, manifest);

  std::size_t reached = 0;
  for (const auto& e : result.episodes) reached += e.reason == rl::EpisodeEnd::Postcondition;
  out << spec->name << " [" << rc.preset << "]: " << result.episodes.size() << " episodes ("
      << reached << " reached the postcondition) over " << result.missions << " missions, "
      << result.env_steps << " world steps\n";
  return kOk;
}

// eval -------------------------------------------------------------------

struct EvalOptions {
  std::string tree;
  int scenario = 2;
  std::size_t episodes = 1000;
  std::size_t cap = 2000;
  std::vector<std::string> policies;
  std::string preset;
  std::vector<std::string> track;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  bool traces = false;
  std::string world;
  std::string out;
};

eval::PolicySource load_policy(const std::string& arg, RunManifest& manifest) {
  const auto eq = arg.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == arg.size()) {
    throw Failure(kUsage, "--policy expects ACTION=FILE or ACTION=scripted, got \"" + arg + "\"");
  }
  eval::PolicySource p;
  p.action = arg.substr(0, eq);
  const std::string source = arg.substr(eq + 1);
  if (source == "scripted") return p;
  std::ifstream in(source, std::ios::binary);
  if (!in) throw Failure(kConfig, "cannot read policy " + source);
  try {
    auto table = rl::qtable_from_json(nlohmann::json::parse(in));
    if (fold_name(table.action()) != fold_name(p.action)) {
      throw Failure(kCompatibility, source + " holds a q-table for \"" + table.action() +
                                        "\", not \"" + p.action + "\"");
    }
    p.table = std::make_shared<const rl::QTable>(std::move(table));
  } catch (const nlohmann::json::exception& e) {
    throw Failure(kConfig, source + ": " + e.what());
  } catch (const rl::QTableFormatError& e) {
    throw Failure(kCompatibility, source + ": " + e.what());
  }
  p.origin = source;
  manifest.add_input("policy:" + p.action, source);
  return p;
}

std::string default_preset_label(const std::vector<eval::PolicySource>& policies) {
  std::string label;
  for (const auto& p : policies) {
    if (!p.table) continue;
    if (label.empty()) {
      label = p.table->reward.preset;
    } else if (label != p.table->reward.preset) {
      return "mixed";
    }
  }
  return label.empty() ? "scripted" : label;
}

int cmd_eval(const EvalOptions& o, const std::vector<std::string>& args, std::ostream& out) {
  const fs::path tree_dir = o.tree.empty() ? output_root() / "tree" : fs::path(o.tree);
  const chain::CompiledSpec compiled = load_tree(tree_dir);
  const grid::WorldConfig world = load_world(o.world);

  RunManifest manifest;
  manifest.add_input("tree", tree_dir / "tree.json");
  if (!o.world.empty()) manifest.add_input("world", o.world);

  eval::EvalConfig ec;
  ec.scenario = o.scenario;
  ec.episodes = o.episodes;
  ec.mission_step_cap = o.cap;
  for (const auto& arg : o.policies) ec.policies.push_back(load_policy(arg, manifest));
  ec.preset = o.preset.empty() ? default_preset_label(ec.policies) : o.preset;
  if (!o.track.empty()) ec.tracked_conditions = o.track;
  ec.seed = o.seed;
  ec.jobs = o.jobs;
  ec.keep_traces = o.traces;

  eval::EvalResult result;
  try {
    result = eval::evaluate(compiled, world, ec);
  } catch (const eval::CompatibilityError& e) {
    throw Failure(kCompatibility, e.what());
  } catch (const eval::EvalError& e) {
    throw Failure(kConfig, e.what());
  } catch (const grid::WorldError& e) {
    throw Failure(kConfig, e.what());
  }

  const fs::path dir =
      prepare_dir(o.out, "eval-s" + std::to_string(o.scenario) + "-" + slug(ec.preset));
  RunManifest full = base_manifest("eval", args, dir);
  full.spec_path = (tree_dir / "tree.json").string();
  full.world_config = o.world;
  full.preset = ec.preset;
  full.seeds = {{"eval", o.seed},
                {"rule", "mission i: scenario mix_seed(seed, 2i), world mix_seed(seed, 2i+1)"}};
  full.inputs = std::move(manifest.inputs);

  write_text(dir / "report.json", eval::to_json(result.report).dump(2) + "\n");
  full.outputs = {"report.json"};
  if (o.traces) {
    std::ostringstream lines;
    for (std::size_t i = 0; i < result.traces.size(); ++i) {
      bt::write_trace_jsonl(lines, result.traces[i], i);
    }
    write_text(dir / "traces.jsonl", lines.str());
    full.outputs.push_back("traces.jsonl");
  }
  write_manifest(dir, full);

  eval::write_markdown(out, {result.report});
  return kOk;
}

// report -----------------------------------------------------------------

struct ReportOptions {
  std::vector<std::string> inputs;
  std::string format = "md";
  bool compare = false;
  std::string out;
};

eval::EvalReport load_report(const std::string& input) {
  fs::path path(input);
  if (fs::is_directory(path)) path /= "report.json";
  const std::string text = read_text(path);
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Failure(kUsage, path.string() + ": " + e.what());
  }
  try {
    return eval::report_from_json(j);
  } catch (const std::exception& e) {
    throw Failure(kCompatibility, path.string() + ": " + e.what());
  }
}

void write_comparison_markdown(std::ostream& out, const eval::ComparisonSummary& s) {
  out << "\nScenario " << s.scenario << " ranking by violation episodes:";
  for (const auto& r : s.by_violation) out << ' ' << r.rank << '.' << r.preset;
  out << "\nScenario " << s.scenario << " ranking by completion steps:";
  for (const auto& r : s.by_completion) out << ' ' << r.rank << '.' << r.preset;
  out << '\n';
  for (const auto& t : s.ties) out << t << '\n';
  for (const auto& v : s.standard_versus) {
    out << "standard vs " << v.preset << ": more violations " << (v.more_violations ? "yes" : "no")
        << ", slower completion " << (v.slower_completion ? "yes" : "no") << '\n';
  }
  for (const auto& n : s.notes) out << "note: " << n << '\n';
}

int cmd_report(const ReportOptions& o, std::ostream& out) {
  std::vector<eval::EvalReport> reports;
  for (const auto& in : o.inputs) reports.push_back(load_report(in));
  if (o.compare && o.format == "csv") throw Failure(kUsage, "--compare needs --format md or json");

  std::optional<eval::ComparisonSummary> summary;
  if (o.compare) {
    try {
      summary = eval::compare(reports);
    } catch (const eval::EvalError& e) {
      throw Failure(kConfig, e.what());
    }
  }

  std::ostringstream text;
  if (o.format == "csv") {
    eval::write_csv(text, reports);
  } else if (o.format == "md") {
    eval::write_markdown(text, reports);
    if (summary) write_comparison_markdown(text, *summary);
  } else {
    nlohmann::ordered_json j;
    j["reports"] = nlohmann::ordered_json::array();
    for (const auto& r : reports) j["reports"].push_back(eval::to_json(r));
    if (summary) j["comparison"] = eval::to_json(*summary);
    text << j.dump(2) << '\n';
  }
  if (o.out.empty()) {
    out << text.str();
  } else {
    write_text(o.out, text.str());
  }
  return kOk;
}

// verify -----------------------------------------------------------------

int cmd_verify(const std::string& dir, std::ostream& out) {
  RunManifest manifest;
  try {
    manifest = read_manifest(dir);
  } catch (const std::exception& e) {
    throw Failure(kUsage, e.what());
  }
  const auto stale = stale_inputs(manifest);
  for (const auto& s : stale) out << "changed: " << s.role << ' ' << s.path << '\n';
  if (!stale.empty()) return kCompatibility;
  out << manifest.inputs.size() << " inputs match " << dir << "/manifest.json\n";
  return kOk;
}

const CLI::Validator kAtLeastOne(
    [](std::string& value) -> std::string {
      std::size_t pos = 0;
      try {
        if (std::stoll(value, &pos) >= 1 && pos == value.size()) return {};
      } catch (const std::exception&) {
      }
      return "must be a whole number of at least 1, got " + value;
    },
    "N>=1");

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Failure& e) {
    err << "accbt: " << e.what() << '\n';
    return e.code();
  } catch (const std::exception& e) {
    err << "accbt: internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Backward-chained behavior trees with ACC-aware reinforcement learning", "accbt"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ACCBT_VERSION));

  CompileOptions co;
  auto* compile = app.add_subcommand("compile", "Build the tree and ACC table from an action spec");
  compile->add_option("spec", co.spec, "Action spec file")->required();
  compile->add_option("-o,--out", co.out, "Output directory (default $ACCBT_OUT/tree)");
  compile->add_flag("--dot,!--no-dot", co.dot, "Write tree.dot (on by default)");
  compile->add_option("--highlight", co.highlight, "Action whose ACCs tree.dot marks");

  TrainOptions to;
  auto* train = app.add_subcommand("train", "Q-learn one learned action inside the full tree");
  train->add_option("--tree", to.tree, "Directory holding tree.json (default $ACCBT_OUT/tree)");
  train->add_option("--action", to.action, "Learned action to train")->required();
  train->add_option("--preset", to.preset, "standard | neg_reward | end_episode | nr_ee")
      ->capture_default_str();
  train->add_option("--m-p", to.m_p, "Override the postcondition reward");
  train->add_option("--m-t", to.m_t, "Override the step reward");
  train->add_option("--m-acc", to.m_acc, "Override the ACC violation reward");
  train->add_option("--end-episode", to.end_episode, "Override ending episodes on ACC violation");
  train->add_option("--steps", to.steps, "Trained-action step budget")->capture_default_str();
  train->add_option("--seed", to.seed, "Training seed")->capture_default_str();
  train->add_option("--episode-limit", to.episode_limit, "Trained steps per episode")
      ->check(kAtLeastOne)
      ->capture_default_str();
  train->add_option("--world", to.world, "World config JSON (default built-in)");
  train->add_option("-o,--out", to.out, "Output directory");

  EvalOptions eo;
  auto* evaluate = app.add_subcommand("eval", "Run seeded missions and measure ACC violations");
  evaluate->add_option("--tree", eo.tree, "Directory holding tree.json (default $ACCBT_OUT/tree)");
  evaluate->add_option("--scenario", eo.scenario, "Scenario id")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  evaluate->add_option("--episodes", eo.episodes, "Missions to run")
      ->check(kAtLeastOne)
      ->capture_default_str();
  evaluate->add_option("--cap", eo.cap, "Mission step cap")
      ->check(kAtLeastOne)
      ->capture_default_str();
  evaluate->add_option("--policy", eo.policies, "ACTION=qtable.json or ACTION=scripted");
  evaluate->add_option("--preset", eo.preset, "Label for the report (default from the q-tables)");
  evaluate->add_option("--track", eo.track, "Restrict the watched ACC conditions");
  evaluate->add_option("--seed", eo.seed, "Evaluation seed")->capture_default_str();
  evaluate->add_option("--jobs", eo.jobs, "Worker threads")
      ->check(kAtLeastOne)
      ->capture_default_str();
  evaluate->add_flag("--traces", eo.traces, "Also write per-mission traces.jsonl");
  evaluate->add_option("--world", eo.world, "World config JSON (default built-in)");
  evaluate->add_option("-o,--out", eo.out, "Output directory");

  ReportOptions ro;
  auto* report = app.add_subcommand("report", "Render evaluation reports as a table");
  report->add_option("inputs", ro.inputs, "report.json files or eval directories")->required();
  report->add_option("--format", ro.format, "md | csv | json")
      ->check(CLI::IsMember({"md", "csv", "json"}))
      ->capture_default_str();
  report->add_flag("--compare", ro.compare, "Rank the presets and compare against standard");
  report->add_option("-o,--out", ro.out, "Write to a file instead of stdout");

  std::string verify_dir;
  auto* verify = app.add_subcommand("verify", "Re-hash the inputs recorded in a manifest");
  verify->add_option("dir", verify_dir, "Output directory holding manifest.json")->required();

  std::vector<std::string> argv_store{"accbt"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (*compile) return guarded(err, [&] { return cmd_compile(co, args, out, err); });
  if (*train) return guarded(err, [&] { return cmd_train(to, args, out); });
  if (*evaluate) return guarded(err, [&] { return cmd_eval(eo, args, out); });
  if (*report) return guarded(err, [&] { return cmd_report(ro, out); });
  return guarded(err, [&] { return cmd_verify(verify_dir, out); });
}

}  // namespace accbt::cli
