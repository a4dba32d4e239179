#include "accbt/cli/manifest.hpp"

#include <fstream>
#include <iterator>
#include <stdexcept>

namespace accbt::cli {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t hash_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return fnv1a64(bytes);
}

std::string format_hash(std::uint64_t hash) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = "fnv1a64:";
  for (int shift = 60; shift >= 0; shift -= 4) out += kHex[(hash >> shift) & 0xF];
  return out;
}

void RunManifest::add_input(std::string role, const std::filesystem::path& path) {
  inputs.push_back({std::move(role), path.string(), format_hash(hash_file(path))});
}

nlohmann::ordered_json to_json(const RunManifest& m) {
  nlohmann::ordered_json j;
  j["format"] = "accbt-manifest";
  j["version"] = RunManifest::kVersion;
  j["tool_version"] = m.tool_version;
  j["command"] = m.command;
  j["args"] = m.args;
  j["spec"] = m.spec_path;
  j["world_config"] = m.world_config;
  j["preset"] = m.preset;
  j["seeds"] = m.seeds;
  j["output_dir"] = m.output_dir;
  j["inputs"] = nlohmann::ordered_json::array();
  for (const auto& in : m.inputs) {
    j["inputs"].push_back({{"role", in.role}, {"path", in.path}, {"hash", in.hash}});
  }
  j["outputs"] = m.outputs;
  return j;
}

RunManifest manifest_from_json(const nlohmann::json& j) {
  if (j.value("format", "") != "accbt-manifest") throw std::runtime_error("not an accbt manifest");
  if (j.at("version").get<int>() != RunManifest::kVersion) {
    throw std::runtime_error("unsupported manifest version");
  }
  RunManifest m;
  j.at("tool_version").get_to(m.tool_version);
  j.at("command").get_to(m.command);
  j.at("args").get_to(m.args);
  j.at("spec").get_to(m.spec_path);
  j.at("world_config").get_to(m.world_config);
  j.at("preset").get_to(m.preset);
  m.seeds = j.at("seeds");
  j.at("output_dir").get_to(m.output_dir);
  for (const auto& in : j.at("inputs")) {
    m.inputs.push_back({in.at("role").get<std::string>(), in.at("path").get<std::string>(),
                        in.at("hash").get<std::string>()});
  }
  j.at("outputs").get_to(m.outputs);
  return m;
}

void write_manifest(const std::filesystem::path& dir, const RunManifest& manifest) {
  std::ofstream out(dir / "manifest.json", std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + (dir / "manifest.json").string());
  out << to_json(manifest).dump(2) << '\n';
}

RunManifest read_manifest(const std::filesystem::path& dir) {
  std::ifstream in(dir / "manifest.json", std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + (dir / "manifest.json").string());
  return manifest_from_json(nlohmann::json::parse(in));
}

std::vector<InputFile> stale_inputs(const RunManifest& manifest) {
  std::vector<InputFile> stale;
  for (const auto& in : manifest.inputs) {
    std::string now;
    try {
      now = format_hash(hash_file(in.path));
    } catch (const std::runtime_error&) {
    }
    if (now != in.hash) stale.push_back(in);
  }
  return stale;
}

}  // namespace accbt::cli
