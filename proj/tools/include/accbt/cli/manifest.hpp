#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace accbt::cli {

/// 64-bit FNV-1a over raw bytes.
std::uint64_t fnv1a64(std::string_view bytes);
/// Hash of a file's contents; throws std::runtime_error if it cannot be read.
std::uint64_t hash_file(const std::filesystem::path& path);
/// "fnv1a64:" followed by 16 lowercase hex digits.
std::string format_hash(std::uint64_t hash);

struct InputFile {
  std::string role;  ///< "spec", "tree", "world", "policy:<action>", "report"
  std::string path;
  std::string hash;
  friend bool operator==(const InputFile&, const InputFile&) = default;
};

/// Written as manifest.json next to every artifact.
struct RunManifest {
  static constexpr int kVersion = 1;
  std::string tool_version;
  std::string command;
  std::vector<std::string> args;  ///< full argument vector after the program name
  std::string spec_path;
  std::string world_config;  ///< empty for the built-in defaults
  std::string preset;
  nlohmann::ordered_json seeds = nlohmann::ordered_json::object();
  std::string output_dir;
  std::vector<InputFile> inputs;
  std::vector<std::string> outputs;

  /// Hashes `path` and records it under `role`.
  void add_input(std::string role, const std::filesystem::path& path);
};

nlohmann::ordered_json to_json(const RunManifest& manifest);
RunManifest manifest_from_json(const nlohmann::json& j);

/// Writes `<dir>/manifest.json`.
void write_manifest(const std::filesystem::path& dir, const RunManifest& manifest);
RunManifest read_manifest(const std::filesystem::path& dir);

/// Inputs whose current hash differs from the recorded one (or that are gone).
std::vector<InputFile> stale_inputs(const RunManifest& manifest);

}  // namespace accbt::cli
