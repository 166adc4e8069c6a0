#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace oudesign::cli {

inline constexpr const char* kManifestSchema = "oudesign-manifest/1";

// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

struct OutputDigest {
  std::string path;  // "-" for stdout
  std::size_t bytes = 0;
  std::string sha256;
};

struct RunManifest {
  std::string command;
  std::vector<std::string> args;
  std::string parameters;  // resolved options, one "name=value" per line
  std::optional<std::uint64_t> seed;
  double wall_time_s = 0.0;
  std::vector<OutputDigest> outputs;

  void add_output(std::string path, std::string_view content);
  std::string to_json() const;  // single line
};

}  // namespace oudesign::cli
