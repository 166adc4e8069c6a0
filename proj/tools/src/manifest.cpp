#include "oudesign/cli/manifest.hpp"

#include <array>
#include <cstdio>
#include <sstream>

#include <json.hpp>
#include <openssl/evp.h>

#include "oudesign/report_io.hpp"

namespace oudesign::cli {

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr);
  std::string hex;
  hex.reserve(2 * len);
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

void RunManifest::add_output(std::string path, std::string_view content) {
  outputs.push_back({std::move(path), content.size(), sha256_hex(content)});
}

std::string RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = kManifestSchema;
  j["io_schema"] = io::kSchemaVersion;
  j["version"] = OUDESIGN_VERSION;
  j["command"] = command;
  j["args"] = args;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::istringstream lines(parameters);
  for (std::string line; std::getline(lines, line);) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    params[line.substr(0, eq)] = line.substr(eq + 1);
  }
  j["parameters"] = params;
  if (seed) {
    j["seed"] = *seed;
  } else {
    j["seed"] = nullptr;
  }
  j["wall_time_s"] = wall_time_s;
  auto outs = nlohmann::ordered_json::array();
  for (const auto& o : outputs) {
    outs.push_back({{"path", o.path}, {"bytes", o.bytes}, {"sha256", o.sha256}});
  }
  j["outputs"] = outs;
  return j.dump();
}

}  // namespace oudesign::cli
