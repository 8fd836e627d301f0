#include "octet/manifest.hpp"

#include "json.hpp"

namespace octet {

std::string RunManifest::to_json() const {
  nlohmann::json j;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)input_hash);
  j["input_hash"] = buf;
  j["seed"] = seed;
  j["elapsed_ms"] = elapsed_ms;
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)result_digest);
  j["result_digest"] = buf;
  return j.dump(2);
}

}  // namespace octet
