#pragma once

#include <cstdint>
#include <string>

namespace octet {

inline constexpr const char* kToolVersion = "1.0.0";

struct RunManifest {
  std::string command;
  uint64_t input_hash = 0;
  uint64_t seed = 2026;
  double elapsed_ms = 0;
  uint64_t result_digest = 0;

  std::string to_json() const;
};

}  // namespace octet
