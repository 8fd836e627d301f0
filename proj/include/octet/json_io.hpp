#pragma once

#include <string>

#include "octet/atlas.hpp"
#include "octet/pencil.hpp"

namespace octet {

std::string config_to_json(const Configuration& c);
Configuration config_from_json(const std::string& text);

// Deterministic atlas document: sorted keys, rationals as "p/q" strings,
// section checksums in the manifest.
std::string atlas_to_json(const Atlas& a);

std::string list_report_json(const ListCode& code, const Atlas* atlas);
std::string pencil_report_json(const PencilAnalysis& a);

uint64_t fnv1a64(const std::string& data);

}  // namespace octet
