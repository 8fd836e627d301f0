#pragma once

#include <functional>
#include <string>

#include "octet/pencil.hpp"
#include "octet/realization.hpp"

namespace octet {

// Points, optionally the 56 five-point conics, optionally a few sampled
// members of the pencil. Floating point is used for drawing only.
std::string render_svg(const Configuration& c, bool draw_conics, int pencil_samples);

}  // namespace octet
