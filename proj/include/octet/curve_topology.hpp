#pragma once

#include <vector>

#include "octet/geometry.hpp"
#include "octet/poly.hpp"

namespace octet {

// Topology of a smooth real cubic carrying marked rational points: which
// marked points lie on the oval (if any) and the cyclic orders along both
// components. Indices refer to the `marked` input vector.
struct CubicTopology {
  bool has_oval = false;
  std::vector<int> oval_points;        // cyclic order along the oval
  std::vector<int> pseudoline_points;  // cyclic order along the odd component
};

// Exact computation via a column decomposition: critical abscissae from the
// y-discriminant, fiber root counts between them, fold matching through the
// subresultant double root. Throws TracingInconclusive when no admissible
// chart is found.
CubicTopology smooth_cubic_topology(const CubicForm& f, const std::vector<ProjPoint>& marked);

// f(A * (x,y,z)) as a cubic form, A rational.
CubicForm substitute_linear(const CubicForm& f, const std::array<std::array<Rat, 3>, 3>& A);

}  // namespace octet
