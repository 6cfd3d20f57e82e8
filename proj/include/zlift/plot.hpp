#pragma once

#include <string>

#include "zlift/field.hpp"

namespace zlift {

/// SVG drawing of the plane H for a cubic field: lattice points near the
/// origin, the three lines y_i = y_j bounding the cones, u, v, v_1, the line
/// v + R u and rho(delta_1). Throws Errc::unsupported_degree otherwise.
std::string plot_plane_h(const FieldPtr& field);

}  // namespace zlift
