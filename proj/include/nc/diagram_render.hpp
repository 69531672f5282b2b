// Diagram drawing (SVG, two variables) and vertex CSV for any dimension.
#pragma once

#include <string>

#include "nc/polyhedron.hpp"

namespace nc {

// Axes, support points, hull vertices and the bounded one-dimensional faces.
std::string diagram_svg(const LatticePolyhedron& p, const std::set<Exponents>& support);

std::string vertices_csv(const LatticePolyhedron& p);

}  // namespace nc
