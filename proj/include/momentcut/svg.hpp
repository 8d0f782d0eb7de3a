#pragma once

#include <string>

#include "momentcut/cutconfig.hpp"

namespace momentcut {

struct FigureUnsupportedError : std::runtime_error {
  explicit FigureUnsupportedError(const std::string& msg) : std::runtime_error(msg) {}
};

// Rank-2 subdivisions draw every nonempty piece; rank-3 draws a wireframe
// projection of the ambient polytope. Vertex labels are exact rationals.
// Higher ranks throw FigureUnsupportedError.
std::string svg_subdivision(const Subdivision& s);

// Single polytope: rank-2 polygon with labeled vertices, or rank-3 wireframe.
std::string svg_polytope(const Polytope& p);

}  // namespace momentcut
