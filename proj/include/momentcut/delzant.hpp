#pragma once

#include "momentcut/polytope.hpp"

namespace momentcut {

enum class SmoothnessFailure { None, EdgeCountMismatch, NotZBasis, IrrationalSlope };

struct SmoothnessReport {
  RatVec vertex;
  bool is_smooth = false;
  std::vector<IntVec> edge_directions;  // primitive, outgoing
  SmoothnessFailure failure = SmoothnessFailure::None;
};

// Smoothness of a vertex, evaluated with respect to the saturated lattice of
// the affine hull's direction space, so lower-dimensional polytopes are
// checked relative to their own hull. Throws NotVertexError.
SmoothnessReport is_smooth_vertex(const Polytope& p, const RatVec& v);

struct DelzantReport {
  bool is_delzant = false;
  std::vector<SmoothnessReport> vertex_reports;
};

// Exhaustive per-vertex reports (no short-circuiting).
DelzantReport is_delzant(const Polytope& p);

}  // namespace momentcut
