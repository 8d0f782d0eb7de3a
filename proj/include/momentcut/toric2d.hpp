#pragma once

#include "momentcut/degeneration.hpp"

namespace momentcut {

struct NotDim2Error : std::runtime_error {
  explicit NotDim2Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Self-intersection number of a boundary edge of a smooth toric surface
// polygon: the integer d with n_prev + n_next = -d * n_edge for consecutive
// primitive inward normals in counterclockwise order.
struct EdgeDegree {
  Face edge;              // dim-1 face of the polygon
  RatVec endpoint_a;      // endpoints in ccw order
  RatVec endpoint_b;
  IntVec inward_normal;
  Int degree;
};

// Requires a full-dimensional Delzant polygon in rank 2.
std::vector<EdgeDegree> edge_self_intersections(const Polytope& p);

struct SurfaceID {
  enum class Kind { P1xP1, Hirzebruch, Blowup, Unknown };
  Kind kind = Kind::Unknown;
  Int hirzebruch_m = 0;       // for Kind::Hirzebruch
  std::size_t blowup_count = 0;  // for Kind::Blowup
  std::string blowup_base;       // nearest 4-vertex match
  std::size_t vertex_count = 0;

  std::string str() const;
};

SurfaceID identify_surface(const Polytope& p);

// Degree of each internal wall Delta_ij computed inside each adjacent
// full-dimensional piece. Point intersections carry no entry.
struct DivisorDegreeEntry {
  std::pair<int, int> between;  // (i, j), i < j, 0-based
  int in_piece;                 // i or j
  Int degree;
};

std::vector<DivisorDegreeEntry> divisor_degree_report(const Subdivision& s);

}  // namespace momentcut
