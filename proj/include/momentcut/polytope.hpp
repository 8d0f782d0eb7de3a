#pragma once

#include <optional>
#include <utility>

#include "momentcut/lattice.hpp"

namespace momentcut {

struct UnboundedError : std::runtime_error {
  explicit UnboundedError(const std::string& msg) : std::runtime_error(msg) {}
};

struct EmptyError : std::runtime_error {
  explicit EmptyError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotContainedError : std::invalid_argument {
  explicit NotContainedError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct NotVertexError : std::invalid_argument {
  explicit NotVertexError(const std::string& msg) : std::invalid_argument(msg) {}
};

// { x : <x, normal> >= offset } with a primitive nonzero normal. The feasible
// side is the inward side, so facet normals of a polytope point inward.
struct HalfSpace {
  IntVec normal;
  Rat offset;

  HalfSpace(IntVec n, Rat c);

  // Scales <x, n> >= c by a positive rational to primitive integral form.
  static HalfSpace from_rational(const RatVec& n, const Rat& c);

  HalfSpace flipped() const { return HalfSpace(neg(normal), -offset); }
  Rat slack(const RatVec& x) const { return dot(x, normal) - offset; }
  bool operator==(const HalfSpace&) const = default;
};

struct Face {
  std::vector<std::size_t> active;  // indices of tight facet halfspaces
  std::vector<RatVec> vertices;
  int dim = -1;
};

struct EdgeAtVertex {
  IntVec direction;  // primitive, pointing away from the vertex
  Rat length_param;  // t > 0 with v + t * direction = other_vertex
  RatVec other_vertex;
};

// Compact rational polytope carried with both representations. Instances are
// canonical: vertices sorted, facets and affine-hull equations derived
// deterministically from the vertex set. Lower-dimensional polytopes are
// first-class; `equations` cuts out their affine hull.
class Polytope {
 public:
  // An invalid placeholder; every usable instance comes from a factory.
  Polytope() = default;

  static Polytope from_halfspaces(std::size_t rank, const std::vector<HalfSpace>& hs);
  static Polytope from_vertices(std::size_t rank, std::vector<RatVec> pts);
  // Exact intersection; the empty set is a value, not an error.
  static std::optional<Polytope> intersect(const Polytope& p,
                                           const std::vector<HalfSpace>& extra);

  std::size_t rank() const { return rank_; }
  int dim() const { return dim_; }
  const std::vector<RatVec>& vertices() const { return vertices_; }
  const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }
  const std::vector<HalfSpace>& equations() const { return equations_; }

  bool contains(const RatVec& x) const;
  bool is_vertex(const RatVec& x) const;

  // Indices of facet halfspaces tight at x (x must lie in the polytope).
  std::vector<std::size_t> tight_at(const RatVec& x) const;

  // The minimal face containing v; its dim is d_v. Throws NotContainedError.
  Face minimal_face(const RatVec& v) const;

  // Edges through a vertex, with primitive outgoing directions.
  std::vector<EdgeAtVertex> edges_at_vertex(const RatVec& v) const;

  // All 1-faces as index pairs into vertices().
  std::vector<std::pair<std::size_t, std::size_t>> edge_pairs() const;

  // Saturated lattice basis of the affine hull's direction space.
  IntMat hull_lattice_basis() const;

  RatVec centroid() const;

  bool same_set(const Polytope& other) const;  // geometric equality
  bool operator==(const Polytope& other) const = default;

 private:
  static Polytope from_vertex_set(std::size_t rank, std::vector<RatVec> pts);

  std::size_t rank_ = 0;
  int dim_ = -1;
  std::vector<RatVec> vertices_;
  std::vector<HalfSpace> halfspaces_;
  std::vector<HalfSpace> equations_;
};

// Extreme-ray description of the cone { x : <row, x> >= 0 for all rows }:
// cone = span(lineality) + cone(rays), rays primitive and extreme modulo the
// lineality space.
struct ConeGens {
  IntMat lineality;
  IntMat rays;
};
ConeGens double_description(const IntMat& rows, std::size_t dim);

}  // namespace momentcut
