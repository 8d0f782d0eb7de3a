#include "momentcut/delzant.hpp"


namespace momentcut {

SmoothnessReport is_smooth_vertex(const Polytope& p, const RatVec& v) {
  SmoothnessReport rep;
  rep.vertex = v;
  std::vector<EdgeAtVertex> edges = p.edges_at_vertex(v);
  for (const EdgeAtVertex& e : edges) rep.edge_directions.push_back(e.direction);

  std::size_t d = static_cast<std::size_t>(p.dim());
  if (edges.size() != d) {
    rep.failure = SmoothnessFailure::EdgeCountMismatch;
    return rep;
  }
  if (d == 0) {
    rep.is_smooth = true;
    return rep;
  }
  // Coordinates of the edge directions in the hull lattice. Directions are
  // primitive integral vectors of the saturated hull lattice, so the
  // coordinates are integral.
  IntMat basis = p.hull_lattice_basis();
  RatMat basis_cols = to_rat(transpose(basis, p.rank()));
  RatMat coords;
  for (const IntVec& u : rep.edge_directions) {
    auto c = rat_solve(basis_cols, to_rat(u), basis.size());
    if (!c.has_value())
      throw std::logic_error("is_smooth_vertex: edge direction outside the hull");
    for (const Rat& x : *c)
      if (denominator(x) != 1)
        throw std::logic_error("is_smooth_vertex: non-integral hull coordinates");
    coords.push_back(*c);
  }
  Rat det = rat_det(coords);
  rep.is_smooth = (det == 1 || det == -1);
  if (!rep.is_smooth) rep.failure = SmoothnessFailure::NotZBasis;
  return rep;
}

DelzantReport is_delzant(const Polytope& p) {
  DelzantReport rep;
  rep.is_delzant = true;
  for (const RatVec& v : p.vertices()) {
    rep.vertex_reports.push_back(is_smooth_vertex(p, v));
    if (!rep.vertex_reports.back().is_smooth) rep.is_delzant = false;
  }
  return rep;
}

}  // namespace momentcut
