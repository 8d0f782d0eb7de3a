#include "momentcut/toric2d.hpp"

#include <algorithm>

namespace momentcut {

namespace {

Rat cross2(const RatVec& a, const RatVec& b) { return a[0] * b[1] - a[1] * b[0]; }

// Counterclockwise boundary cycle of a full-dimensional polygon.
std::vector<RatVec> ccw_cycle(const Polytope& p) {
  std::vector<RatVec> vs = p.vertices();
  RatVec c = p.centroid();
  auto half = [&](const RatVec& v) {
    RatVec d = sub(v, c);
    return (d[1] > 0 || (d[1] == 0 && d[0] > 0)) ? 0 : 1;
  };
  std::sort(vs.begin(), vs.end(), [&](const RatVec& a, const RatVec& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return cross2(sub(a, c), sub(b, c)) > 0;
  });
  return vs;
}

}  // namespace

std::vector<EdgeDegree> edge_self_intersections(const Polytope& p) {
  if (p.rank() != 2 || p.dim() != 2)
    throw NotDim2Error("edge_self_intersections: need a full-dimensional polygon");
  DelzantReport dr = is_delzant(p);
  if (!dr.is_delzant)
    throw NotDelzantError("edge_self_intersections: polygon is not Delzant");

  std::vector<RatVec> cycle = ccw_cycle(p);
  const std::size_t n = cycle.size();
  std::vector<IntVec> normals(n);
  for (std::size_t i = 0; i < n; ++i) {
    RatVec d = sub(cycle[(i + 1) % n], cycle[i]);
    IntVec t = primitive_direction(d);
    normals[i] = {-t[1], t[0]};  // left turn of the ccw edge direction: inward
  }
  std::vector<EdgeDegree> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const IntVec& prev = normals[(i + n - 1) % n];
    const IntVec& next = normals[(i + 1) % n];
    IntVec sum = add(prev, next);
    // sum = c * n_edge for an integer c on a smooth fan
    const IntVec& ne = normals[i];
    std::size_t nz = (ne[0] != 0) ? 0 : 1;
    if (sum[nz] % ne[nz] != 0)
      throw std::logic_error("edge degrees: normals violate the smooth relation");
    Int cfac = sum[nz] / ne[nz];
    if (sum[1 - nz] != cfac * ne[1 - nz])
      throw std::logic_error("edge degrees: normals violate the smooth relation");

    EdgeDegree& e = out[i];
    e.degree = -cfac;
    e.endpoint_a = cycle[i];
    e.endpoint_b = cycle[(i + 1) % n];
    e.inward_normal = ne;
    e.edge.vertices = {e.endpoint_a, e.endpoint_b};
    std::sort(e.edge.vertices.begin(), e.edge.vertices.end());
    e.edge.dim = 1;
    for (std::size_t h = 0; h < p.halfspaces().size(); ++h)
      if (p.halfspaces()[h].slack(e.endpoint_a) == 0 &&
          p.halfspaces()[h].slack(e.endpoint_b) == 0)
        e.edge.active.push_back(h);
  }
  return out;
}

std::string SurfaceID::str() const {
  switch (kind) {
    case Kind::P1xP1:
      return "P1xP1";
    case Kind::Hirzebruch:
      return "Hirzebruch(" + hirzebruch_m.str() + ")";
    case Kind::Blowup:
      return "blowup(" + std::to_string(blowup_count) + ") of " + blowup_base;
    case Kind::Unknown:
      return "unknown";
  }
  return "unknown";
}

SurfaceID identify_surface(const Polytope& p) {
  std::vector<EdgeDegree> degs = edge_self_intersections(p);
  SurfaceID id;
  id.vertex_count = p.vertices().size();
  if (id.vertex_count == 4) {
    std::vector<Int> multiset;
    for (const EdgeDegree& e : degs) multiset.push_back(e.degree);
    std::sort(multiset.begin(), multiset.end());
    // Delzant quadrilaterals carry degrees {-m, 0, 0, m}
    if (multiset[1] == 0 && multiset[2] == 0 && multiset[0] == -multiset[3]) {
      Int m = multiset[3];
      if (m == 0) {
        id.kind = SurfaceID::Kind::P1xP1;
      } else {
        id.kind = SurfaceID::Kind::Hirzebruch;
        id.hirzebruch_m = m;
      }
    }
  } else if (id.vertex_count > 4) {
    id.kind = SurfaceID::Kind::Blowup;
    id.blowup_count = id.vertex_count - 4;
    id.blowup_base = "Hirzebruch";
  }
  return id;
}

std::vector<DivisorDegreeEntry> divisor_degree_report(const Subdivision& s) {
  if (s.ambient.rank() != 2)
    throw NotDim2Error("divisor_degree_report: ambient rank must be 2");

  std::vector<DivisorDegreeEntry> out;
  const int n = static_cast<int>(s.cuts.size());
  // Cache per-piece degree tables.
  std::map<int, std::vector<EdgeDegree>> tables;
  auto table_for = [&](int i) -> const std::vector<EdgeDegree>& {
    auto it = tables.find(i);
    if (it == tables.end())
      it = tables.emplace(i, edge_self_intersections(*s.piece({i}))).first;
    return it->second;
  };

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto& wall = s.piece({i, j});
      if (!wall.has_value() || wall->dim() != 1) continue;
      std::vector<RatVec> endpoints = wall->vertices();
      for (int side : {i, j}) {
        const auto& piece = s.piece({side});
        if (!piece.has_value() || piece->dim() != 2) continue;
        const std::vector<EdgeDegree>& table = table_for(side);
        bool found = false;
        for (const EdgeDegree& e : table) {
          if (e.edge.vertices == endpoints) {
            out.push_back({{i, j}, side, e.degree});
            found = true;
            break;
          }
        }
        if (!found)
          throw std::logic_error("divisor_degree_report: wall is not an edge of its piece");
      }
    }
  }
  return out;
}

}  // namespace momentcut
