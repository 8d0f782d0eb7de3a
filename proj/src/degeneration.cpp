#include "momentcut/degeneration.hpp"

#include <algorithm>

namespace momentcut {

namespace {

Rat graph_height(const CutData& c, const RatVec& eta) {
  Rat best;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Rat val = eval_L(c.data[i], eta);
    if (i == 0 || val < best) best = val;
  }
  return -best;
}

Polytope project_to_base(const Polytope& lifted, std::size_t base_rank) {
  std::vector<RatVec> pts;
  for (const RatVec& v : lifted.vertices())
    pts.emplace_back(v.begin(), v.begin() + base_rank);
  return Polytope::from_vertices(base_rank, std::move(pts));
}

Face face_on_hyperplane(const Polytope& p, const IntVec& normal, const Rat& offset) {
  Face f;
  for (const RatVec& v : p.vertices())
    if (dot(v, normal) == offset) f.vertices.push_back(v);
  if (f.vertices.empty()) {
    f.dim = -1;
    return f;
  }
  for (std::size_t i = 0; i < p.halfspaces().size(); ++i) {
    bool tight = true;
    for (const RatVec& v : f.vertices)
      if (p.halfspaces()[i].slack(v) != 0) {
        tight = false;
        break;
      }
    if (tight) f.active.push_back(i);
  }
  IntMat dirs;
  for (std::size_t i = 1; i < f.vertices.size(); ++i) {
    IntVec d = primitive_direction(sub(f.vertices[i], f.vertices[0]));
    if (!is_zero(d)) dirs.push_back(std::move(d));
  }
  f.dim = static_cast<int>(int_rank(dirs));
  return f;
}

}  // namespace

Rat min_a_bound(const Polytope& p, const CutData& c) {
  if (c.rank() != p.rank()) throw DimensionMismatchError("min_a_bound: rank mismatch");
  Rat bound;
  bool first = true;
  for (const RatVec& v : p.vertices()) {
    Rat h = graph_height(c, v);
    if (first || h > bound) bound = h;
    first = false;
  }
  return bound;
}

std::vector<Rat> critical_heights(const Polytope& p, const CutData& c) {
  Subdivision s = subdivide(p, c);
  std::vector<Rat> heights;
  for (const RatVec& v : s.piece_vertices()) heights.push_back(graph_height(c, v));
  std::sort(heights.begin(), heights.end());
  heights.erase(std::unique(heights.begin(), heights.end()), heights.end());
  return heights;
}

LiftedPolytope lift(const Polytope& p, const CutData& c, const Rat& a) {
  Rat bound = min_a_bound(p, c);
  if (a <= bound) throw BoundViolatedError(bound);

  const std::size_t k = p.rank();
  std::vector<HalfSpace> hs;
  auto lift_normal = [&](const IntVec& n, const Int& last) {
    IntVec m = n;
    m.push_back(last);
    return m;
  };
  for (const HalfSpace& h : p.halfspaces())
    hs.emplace_back(lift_normal(h.normal, 0), h.offset);
  for (const HalfSpace& e : p.equations()) {
    hs.emplace_back(lift_normal(e.normal, 0), e.offset);
    hs.emplace_back(lift_normal(neg(e.normal), 0), -e.offset);
  }
  // u >= -L_i(eta)  <=>  <(eta,u), (xi_i, 1)> >= eps_i
  for (const CutDatum& d : c.data) hs.emplace_back(lift_normal(d.xi, 1), d.eps);
  // u <= a
  IntVec top(k + 1, 0);
  top[k] = -1;
  hs.emplace_back(std::move(top), -a);

  LiftedPolytope out;
  out.polytope = Polytope::from_halfspaces(k + 1, hs);
  out.a = a;
  out.base = p;
  out.criticals = critical_heights(p, c);
  if (out.criticals.back() != bound)
    throw std::logic_error("lift: critical heights disagree with the bound");

  if (!project_to_base(out.polytope, k).same_set(p))
    throw std::logic_error("lift: projection to the base polytope failed");

  Subdivision s = subdivide(p, c);
  for (int i = 0; i < static_cast<int>(c.size()); ++i) {
    // (xi_i, 1) is primitive, so the hyperplane data needs no rescaling.
    IntVec n = lift_normal(c.data[i].xi, 1);
    Face face = face_on_hyperplane(out.polytope, n, c.data[i].eps);
    const auto& piece = s.piece({i});
    if (!piece.has_value()) {
      if (face.dim >= 0)
        throw std::logic_error("lift: graph face over an empty piece");
      continue;
    }
    if (face.dim < 0) throw std::logic_error("lift: missing graph face");
    std::vector<RatVec> proj;
    for (const RatVec& v : face.vertices) proj.emplace_back(v.begin(), v.begin() + k);
    if (!Polytope::from_vertices(k, proj).same_set(*piece))
      throw std::logic_error("lift: graph face does not project onto its piece");
    out.piece_faces.emplace(i, std::move(face));
  }

  IntVec top_normal(k + 1, 0);
  top_normal[k] = 1;
  out.top_face = face_on_hyperplane(out.polytope, top_normal, a);
  if (out.top_face.dim < 0) throw std::logic_error("lift: missing top face");
  {
    std::vector<RatVec> proj;
    for (const RatVec& v : out.top_face.vertices)
      proj.emplace_back(v.begin(), v.begin() + k);
    if (!Polytope::from_vertices(k, proj).same_set(p))
      throw std::logic_error("lift: top face is not a copy of the base");
  }
  return out;
}

Fan normal_fan(const Polytope& p) {
  if (p.dim() != static_cast<int>(p.rank()))
    throw std::invalid_argument("normal_fan: polytope must be full-dimensional");
  DelzantReport dr = is_delzant(p);
  if (!dr.is_delzant) throw NotDelzantError("normal_fan: polytope is not Delzant");

  Fan fan;
  for (const HalfSpace& h : p.halfspaces()) fan.rays.push_back(h.normal);
  for (const RatVec& v : p.vertices()) {
    std::vector<std::size_t> cone = p.tight_at(v);
    std::sort(cone.begin(), cone.end());
    IntMat gens;
    for (std::size_t i : cone) gens.push_back(fan.rays[i]);
    Int det = int_det(gens);  // Delzant vertices are simple, so this is square
    if (det != 1 && det != -1)
      throw std::logic_error("normal_fan: non-unimodular cone on a Delzant input");
    fan.maximal_cones.push_back(std::move(cone));
  }
  return fan;
}

FibrationReport fan_fibration(const Fan& f) {
  FibrationReport rep;
  rep.compatible = true;
  for (const auto& cone : f.maximal_cones) {
    bool pos = false, negv = false;
    for (std::size_t i : cone) {
      const Int& last = f.rays[i].back();
      if (last > 0) pos = true;
      if (last < 0) negv = true;
    }
    if (pos && negv) {
      rep.cone_images.push_back(std::nullopt);
      rep.compatible = false;
    } else if (pos) {
      rep.cone_images.push_back(ConeImage::NonNeg);
    } else if (negv) {
      rep.cone_images.push_back(ConeImage::NonPos);
    } else {
      rep.cone_images.push_back(ConeImage::Zero);
    }
  }
  return rep;
}

FibrationReport check_fibration(const LiftedPolytope& l) {
  return fan_fibration(normal_fan(l.polytope));
}

}  // namespace momentcut
