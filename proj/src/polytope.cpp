#include "momentcut/polytope.hpp"

#include <algorithm>

namespace momentcut {

HalfSpace::HalfSpace(IntVec n, Rat c) {
  if (is_zero(n)) throw ZeroVectorError("HalfSpace: zero normal");
  Int g = vec_gcd(n);
  if (g > 1) {
    for (Int& x : n) x /= g;
    c /= Rat(g);
  }
  normal = std::move(n);
  offset = std::move(c);
}

HalfSpace HalfSpace::from_rational(const RatVec& n, const Rat& c) {
  if (is_zero(n)) throw ZeroVectorError("HalfSpace: zero normal");
  Int den = 1;
  for (const Rat& x : n) den = lcm(den, denominator(x));
  IntVec w(n.size());
  for (std::size_t i = 0; i < n.size(); ++i)
    w[i] = numerator(n[i]) * (den / denominator(n[i]));
  return HalfSpace(std::move(w), c * Rat(den));
}

// ---------------------------------------------------------------------------
// Double description

namespace {

bool contains_vec(const IntMat& m, const IntVec& v) {
  return std::find(m.begin(), m.end(), v) != m.end();
}

// rank of the set of processed rows tight at both rays
bool adjacent_rays(const IntMat& rows, const std::vector<std::size_t>& processed,
                   const IntVec& r1, const IntVec& r2, std::size_t quotient_dim) {
  IntMat common;
  for (std::size_t idx : processed) {
    if (dot(rows[idx], r1) == 0 && dot(rows[idx], r2) == 0) common.push_back(rows[idx]);
  }
  if (quotient_dim < 2) return false;
  return int_rank(common) == quotient_dim - 2;
}

}  // namespace

ConeGens double_description(const IntMat& rows, std::size_t dim) {
  IntMat lineality = identity_mat(dim);
  IntMat rays;
  std::vector<std::size_t> processed;

  for (std::size_t idx = 0; idx < rows.size(); ++idx) {
    const IntVec& a = rows[idx];
    std::size_t j = lineality.size();
    for (std::size_t t = 0; t < lineality.size(); ++t) {
      if (dot(a, lineality[t]) != 0) {
        j = t;
        break;
      }
    }
    if (j < lineality.size()) {
      // The constraint cuts the lineality space: one lineality generator
      // becomes a ray, the rest are projected into the hyperplane of a.
      IntVec l0 = lineality[j];
      Int v0 = dot(a, l0);
      if (v0 < 0) {
        l0 = neg(l0);
        v0 = -v0;
      }
      IntMat new_lin;
      for (std::size_t t = 0; t < lineality.size(); ++t) {
        if (t == j) continue;
        Int vl = dot(a, lineality[t]);
        new_lin.push_back(make_primitive(sub(scale(lineality[t], v0), scale(l0, vl))));
      }
      IntMat new_rays;
      for (const IntVec& r : rays) {
        Int vr = dot(a, r);
        IntVec adj = make_primitive(sub(scale(r, v0), scale(l0, vr)));
        if (!is_zero(adj) && !contains_vec(new_rays, adj)) new_rays.push_back(adj);
      }
      if (!contains_vec(new_rays, l0)) new_rays.push_back(l0);
      lineality = std::move(new_lin);
      rays = std::move(new_rays);
    } else {
      std::vector<Int> val(rays.size());
      bool any_neg = false;
      for (std::size_t t = 0; t < rays.size(); ++t) {
        val[t] = dot(a, rays[t]);
        if (val[t] < 0) any_neg = true;
      }
      if (any_neg) {
        std::size_t quotient_dim = dim - lineality.size();
        IntMat next;
        for (std::size_t t = 0; t < rays.size(); ++t)
          if (val[t] >= 0) next.push_back(rays[t]);
        for (std::size_t p = 0; p < rays.size(); ++p) {
          if (val[p] <= 0) continue;
          for (std::size_t n = 0; n < rays.size(); ++n) {
            if (val[n] >= 0) continue;
            if (!adjacent_rays(rows, processed, rays[p], rays[n], quotient_dim)) continue;
            IntVec w = make_primitive(
                add(scale(rays[n], val[p]), scale(rays[p], -val[n])));
            if (!is_zero(w) && !contains_vec(next, w)) next.push_back(w);
          }
        }
        rays = std::move(next);
      }
    }
    processed.push_back(idx);
  }
  return {std::move(lineality), std::move(rays)};
}

// ---------------------------------------------------------------------------
// Vertex enumeration via the homogenization (x, t), t >= 0

namespace {

struct VertexEnum {
  std::vector<RatVec> vertices;
  bool has_recession = false;
};

VertexEnum enumerate_vertices(std::size_t rank, const std::vector<HalfSpace>& hs) {
  IntMat rows;
  rows.reserve(hs.size() + 1);
  for (const HalfSpace& h : hs) {
    Int den = denominator(h.offset);
    IntVec row(rank + 1);
    for (std::size_t i = 0; i < rank; ++i) row[i] = h.normal[i] * den;
    row[rank] = -numerator(h.offset);
    rows.push_back(std::move(row));
  }
  IntVec last(rank + 1, 0);
  last[rank] = 1;
  rows.push_back(std::move(last));

  ConeGens cone = double_description(rows, rank + 1);
  VertexEnum out;
  out.has_recession = !cone.lineality.empty();
  for (const IntVec& r : cone.rays) {
    if (r[rank] == 0) {
      out.has_recession = true;
      continue;
    }
    RatVec v(rank);
    for (std::size_t i = 0; i < rank; ++i) v[i] = Rat(r[i], r[rank]);
    out.vertices.push_back(std::move(v));
  }
  return out;
}

void sort_unique(std::vector<RatVec>& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

void sort_halfspaces(std::vector<HalfSpace>& hs) {
  std::sort(hs.begin(), hs.end(), [](const HalfSpace& a, const HalfSpace& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  });
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
}

// Pivot columns of the row space: coordinates that chart the affine hull.
std::vector<std::size_t> chart_columns(const IntMat& dirs, std::size_t cols,
                                       std::size_t target_rank) {
  std::vector<std::size_t> chart;
  RatMat m = to_rat(dirs);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    chart.push_back(c);
    ++r;
    if (r == target_rank) break;
  }
  return chart;
}

}  // namespace

Polytope Polytope::from_vertex_set(std::size_t rank, std::vector<RatVec> pts) {
  sort_unique(pts);
  for (const RatVec& p : pts)
    if (p.size() != rank) throw DimensionMismatchError("vertex length != rank");

  Polytope poly;
  poly.rank_ = rank;

  const RatVec& v0 = pts[0];
  IntMat dirs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    IntVec d = primitive_direction(sub(pts[i], v0));
    if (!is_zero(d)) dirs.push_back(std::move(d));
  }
  std::size_t d = int_rank(dirs);
  poly.dim_ = static_cast<int>(d);

  if (d < rank) {
    IntMat kernel = right_kernel(dirs, rank);
    HnfResult canon = hnf(kernel, rank);
    for (std::size_t i = 0; i < canon.rank; ++i) {
      IntVec n = make_primitive(canon.h[i]);
      Rat c = dot(v0, n);
      poly.equations_.emplace_back(std::move(n), std::move(c));
    }
  }

  if (d > 0) {
    std::vector<std::size_t> chart = chart_columns(dirs, rank, d);
    if (chart.size() != d) throw std::logic_error("chart selection lost rank");
    std::vector<RatVec> ys;
    ys.reserve(pts.size());
    for (const RatVec& p : pts) {
      RatVec y(d);
      for (std::size_t j = 0; j < d; ++j) y[j] = p[chart[j]];
      ys.push_back(std::move(y));
    }
    RatVec center(d, Rat(0));
    for (const RatVec& y : ys) center = add(center, y);
    for (Rat& x : center) x /= Rat(ys.size());

    // Polar trick in the chart: vertices of { z : <z, y - c> <= 1 } are the
    // facet functionals of the hull.
    std::vector<HalfSpace> polar_hs;
    for (const RatVec& y : ys) {
      RatVec n = sub(center, y);
      if (is_zero(n)) continue;  // y is the center: no constraint
      polar_hs.push_back(HalfSpace::from_rational(n, Rat(-1)));
    }
    sort_halfspaces(polar_hs);
    VertexEnum polar = enumerate_vertices(d, polar_hs);
    if (polar.vertices.empty() || polar.has_recession)
      throw std::logic_error("polar enumeration failed");

    for (const RatVec& z : polar.vertices) {
      RatVec normal(rank, Rat(0));
      for (std::size_t j = 0; j < d; ++j) normal[chart[j]] = -z[j];
      Rat off = -(Rat(1) + dot(z, center));
      poly.halfspaces_.push_back(HalfSpace::from_rational(normal, off));
    }
    sort_halfspaces(poly.halfspaces_);
  }

  // Keep only genuine vertices: points where the tight facet normals together
  // with the hull equations span the ambient space.
  IntMat eq_rows;
  for (const HalfSpace& e : poly.equations_) eq_rows.push_back(e.normal);
  for (const RatVec& p : pts) {
    IntMat tight = eq_rows;
    for (const HalfSpace& h : poly.halfspaces_)
      if (h.slack(p) == 0) tight.push_back(h.normal);
    if (int_rank(tight) == rank) poly.vertices_.push_back(p);
  }
  sort_unique(poly.vertices_);
  if (poly.vertices_.empty())
    throw std::logic_error("vertex filter discarded every point");
  return poly;
}

Polytope Polytope::from_halfspaces(std::size_t rank, const std::vector<HalfSpace>& hs) {
  if (rank == 0 || hs.empty())
    throw std::invalid_argument("from_halfspaces: need rank >= 1 and constraints");
  for (const HalfSpace& h : hs)
    if (h.normal.size() != rank) throw DimensionMismatchError("halfspace rank mismatch");
  VertexEnum ve = enumerate_vertices(rank, hs);
  if (ve.vertices.empty()) throw EmptyError("feasible set is empty");
  if (ve.has_recession) throw UnboundedError("feasible set is unbounded");
  return from_vertex_set(rank, std::move(ve.vertices));
}

Polytope Polytope::from_vertices(std::size_t rank, std::vector<RatVec> pts) {
  if (rank == 0 || pts.empty())
    throw std::invalid_argument("from_vertices: need rank >= 1 and points");
  return from_vertex_set(rank, std::move(pts));
}

std::optional<Polytope> Polytope::intersect(const Polytope& p,
                                            const std::vector<HalfSpace>& extra) {
  std::vector<HalfSpace> hs = p.halfspaces_;
  for (const HalfSpace& e : p.equations_) {
    hs.push_back(e);
    hs.push_back(e.flipped());
  }
  hs.insert(hs.end(), extra.begin(), extra.end());
  if (hs.empty()) return p;  // a point with no facets and no equations cannot occur
  try {
    return from_halfspaces(p.rank_, hs);
  } catch (const EmptyError&) {
    return std::nullopt;
  }
}

bool Polytope::contains(const RatVec& x) const {
  if (x.size() != rank_) throw DimensionMismatchError("contains: point rank mismatch");
  for (const HalfSpace& e : equations_)
    if (e.slack(x) != 0) return false;
  for (const HalfSpace& h : halfspaces_)
    if (h.slack(x) < 0) return false;
  return true;
}

bool Polytope::is_vertex(const RatVec& x) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), x);
}

std::vector<std::size_t> Polytope::tight_at(const RatVec& x) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < halfspaces_.size(); ++i)
    if (halfspaces_[i].slack(x) == 0) out.push_back(i);
  return out;
}

Face Polytope::minimal_face(const RatVec& v) const {
  if (!contains(v)) throw NotContainedError("minimal_face: point not in polytope");
  Face f;
  f.active = tight_at(v);
  for (const RatVec& w : vertices_) {
    bool on_face = true;
    for (std::size_t i : f.active)
      if (halfspaces_[i].slack(w) != 0) {
        on_face = false;
        break;
      }
    if (on_face) f.vertices.push_back(w);
  }
  IntMat dirs;
  for (std::size_t i = 1; i < f.vertices.size(); ++i) {
    IntVec dvec = primitive_direction(sub(f.vertices[i], f.vertices[0]));
    if (!is_zero(dvec)) dirs.push_back(std::move(dvec));
  }
  f.dim = static_cast<int>(int_rank(dirs));
  return f;
}

std::vector<EdgeAtVertex> Polytope::edges_at_vertex(const RatVec& v) const {
  if (!is_vertex(v)) throw NotVertexError("edges_at_vertex: not a vertex");
  std::vector<EdgeAtVertex> out;
  std::vector<std::size_t> tv = tight_at(v);
  for (const RatVec& w : vertices_) {
    if (w == v) continue;
    std::vector<std::size_t> common;
    for (std::size_t i : tv)
      if (halfspaces_[i].slack(w) == 0) common.push_back(i);
    // [v, w] is an edge iff the face generated by the common tight set has
    // vertex set exactly {v, w}.
    std::size_t on_face = 0;
    for (const RatVec& u : vertices_) {
      bool ok = true;
      for (std::size_t i : common)
        if (halfspaces_[i].slack(u) != 0) {
          ok = false;
          break;
        }
      if (ok) ++on_face;
    }
    if (on_face != 2) continue;
    EdgeAtVertex e;
    e.direction = primitive_direction(sub(w, v));
    std::size_t nz = 0;
    while (e.direction[nz] == 0) ++nz;
    e.length_param = (w[nz] - v[nz]) / Rat(e.direction[nz]);
    e.other_vertex = w;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Polytope::edge_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (const EdgeAtVertex& e : edges_at_vertex(vertices_[i])) {
      std::size_t j = static_cast<std::size_t>(
          std::lower_bound(vertices_.begin(), vertices_.end(), e.other_vertex) -
          vertices_.begin());
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

IntMat Polytope::hull_lattice_basis() const {
  IntMat eq_rows;
  for (const HalfSpace& e : equations_) eq_rows.push_back(e.normal);
  if (eq_rows.empty()) return identity_mat(rank_);
  IntMat basis = right_kernel(eq_rows, rank_);
  HnfResult canon = hnf(basis, rank_);
  canon.h.resize(canon.rank);
  return canon.h;
}

RatVec Polytope::centroid() const {
  RatVec c(rank_, Rat(0));
  for (const RatVec& v : vertices_) c = add(c, v);
  for (Rat& x : c) x /= Rat(vertices_.size());
  return c;
}

bool Polytope::same_set(const Polytope& other) const {
  if (rank_ != other.rank_) return false;
  for (const RatVec& v : vertices_)
    if (!other.contains(v)) return false;
  for (const RatVec& v : other.vertices_)
    if (!contains(v)) return false;
  return true;
}

}  // namespace momentcut
