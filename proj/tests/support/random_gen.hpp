#pragma once

// Deterministic random instance generator for the property suites: Delzant
// polygons via equal-depth corner chops of a square (which keep every vertex
// smooth), followed by unimodular coordinate changes and lattice shifts.

#include <random>

#include "momentcut/cutconfig.hpp"
#include "momentcut/delzant.hpp"

namespace momentcut::testing {

using Rng = std::mt19937;

inline int rand_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rat rand_rat(Rng& rng, int num_bound, int den_max) {
  int den = rand_int(rng, 1, den_max);
  int num = rand_int(rng, -num_bound * den, num_bound * den);
  return Rat(num, den);
}

// Product of a few elementary shears and sign/swap moves; entries stay small.
inline IntMat random_unimodular(Rng& rng, std::size_t k, int entry_bound = 2,
                                int moves = 3) {
  while (true) {
    IntMat u = identity_mat(k);
    for (int m = 0; m < moves; ++m) {
      std::size_t i = static_cast<std::size_t>(rand_int(rng, 0, static_cast<int>(k) - 1));
      std::size_t j = static_cast<std::size_t>(rand_int(rng, 0, static_cast<int>(k) - 1));
      switch (rand_int(rng, 0, 2)) {
        case 0:
          if (i != j) {
            Int f = rand_int(rng, -1, 1);
            for (std::size_t c = 0; c < k; ++c) u[i][c] += f * u[j][c];
          }
          break;
        case 1:
          std::swap(u[i], u[j]);
          break;
        default:
          for (std::size_t c = 0; c < k; ++c) u[i][c] = -u[i][c];
      }
    }
    bool small = true;
    for (const IntVec& row : u)
      for (const Int& x : row)
        if (abs(x) > entry_bound) small = false;
    if (small) return u;
  }
}

inline Polytope apply_affine(const Polytope& p, const IntMat& u, const IntVec& shift) {
  std::vector<RatVec> pts;
  for (const RatVec& v : p.vertices()) {
    RatVec w(p.rank(), Rat(0));
    for (std::size_t i = 0; i < p.rank(); ++i) {
      for (std::size_t j = 0; j < p.rank(); ++j) w[i] += Rat(u[i][j]) * v[j];
      w[i] += Rat(shift[i]);
    }
    pts.push_back(std::move(w));
  }
  return Polytope::from_vertices(p.rank(), std::move(pts));
}

// Chops a random smooth corner at equal depth along both edges; the two new
// vertices stay smooth for any rational depth.
inline Polytope chop_corner(const Polytope& p, Rng& rng) {
  const std::vector<RatVec>& vs = p.vertices();
  const RatVec& v = vs[static_cast<std::size_t>(
      rand_int(rng, 0, static_cast<int>(vs.size()) - 1))];
  std::vector<EdgeAtVertex> edges = p.edges_at_vertex(v);
  if (edges.size() != 2) return p;
  Rat tmax = std::min(edges[0].length_param, edges[1].length_param);
  static const Rat fractions[] = {Rat(1, 4), Rat(1, 3), Rat(1, 2), Rat(2, 3)};
  Rat t = tmax * fractions[rand_int(rng, 0, 3)];
  std::vector<RatVec> pts;
  for (const RatVec& w : vs)
    if (w != v) pts.push_back(w);
  pts.push_back(add(v, scale(to_rat(edges[0].direction), t)));
  pts.push_back(add(v, scale(to_rat(edges[1].direction), t)));
  return Polytope::from_vertices(p.rank(), std::move(pts));
}

inline Polytope random_delzant_polygon(Rng& rng) {
  Rat w(rand_int(rng, 1, 4), rand_int(rng, 1, 2));
  Rat h(rand_int(rng, 1, 4), rand_int(rng, 1, 2));
  Polytope p = Polytope::from_vertices(
      2, {{Rat(0), Rat(0)}, {w, Rat(0)}, {Rat(0), h}, {w, h}});
  int chops = rand_int(rng, 0, 2);
  for (int i = 0; i < chops; ++i) p = chop_corner(p, rng);
  IntVec shift = {Int(rand_int(rng, -2, 2)), Int(rand_int(rng, -2, 2))};
  p = apply_affine(p, random_unimodular(rng, 2), shift);
  return p;
}

inline Polytope random_delzant_segment(Rng& rng) {
  Rat a = rand_rat(rng, 2, 3);
  Rat len(rand_int(rng, 1, 4), rand_int(rng, 1, 3));
  return Polytope::from_vertices(1, {{a}, {a + len}});
}

inline CutData random_cuts(Rng& rng, std::size_t rank, int n_max = 3,
                           int entry_bound = 3, int eps_den_max = 4) {
  int n = rand_int(rng, 1, n_max);
  CutData c;
  for (int i = 0; i < n; ++i) {
    CutDatum d;
    for (std::size_t j = 0; j < rank; ++j)
      d.xi.emplace_back(rand_int(rng, -entry_bound, entry_bound));
    d.eps = rand_rat(rng, 2, eps_den_max);
    c.data.push_back(std::move(d));
  }
  return c;
}

struct RandomInstance {
  Polytope polytope;
  CutData cuts;
};

// The fixed family used by the lemma-equivalence and law suites: rank <= 2,
// N <= 3, integer entries in [-3,3], eps denominators <= 4.
inline RandomInstance random_instance(Rng& rng) {
  RandomInstance inst;
  if (rand_int(rng, 0, 3) == 0) {
    inst.polytope = random_delzant_segment(rng);
    inst.cuts = random_cuts(rng, 1);
  } else {
    inst.polytope = random_delzant_polygon(rng);
    inst.cuts = random_cuts(rng, 2);
  }
  return inst;
}

// Random rational point of the polytope: a convex combination of vertices
// with small rational weights.
inline RatVec random_point(const Polytope& p, Rng& rng) {
  const auto& vs = p.vertices();
  std::vector<Int> weights(vs.size());
  Int total = 0;
  for (auto& wgt : weights) {
    wgt = rand_int(rng, 0, 6);
    total += wgt;
  }
  if (total == 0) {
    weights[0] = 1;
    total = 1;
  }
  RatVec out(p.rank(), Rat(0));
  for (std::size_t i = 0; i < vs.size(); ++i)
    out = add(out, scale(vs[i], Rat(weights[i], total)));
  return out;
}

}  // namespace momentcut::testing
