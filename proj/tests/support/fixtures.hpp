#pragma once

// Shared fixtures: the worked two- and three-fold cut configurations and a
// few reusable polytopes.

#include "momentcut/cutconfig.hpp"

namespace momentcut::testing {

inline RatVec rv(std::initializer_list<Rat> xs) { return RatVec(xs); }
inline IntVec iv(std::initializer_list<int> xs) {
  IntVec v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

inline Polytope segment(const Rat& a, const Rat& b) {
  return Polytope::from_vertices(1, {{a}, {b}});
}

inline Polytope unit_square() {
  return Polytope::from_vertices(
      2, {rv({0, 0}), rv({1, 0}), rv({0, 1}), rv({1, 1})});
}

inline Polytope rectangle(const Rat& x0, const Rat& x1, const Rat& y0, const Rat& y1) {
  return Polytope::from_vertices(2, {rv({x0, y0}), rv({x1, y0}), rv({x0, y1}),
                                     rv({x1, y1})});
}

// Triangle with a non-smooth vertex at the origin (edge directions (1,0) and
// (1,2) have determinant 2).
inline Polytope nonsmooth_triangle() {
  return Polytope::from_vertices(2, {rv({0, 0}), rv({1, 0}), rv({1, 2})});
}

// Two-fold cut of the interval: Delta = [0,1], xi = (m+1, m), eps = (1/2, 0).
inline CutData p1cut_cuts(int m) {
  return CutData{{CutDatum{iv({m + 1}), Rat(1, 2)}, CutDatum{iv({m}), Rat(0)}}};
}

inline Polytope p1cut_base() { return segment(0, 1); }

// Single cut xi = m on [0,1].
inline CutData hirzebruch_cuts(int m) { return CutData{{CutDatum{iv({m}), Rat(0)}}}; }

// Three-fold cut of [-2,1] x [-1,1] with xi = (0,0), (1,0), (0,1).
inline Polytope p1p1_base() { return rectangle(-2, 1, -1, 1); }

inline CutData p1p1_cuts() {
  return CutData{{CutDatum{iv({0, 0}), Rat(0)}, CutDatum{iv({1, 0}), Rat(0)},
                  CutDatum{iv({0, 1}), Rat(0)}}};
}

// Collinear cut directions on the unit square; ties on the left edge violate
// the transversality count at the corners.
inline CutData collinear_cuts() {
  return CutData{{CutDatum{iv({0, 0}), Rat(0)}, CutDatum{iv({1, 0}), Rat(0)},
                  CutDatum{iv({2, 0}), Rat(0)}}};
}

}  // namespace momentcut::testing
