#pragma once

#include <optional>

#include "momentcut/arith.hpp"

namespace momentcut {

// Matrices are row lists. Functions that can receive an empty matrix take the
// column count explicitly, since an empty row list carries no width.
using IntMat = std::vector<IntVec>;
using RatMat = std::vector<RatVec>;

IntMat identity_mat(std::size_t n);
IntMat transpose(const IntMat& m, std::size_t cols);
RatMat to_rat(const IntMat& m);

std::size_t rat_rank(RatMat a);
std::size_t int_rank(const IntMat& a);

// Determinant of a square matrix (fraction-free for the integer case).
Rat rat_det(RatMat a);
Int int_det(const IntMat& a);

// Any solution x of A x = b (rows of a are equations; x has `cols` entries).
std::optional<RatVec> rat_solve(const RatMat& a, const RatVec& b, std::size_t cols);

// Basis of { x : A x = 0 } over the rationals.
RatMat rat_null_space(const RatMat& a, std::size_t cols);

struct ExtGcd {
  Int g, s, t;  // g = s*a + t*b, g >= 0
};
ExtGcd ext_gcd(Int a, Int b);

// Row Hermite normal form: h = u * m with u unimodular; pivots positive,
// entries above each pivot reduced into [0, pivot), zero rows last.
struct HnfResult {
  IntMat h;
  IntMat u;
  std::size_t rank = 0;
};
HnfResult hnf(const IntMat& m, std::size_t cols);

// Lattice basis of { x in Z^rows : x m = 0 }; the result is saturated.
IntMat left_kernel(const IntMat& m, std::size_t cols);

// Lattice basis of { x in Z^cols : m x = 0 }; saturated. An empty matrix has
// the full ambient lattice as kernel.
IntMat right_kernel(const IntMat& m, std::size_t cols);

}  // namespace momentcut
