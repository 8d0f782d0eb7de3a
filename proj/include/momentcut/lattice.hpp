#pragma once

#include "momentcut/linalg.hpp"

namespace momentcut {

struct ZeroVectorError : std::invalid_argument {
  explicit ZeroVectorError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct RankMismatchError : std::invalid_argument {
  explicit RankMismatchError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct NotIndependentError : std::invalid_argument {
  explicit NotIndependentError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A sublattice of Z^ambient_rank given by a Q-linearly-independent row basis.
struct Sublattice {
  std::size_t ambient_rank = 0;
  IntMat basis;
};

// gcd of the entries is 1. Throws ZeroVectorError on the zero vector.
bool is_primitive(const IntVec& xi);

struct Saturation {
  Sublattice lattice;  // canonical (HNF) basis of Span_R(gens) ∩ Z^k
  Int index;           // [saturation : Z-span of gens], always finite
};

// Saturation of the span of an arbitrary generating set (dependencies and
// the empty set allowed).
Saturation saturate(const IntMat& gens, std::size_t ambient_rank);

// True iff `vecs` is a Z-basis of the ambient lattice (determinant ±1).
// Throws RankMismatchError unless vecs.size() == ambient_rank.
bool is_z_basis(const IntMat& vecs, std::size_t ambient_rank);

// Decides whether the internal direct sum of part_a's lattice and the Z-span
// of gens_b is saturated in the ambient lattice. Throws NotIndependentError
// when the combined rows are Q-linearly dependent.
bool direct_sum_equals_saturation(const Sublattice& part_a, const IntMat& gens_b);

// Equality of sublattices via mutual HNF comparison.
bool lattice_equal(const Sublattice& a, const Sublattice& b);

}  // namespace momentcut
