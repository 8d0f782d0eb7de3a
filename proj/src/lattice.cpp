#include "momentcut/lattice.hpp"


namespace momentcut {

bool is_primitive(const IntVec& xi) {
  if (is_zero(xi)) throw ZeroVectorError("is_primitive: zero vector");
  return vec_gcd(xi) == 1;
}

namespace {

IntMat hnf_rows(const IntMat& m, std::size_t cols) {
  HnfResult res = hnf(m, cols);
  res.h.resize(res.rank);
  return res.h;
}

}  // namespace

Saturation saturate(const IntMat& gens, std::size_t ambient_rank) {
  for (const IntVec& g : gens)
    if (g.size() != ambient_rank)
      throw DimensionMismatchError("saturate: generator length != ambient rank");

  Saturation out;
  out.lattice.ambient_rank = ambient_rank;
  IntMat span_basis = hnf_rows(gens, ambient_rank);
  if (span_basis.empty()) {
    out.index = 1;
    return out;
  }
  // Saturation = double integer orthogonal complement; kernels of integer
  // matrices are saturated by construction.
  IntMat complement = right_kernel(span_basis, ambient_rank);
  IntMat sat = complement.empty() ? identity_mat(ambient_rank)
                                  : right_kernel(complement, ambient_rank);
  sat = hnf_rows(sat, ambient_rank);
  if (sat.size() != span_basis.size())
    throw std::logic_error("saturate: rank drift between span and saturation");

  // Index = |det C| where span_basis = C * sat.
  RatMat sat_cols = to_rat(transpose(sat, ambient_rank));
  RatMat coeffs;
  for (const IntVec& row : span_basis) {
    auto c = rat_solve(sat_cols, to_rat(row), sat.size());
    if (!c.has_value())
      throw std::logic_error("saturate: span basis not inside the saturation");
    coeffs.push_back(*c);
  }
  Rat d = rat_det(coeffs);
  if (denominator(d) != 1 || d == 0)
    throw std::logic_error("saturate: non-integral index");
  out.lattice.basis = std::move(sat);
  out.index = abs(numerator(d));
  return out;
}

bool is_z_basis(const IntMat& vecs, std::size_t ambient_rank) {
  if (vecs.size() != ambient_rank)
    throw RankMismatchError("is_z_basis: expected " + std::to_string(ambient_rank) +
                            " vectors, got " + std::to_string(vecs.size()));
  for (const IntVec& v : vecs)
    if (v.size() != ambient_rank)
      throw DimensionMismatchError("is_z_basis: vector length != ambient rank");
  Int d = int_det(vecs);
  return d == 1 || d == -1;
}

bool direct_sum_equals_saturation(const Sublattice& part_a, const IntMat& gens_b) {
  IntMat combined = part_a.basis;
  combined.insert(combined.end(), gens_b.begin(), gens_b.end());
  if (int_rank(combined) != combined.size())
    throw NotIndependentError("direct_sum_equals_saturation: dependent generators");
  return saturate(combined, part_a.ambient_rank).index == 1;
}

bool lattice_equal(const Sublattice& a, const Sublattice& b) {
  if (a.ambient_rank != b.ambient_rank) return false;
  return hnf_rows(a.basis, a.ambient_rank) == hnf_rows(b.basis, b.ambient_rank);
}

}  // namespace momentcut
