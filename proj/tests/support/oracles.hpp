#pragma once

// Brute-force reference implementations used only by tests. These stay
// independent of the library's HNF/saturation path so the two can disagree.

#include <optional>
#include <vector>

#include "momentcut/lattice.hpp"

namespace momentcut::testing {

// Membership of x in the Z-span of gens, by enumerating small coefficient
// vectors in [-bound, bound]^n.
inline bool zspan_member_bruteforce(const IntMat& gens, const IntVec& x, int bound) {
  std::size_t n = gens.size();
  if (n == 0) return is_zero(x);
  std::vector<int> coeff(n, -bound);
  while (true) {
    IntVec acc(x.size(), 0);
    for (std::size_t i = 0; i < n; ++i)
      acc = add(acc, scale(gens[i], Int(coeff[i])));
    if (acc == x) return true;
    std::size_t pos = 0;
    while (pos < n && coeff[pos] == bound) coeff[pos++] = -bound;
    if (pos == n) return false;
    ++coeff[pos];
  }
}

// Number of lattice points in the half-open fundamental parallelepiped
// { sum t_i b_i : 0 <= t_i < 1 } of an independent basis. Equals the index of
// the Z-span inside the saturation of the span.
inline Int parallelepiped_index(const IntMat& basis, std::size_t ambient_rank) {
  std::size_t r = basis.size();
  if (r == 0) return 1;

  // Chart: r coordinates on which the basis has full rank, with the inverse
  // precomputed so each candidate point costs one small back-substitution.
  std::vector<std::size_t> chart;
  {
    RatMat m = to_rat(basis);
    std::size_t row = 0;
    for (std::size_t c = 0; c < ambient_rank && row < r; ++c) {
      std::size_t piv = row;
      while (piv < r && m[piv][c] == 0) ++piv;
      if (piv == r) continue;
      std::swap(m[row], m[piv]);
      for (std::size_t i = 0; i < r; ++i) {
        if (i == row || m[i][c] == 0) continue;
        Rat f = m[i][c] / m[row][c];
        for (std::size_t j = c; j < ambient_rank; ++j) m[i][j] -= f * m[row][j];
      }
      chart.push_back(c);
      ++row;
    }
    if (chart.size() != r) throw NotIndependentError("oracle: dependent basis");
  }
  // Solve t from the chart coordinates: M t = x_S with M[s][i] = basis[i][chart[s]].
  RatMat m_chart(r, RatVec(r));
  for (std::size_t s = 0; s < r; ++s)
    for (std::size_t i = 0; i < r; ++i) m_chart[s][i] = Rat(basis[i][chart[s]]);

  // Bounding box of the closed parallelepiped.
  std::vector<Int> lo(ambient_rank, 0), hi(ambient_rank, 0);
  for (std::size_t j = 0; j < ambient_rank; ++j) {
    for (std::size_t i = 0; i < r; ++i) {
      if (basis[i][j] < 0)
        lo[j] += basis[i][j];
      else
        hi[j] += basis[i][j];
    }
  }

  Int count = 0;
  IntVec x(ambient_rank);
  std::vector<Int> cur = lo;
  while (true) {
    for (std::size_t j = 0; j < ambient_rank; ++j) x[j] = cur[j];
    RatVec rhs(r);
    for (std::size_t s = 0; s < r; ++s) rhs[s] = Rat(x[chart[s]]);
    auto t = rat_solve(m_chart, rhs, r);
    if (t.has_value()) {
      bool in_cell = true;
      for (const Rat& ti : *t)
        if (ti < 0 || ti >= 1) {
          in_cell = false;
          break;
        }
      if (in_cell) {
        // verify the remaining coordinates (x must lie in the span)
        RatVec recon(ambient_rank, Rat(0));
        for (std::size_t i = 0; i < r; ++i)
          recon = add(recon, scale(to_rat(basis[i]), (*t)[i]));
        bool match = true;
        for (std::size_t j = 0; j < ambient_rank; ++j)
          if (recon[j] != Rat(x[j])) {
            match = false;
            break;
          }
        if (match) ++count;
      }
    }
    std::size_t pos = 0;
    while (pos < ambient_rank && cur[pos] == hi[pos]) cur[pos] = lo[pos], ++pos;
    if (pos == ambient_rank) break;
    ++cur[pos];
  }
  return count;
}

}  // namespace momentcut::testing
