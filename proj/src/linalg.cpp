#include "momentcut/linalg.hpp"

#include <algorithm>

namespace momentcut {

IntMat identity_mat(std::size_t n) {
  IntMat m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat transpose(const IntMat& m, std::size_t cols) {
  IntMat t(cols, IntVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

RatMat to_rat(const IntMat& m) {
  RatMat r;
  r.reserve(m.size());
  for (const IntVec& row : m) r.push_back(to_rat(row));
  return r;
}

std::size_t rat_rank(RatMat a) {
  std::size_t rows = a.size();
  if (rows == 0) return 0;
  std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

std::size_t int_rank(const IntMat& a) { return rat_rank(to_rat(a)); }

Rat rat_det(RatMat a) {
  std::size_t n = a.size();
  for (const RatVec& row : a)
    if (row.size() != n) throw DimensionMismatchError("det of non-square matrix");
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != c) {
      std::swap(a[c], a[piv]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

Int int_det(const IntMat& a) {
  Rat d = rat_det(to_rat(a));
  return numerator(d);  // integer input keeps an integral determinant
}

std::optional<RatVec> rat_solve(const RatMat& a, const RatVec& b, std::size_t cols) {
  std::size_t rows = a.size();
  RatMat aug(rows, RatVec(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && aug[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(aug[r], aug[piv]);
    Rat inv = aug[r][c];
    for (std::size_t j = c; j <= cols; ++j) aug[r][j] /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      Rat f = aug[i][c];
      for (std::size_t j = c; j <= cols; ++j) aug[i][j] -= f * aug[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (aug[i][cols] != 0) return std::nullopt;  // inconsistent
  RatVec x(cols, Rat(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = aug[i][cols];
  return x;
}

RatMat rat_null_space(const RatMat& a, std::size_t cols) {
  RatMat m = a;
  std::size_t rows = m.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    Rat inv = m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  RatMat basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    RatVec v(cols, Rat(0));
    v[c] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

ExtGcd ext_gcd(Int a, Int b) {
  Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    Int q = a / b;
    Int r = a - q * b;
    a = b;
    b = r;
    Int s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    Int t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (a < 0) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  return {a, s0, t0};
}

HnfResult hnf(const IntMat& m, std::size_t cols) {
  std::size_t rows = m.size();
  HnfResult res;
  res.h = m;
  res.u = identity_mat(rows);
  auto row_combine = [&](std::size_t i, std::size_t j, const Int& a, const Int& b,
                         const Int& c, const Int& d) {
    // (row_i, row_j) <- (a*row_i + b*row_j, c*row_i + d*row_j); ad - bc = ±1
    for (IntMat* mat : {&res.h, &res.u}) {
      IntVec& ri = (*mat)[i];
      IntVec& rj = (*mat)[j];
      for (std::size_t t = 0; t < ri.size(); ++t) {
        Int x = a * ri[t] + b * rj[t];
        Int y = c * ri[t] + d * rj[t];
        ri[t] = x;
        rj[t] = y;
      }
    }
  };
  auto add_multiple = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (IntMat* mat : {&res.h, &res.u}) {
      for (std::size_t t = 0; t < (*mat)[dst].size(); ++t)
        (*mat)[dst][t] += f * (*mat)[src][t];
    }
  };
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(res.h[i], res.h[j]);
    std::swap(res.u[i], res.u[j]);
  };
  auto negate_row = [&](std::size_t i) {
    for (IntMat* mat : {&res.h, &res.u})
      for (Int& x : (*mat)[i]) x = -x;
  };

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && res.h[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) swap_rows(r, piv);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (res.h[i][c] == 0) continue;
      ExtGcd e = ext_gcd(res.h[r][c], res.h[i][c]);
      Int p = res.h[r][c] / e.g;
      Int q = res.h[i][c] / e.g;
      row_combine(r, i, e.s, e.t, -q, p);  // det = s*p + t*q = 1
    }
    if (res.h[r][c] < 0) negate_row(r);
    for (std::size_t i = 0; i < r; ++i) {
      if (res.h[i][c] == 0) continue;
      Int f = floor_div(res.h[i][c], res.h[r][c]);
      if (f != 0) add_multiple(i, r, -f);
    }
    ++r;
  }
  res.rank = r;
  return res;
}

IntMat left_kernel(const IntMat& m, std::size_t cols) {
  HnfResult res = hnf(m, cols);
  IntMat basis;
  for (std::size_t i = res.rank; i < m.size(); ++i) basis.push_back(res.u[i]);
  return basis;
}

IntMat right_kernel(const IntMat& m, std::size_t cols) {
  if (m.empty()) return identity_mat(cols);
  return left_kernel(transpose(m, cols), m.size());
}

}  // namespace momentcut
