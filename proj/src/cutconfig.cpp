#include "momentcut/cutconfig.hpp"

#include <algorithm>

namespace momentcut {

Rat eval_L(const CutDatum& d, const RatVec& eta) {
  if (d.xi.size() != eta.size())
    throw DimensionMismatchError("eval_L: dimension mismatch");
  return dot(eta, d.xi) - d.eps;
}

std::vector<int> Subdivision::nonempty_singles() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(cuts.size()); ++i)
    if (pieces.at({i}).has_value()) out.push_back(i);
  return out;
}

std::vector<int> Subdivision::degenerate_singles() const {
  std::vector<int> out;
  for (int i : nonempty_singles())
    if (pieces.at({i})->dim() < ambient.dim()) out.push_back(i);
  return out;
}

std::vector<RatVec> Subdivision::piece_vertices() const {
  std::vector<RatVec> out;
  for (int i : nonempty_singles()) {
    const Polytope& p = *pieces.at({i});
    out.insert(out.end(), p.vertices().begin(), p.vertices().end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Subdivision subdivide(const Polytope& p, const CutData& c) {
  if (c.size() == 0) throw std::invalid_argument("subdivide: empty cut data");
  if (c.rank() != p.rank())
    throw DimensionMismatchError("subdivide: cut rank != polytope rank");

  Subdivision s;
  s.ambient = p;
  s.cuts = c;
  const int n = static_cast<int>(c.size());
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    IndexSet I;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) I.push_back(i);
    // Delta_I = { eta in Delta : L_i(eta) <= L_j(eta) for i in I, j in [N] }
    std::vector<HalfSpace> walls;
    bool infeasible = false;
    for (int i : I) {
      for (int j = 0; j < n && !infeasible; ++j) {
        if (j == i) continue;
        IntVec normal = sub(c.data[j].xi, c.data[i].xi);
        Rat off = c.data[j].eps - c.data[i].eps;
        if (is_zero(normal)) {
          if (off > 0) infeasible = true;  // constant constraint 0 >= off
          continue;
        }
        walls.emplace_back(std::move(normal), std::move(off));
      }
    }
    if (infeasible)
      s.pieces.emplace(std::move(I), std::nullopt);
    else
      s.pieces.emplace(std::move(I), Polytope::intersect(p, walls));
  }
  return s;
}

ActiveSet active_set(const CutData& c, const RatVec& v, const Polytope& p) {
  if (!p.contains(v)) throw NotContainedError("active_set: point not in polytope");
  ActiveSet out;
  out.point = v;
  Rat best;
  for (int i = 0; i < static_cast<int>(c.size()); ++i) {
    Rat val = eval_L(c.data[i], v);
    if (i == 0 || val < best) best = val;
  }
  for (int i = 0; i < static_cast<int>(c.size()); ++i)
    if (eval_L(c.data[i], v) == best) out.indices.push_back(i);
  return out;
}

std::vector<DetransViolation> check_detrans(const Subdivision& s) {
  std::vector<DetransViolation> out;
  for (const RatVec& v : s.piece_vertices()) {
    ActiveSet as = active_set(s.cuts, v, s.ambient);
    int dv = s.ambient.minimal_face(v).dim;
    if (static_cast<int>(as.indices.size()) > dv + 1)
      out.push_back({v, as.indices.size(), dv});
  }
  return out;
}

namespace {

// Rows spanning Span{xi_i - xi_j : i, j in I_v}, anchored at the base index.
IntMat difference_rows(const CutData& c, const std::vector<int>& active, int base) {
  IntMat rows;
  for (int j : active) {
    if (j == base) continue;
    rows.push_back(sub(c.data[base].xi, c.data[j].xi));
  }
  return rows;
}

// Saturated basis of Λ_{t_v}: the annihilator of the direction space of the
// minimal face of Delta containing v.
IntMat annihilator_basis(const Subdivision& s, const RatVec& v) {
  Face face = s.ambient.minimal_face(v);
  IntMat dirs;
  for (const RatVec& w : face.vertices) {
    IntVec d = primitive_direction(sub(w, v));
    if (!is_zero(d)) dirs.push_back(std::move(d));
  }
  return right_kernel(dirs, s.ambient.rank());
}

RankCriterionCheck rank_criterion_at(const Subdivision& s, const RatVec& v) {
  RankCriterionCheck chk;
  chk.vertex = v;
  ActiveSet as = active_set(s.cuts, v, s.ambient);
  int base = as.indices.front();
  IntMat span_rows = difference_rows(s.cuts, as.indices, base);
  std::size_t span_rank = int_rank(span_rows);
  chk.span_rank_ok = (span_rank == as.indices.size() - 1);

  IntMat tv = annihilator_basis(s, v);
  IntMat stacked = tv;
  stacked.insert(stacked.end(), span_rows.begin(), span_rows.end());
  chk.annihilator_ok = (int_rank(stacked) == tv.size() + span_rank);
  return chk;
}

}  // namespace

std::vector<RankCriterionCheck> check_rank_criterion(const Subdivision& s) {
  std::vector<RankCriterionCheck> out;
  for (const RatVec& v : s.piece_vertices()) out.push_back(rank_criterion_at(s, v));
  return out;
}

namespace {

// A lower-dimensional piece escapes the Degenerate verdict only when it is a
// face of Delta shared with some full-dimensional piece.
bool degenerate_excepted(const Subdivision& s, int i) {
  const Polytope& piece = *s.piece({i});
  std::vector<std::size_t> common = s.ambient.tight_at(piece.vertices().front());
  for (const RatVec& w : piece.vertices()) {
    std::vector<std::size_t> tw = s.ambient.tight_at(w);
    std::vector<std::size_t> merged;
    std::set_intersection(common.begin(), common.end(), tw.begin(), tw.end(),
                          std::back_inserter(merged));
    common = std::move(merged);
  }
  // The face of Delta spanned by the common tight set of the whole piece.
  std::vector<RatVec> face_vertices;
  for (const RatVec& u : s.ambient.vertices()) {
    bool on = true;
    for (std::size_t idx : common)
      if (s.ambient.halfspaces()[idx].slack(u) != 0) {
        on = false;
        break;
      }
    if (on) face_vertices.push_back(u);
  }
  if (face_vertices.empty()) return false;
  Polytope face_poly = Polytope::from_vertices(s.ambient.rank(), face_vertices);
  if (!face_poly.same_set(piece)) return false;
  for (int j : s.nonempty_singles()) {
    if (j == i) continue;
    const Polytope& other = *s.piece({j});
    if (other.dim() != s.ambient.dim()) continue;
    bool inside = true;
    for (const RatVec& w : piece.vertices())
      if (!other.contains(w)) {
        inside = false;
        break;
      }
    if (inside) return true;
  }
  return false;
}

}  // namespace

QuasiRegularityReport is_quasi_regular(const Subdivision& s) {
  QuasiRegularityReport rep;
  rep.ambient_delzant = is_delzant(s.ambient).is_delzant;

  const int n = static_cast<int>(s.cuts.size());
  std::vector<int> nonempty = s.nonempty_singles();
  for (int i = 0; i < n; ++i)
    if (!s.piece({i}).has_value()) rep.empty_pieces.push_back(i);

  for (int i : nonempty) {
    const Polytope& piece = *s.piece({i});
    if (piece.dim() < s.ambient.dim() && !degenerate_excepted(s, i)) {
      rep.delzant_failures.push_back({i, DelzantFailureReason::Degenerate, {}});
      continue;
    }
    DelzantReport dr = is_delzant(piece);
    if (!dr.is_delzant) {
      PieceDelzantFailure f;
      f.piece = i;
      f.reason = DelzantFailureReason::NotDelzant;
      for (const SmoothnessReport& vr : dr.vertex_reports)
        if (!vr.is_smooth) f.bad_vertices.push_back(vr.vertex);
      rep.delzant_failures.push_back(std::move(f));
    }
  }

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!s.piece({i, j}).has_value()) continue;
      IntVec diff = sub(s.cuts.data[i].xi, s.cuts.data[j].xi);
      bool primitive = !is_zero(diff) && vec_gcd(diff) == 1;
      if (!primitive) rep.primitivity_failures.emplace_back(i, j);
    }
  }

  rep.detrans_failures = check_detrans(s);
  rep.is_quasi_regular = rep.delzant_failures.empty() &&
                         rep.primitivity_failures.empty() &&
                         rep.detrans_failures.empty();
  return rep;
}

QuasiRegularityReport is_quasi_regular(const Polytope& p, const CutData& c) {
  return is_quasi_regular(subdivide(p, c));
}

bool lattice_criterion_at(const Subdivision& s, const RatVec& v, int base_index) {
  ActiveSet as = active_set(s.cuts, v, s.ambient);
  if (std::find(as.indices.begin(), as.indices.end(), base_index) == as.indices.end())
    throw std::invalid_argument("lattice_criterion_at: base index not active");
  RankCriterionCheck rc = rank_criterion_at(s, v);
  if (!rc.ok())
    throw RankPreconditionFailedError("rank criterion fails at " + vec_str(v));
  if (as.indices.size() == 1) return true;  // no differences: vacuous

  Sublattice tv;
  tv.ambient_rank = s.ambient.rank();
  tv.basis = annihilator_basis(s, v);
  IntMat gens = difference_rows(s.cuts, as.indices, base_index);
  return direct_sum_equals_saturation(tv, gens);
}

std::vector<LatticeCriterionCheck> lattice_criterion_quasi_regular(const Subdivision& s) {
  std::vector<LatticeCriterionCheck> out;
  for (const RatVec& v : s.piece_vertices()) {
    LatticeCriterionCheck chk;
    chk.vertex = v;
    ActiveSet as = active_set(s.cuts, v, s.ambient);
    try {
      chk.status = lattice_criterion_at(s, v, as.indices.front())
                       ? LatticeCriterionCheck::Status::True
                       : LatticeCriterionCheck::Status::False;
    } catch (const RankPreconditionFailedError&) {
      chk.status = LatticeCriterionCheck::Status::RankPreconditionFailed;
    }
    out.push_back(std::move(chk));
  }
  return out;
}

CutData cobound(const Cocycle& c) {
  const int n = static_cast<int>(c.n);
  if (n < 1) throw NotACocycleError("cocycle with no indices");
  std::vector<std::vector<std::optional<CutDatum>>> table(
      n, std::vector<std::optional<CutDatum>>(n));
  for (int i = 0; i < n; ++i) table[i][i] = CutDatum{IntVec(c.rank, 0), Rat(0)};

  auto put = [&](int i, int j, CutDatum d) {
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw NotACocycleError("cocycle index out of range");
    if (table[i][j].has_value()) {
      if (!(*table[i][j] == d))
        throw NotACocycleError("inconsistent duplicate entry for pair (" +
                               std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      return;
    }
    table[i][j] = d;
    table[j][i] = CutDatum{neg(d.xi), -d.eps};  // antisymmetry
  };
  for (const CocycleEntry& e : c.entries) {
    if (e.xi.size() != c.rank) throw DimensionMismatchError("cocycle entry rank");
    put(e.i, e.j, CutDatum{e.xi, e.eps});
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!table[i][j].has_value())
        throw NotACocycleError("missing pair (" + std::to_string(i + 1) + "," +
                               std::to_string(j + 1) + ")");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        IntVec xi_sum = add(table[i][j]->xi, table[j][k]->xi);
        Rat eps_sum = table[i][j]->eps + table[j][k]->eps;
        if (xi_sum != table[i][k]->xi || eps_sum != table[i][k]->eps)
          throw NotACocycleError("cocycle identity fails on triple (" +
                                 std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                 "," + std::to_string(k + 1) + ")");
      }
    }
  }
  CutData out;
  for (int m = 0; m < n; ++m) out.data.push_back(*table[0][m]);
  return out;
}

Cocycle cocycle_of(const CutData& c) {
  Cocycle out;
  out.n = c.size();
  out.rank = c.rank();
  for (int i = 0; i < static_cast<int>(c.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(c.size()); ++j)
      out.entries.push_back(
          {i, j, sub(c.data[j].xi, c.data[i].xi), c.data[j].eps - c.data[i].eps});
  return out;
}

CutData shifted(const CutData& c, const IntVec& xi, const Rat& eps) {
  CutData out = c;
  for (CutDatum& d : out.data) {
    d.xi = add(d.xi, xi);
    d.eps += eps;
  }
  return out;
}

}  // namespace momentcut
