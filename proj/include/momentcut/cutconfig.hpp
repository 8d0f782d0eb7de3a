#pragma once

#include <map>
#include <optional>

#include "momentcut/delzant.hpp"

namespace momentcut {

struct NotACocycleError : std::runtime_error {
  explicit NotACocycleError(const std::string& msg) : std::runtime_error(msg) {}
};

struct RankPreconditionFailedError : std::runtime_error {
  explicit RankPreconditionFailedError(const std::string& msg)
      : std::runtime_error(msg) {}
};

// One cut (xi, eps), defining the affine functional L(eta) = <eta, xi> - eps.
struct CutDatum {
  IntVec xi;
  Rat eps;
  bool operator==(const CutDatum&) const = default;
};

struct CutData {
  std::vector<CutDatum> data;  // N >= 1

  std::size_t size() const { return data.size(); }
  std::size_t rank() const { return data.at(0).xi.size(); }
  bool operator==(const CutData&) const = default;
};

Rat eval_L(const CutDatum& d, const RatVec& eta);

// Index sets are sorted 0-based index vectors into CutData::data.
using IndexSet = std::vector<int>;

// The family of pieces Delta_I over all nonempty I, with the original
// indexing kept stable even when some Delta_i is empty.
struct Subdivision {
  Polytope ambient;
  CutData cuts;
  std::map<IndexSet, std::optional<Polytope>> pieces;

  const std::optional<Polytope>& piece(const IndexSet& I) const { return pieces.at(I); }
  // Indices i with Delta_i nonempty.
  std::vector<int> nonempty_singles() const;
  // Indices i with a nonempty Delta_i of lower dimension than the ambient.
  std::vector<int> degenerate_singles() const;
  // Union of the vertex sets of all nonempty Delta_i, deduplicated.
  std::vector<RatVec> piece_vertices() const;
};

Subdivision subdivide(const Polytope& p, const CutData& c);

struct ActiveSet {
  RatVec point;
  std::vector<int> indices;  // argmin set of {L_i(point)}, sorted
};

ActiveSet active_set(const CutData& c, const RatVec& v, const Polytope& p);

struct DetransViolation {
  RatVec vertex;
  std::size_t active_count;  // |I_v|
  int face_dim;              // d_v(Delta)
};

// Tests |I_v| <= d_v(Delta) + 1 at every vertex of every nonempty piece.
std::vector<DetransViolation> check_detrans(const Subdivision& s);

struct RankCriterionCheck {
  RatVec vertex;
  bool span_rank_ok = false;    // dim Span{xi_i - xi_j : i,j in I_v} == |I_v| - 1
  bool annihilator_ok = false;  // t_v ∩ Span{xi_i - xi_j} == {0}
  bool ok() const { return span_rank_ok && annihilator_ok; }
};

std::vector<RankCriterionCheck> check_rank_criterion(const Subdivision& s);

enum class DelzantFailureReason { NotDelzant, Degenerate };

struct PieceDelzantFailure {
  int piece = -1;
  DelzantFailureReason reason = DelzantFailureReason::NotDelzant;
  std::vector<RatVec> bad_vertices;
};

struct QuasiRegularityReport {
  bool is_quasi_regular = false;
  bool ambient_delzant = false;  // warning-level precondition
  std::vector<int> empty_pieces;
  std::vector<PieceDelzantFailure> delzant_failures;
  std::vector<std::pair<int, int>> primitivity_failures;
  std::vector<DetransViolation> detrans_failures;
};

QuasiRegularityReport is_quasi_regular(const Subdivision& s);
QuasiRegularityReport is_quasi_regular(const Polytope& p, const CutData& c);

// The lattice-saturation criterion at one vertex: with i a chosen base index
// of I_v, decides Λ ∩ (t_v + Span{xi_i - xi_j}) == Λ_{t_v} ⊕ ⊕_j Z(xi_i - xi_j).
// Throws RankPreconditionFailedError when the rank criterion fails at v.
bool lattice_criterion_at(const Subdivision& s, const RatVec& v, int base_index);

struct LatticeCriterionCheck {
  RatVec vertex;
  enum class Status { True, False, RankPreconditionFailed } status;
};

// Bulk evaluation at every piece vertex, using the smallest active index as
// base; base-independence is a tested property.
std::vector<LatticeCriterionCheck> lattice_criterion_quasi_regular(const Subdivision& s);

// One-cocycle (xi_ij, eps_ij) on ordered pairs, with the convention
// (xi_ij, eps_ij) = (xi_j, eps_j) - (xi_i, eps_i) for a cobounding tuple.
struct CocycleEntry {
  int i = 0;
  int j = 0;
  IntVec xi;
  Rat eps;
};

struct Cocycle {
  std::size_t n = 0;     // number of cut indices
  std::size_t rank = 0;  // ambient lattice rank
  std::vector<CocycleEntry> entries;
};

// Returns the cobounding tuple normalized by (xi_1, eps_1) = (0, 0). Any two
// coboundaries differ by a constant shift, which leaves every Delta_I fixed.
CutData cobound(const Cocycle& c);

// The cocycle of differences of a tuple, on all pairs i < j.
Cocycle cocycle_of(const CutData& c);

// Shifts every (xi_i, eps_i) by a common (xi, eps).
CutData shifted(const CutData& c, const IntVec& xi, const Rat& eps);

}  // namespace momentcut
