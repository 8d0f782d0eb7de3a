#pragma once

#include "momentcut/cutconfig.hpp"

namespace momentcut {

struct BoundViolatedError : std::runtime_error {
  Rat bound;
  explicit BoundViolatedError(Rat b)
      : std::runtime_error("height parameter must exceed " + rat_str(b)),
        bound(std::move(b)) {}
};

struct NotDelzantError : std::runtime_error {
  explicit NotDelzantError(const std::string& msg) : std::runtime_error(msg) {}
};

// Strict lower bound on admissible heights: -min over vertices of Delta of
// min_i L_i (the minimum of an affine function over a polytope sits at a
// vertex).
Rat min_a_bound(const Polytope& p, const CutData& c);

// Heights at which the top hyperplane would meet a lower-boundary vertex;
// the maximum equals min_a_bound, so heights above the bound are never
// critical.
std::vector<Rat> critical_heights(const Polytope& p, const CutData& c);

// The polytope between the graph of eta -> -min_i L_i(eta) and the
// hyperplane u = a, in ambient rank k+1.
struct LiftedPolytope {
  Polytope polytope;
  Rat a;
  Polytope base;
  std::map<int, Face> piece_faces;  // graph face over each nonempty Delta_i
  Face top_face;                    // the face in {u = a}
  std::vector<Rat> criticals;       // diagnostic: heights of graph vertices
};

LiftedPolytope lift(const Polytope& p, const CutData& c, const Rat& a);

struct Fan {
  std::vector<IntVec> rays;                      // primitive inward facet normals
  std::vector<std::vector<std::size_t>> maximal_cones;  // ray index sets per vertex
};

// Inner normal fan of a full-dimensional Delzant polytope; every maximal cone
// is unimodular. Throws NotDelzantError.
Fan normal_fan(const Polytope& p);

// Cones of the rank-1 fan a lifted fan may project onto.
enum class ConeImage { NonNeg, NonPos, Zero };

struct FibrationReport {
  bool compatible = false;
  // nullopt marks a cone whose rays mix signs in the last coordinate.
  std::vector<std::optional<ConeImage>> cone_images;
};

// Compatibility of the last-coordinate projection with the fan structure:
// within every maximal cone the last coordinates of the rays must share a
// sign (or all vanish).
FibrationReport fan_fibration(const Fan& f);

FibrationReport check_fibration(const LiftedPolytope& l);

}  // namespace momentcut
