#pragma once

#include <nlohmann/json_fwd.hpp>

#include "momentcut/toric2d.hpp"

namespace momentcut {

using json = nlohmann::json;

// Input errors carry the offending field path (CLI exit code 2).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Rationals cross the wire as strings "p/q" (or "p"); plain JSON integers are
// also accepted on input.
Rat rat_from_json(const json& j, const std::string& field);
json rat_to_json(const Rat& q);

IntVec intvec_from_json(const json& j, const std::string& field);
RatVec ratvec_from_json(const json& j, const std::string& field);

// {"rank": k, "halfspaces": [{"normal": [...], "offset": "p/q"}, ...]} or
// {"vertices": [["p/q", ...], ...]}. Lower-dimensional polytopes serialize
// their hull equations as opposite halfspace pairs.
Polytope polytope_from_json(const json& j);
json polytope_to_json(const Polytope& p);

// {"cuts": [{"xi": [...], "eps": "p/q"}, ...]}
CutData cuts_from_json(const json& j);
json cuts_to_json(const CutData& c);

// {"cocycle": [{"i": 1, "j": 2, "xi": [...], "eps": "p/q"}, ...]}; indices on
// the wire are 1-based.
Cocycle cocycle_from_json(const json& j, std::size_t rank);

json fan_to_json(const Fan& f);
json subdivision_to_json(const Subdivision& s);
json delzant_report_to_json(const DelzantReport& r);
json quasi_regularity_report_to_json(const QuasiRegularityReport& r);
json lifted_polytope_to_json(const LiftedPolytope& l);
json fibration_report_to_json(const FibrationReport& r);
json divisor_degrees_to_json(const std::vector<DivisorDegreeEntry>& entries);
json edge_degrees_to_json(const std::vector<EdgeDegree>& entries);

struct JobSpec {
  Polytope polytope;
  CutData cuts;           // from "cuts" or cobounded from "cocycle"
  bool has_cuts = false;
  std::optional<Rat> a;
};

// Parses a job file; `need_cuts` makes the cuts/cocycle member mandatory.
// Enforces the configured ambient rank cap.
JobSpec jobspec_from_json(const json& j, bool need_cuts, std::size_t max_rank);

}  // namespace momentcut
