#include "momentcut/json_io.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace momentcut {

Rat rat_from_json(const json& j, const std::string& field) {
  try {
    if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
    if (j.is_string()) return parse_rat(j.get<std::string>());
  } catch (const RatParseError& e) {
    throw ParseError(field + ": " + e.what());
  }
  throw ParseError(field + ": expected a rational string \"p/q\" or an integer");
}

json rat_to_json(const Rat& q) { return rat_str(q); }

IntVec intvec_from_json(const json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError(field + ": expected an array of integers");
  IntVec v;
  for (std::size_t t = 0; t < j.size(); ++t) {
    const json& x = j[t];
    std::string at = field + "[" + std::to_string(t) + "]";
    if (x.is_number_integer()) {
      v.emplace_back(x.get<long long>());
    } else if (x.is_string()) {
      Rat q = rat_from_json(x, at);
      if (denominator(q) != 1) throw ParseError(at + ": expected an integer");
      v.push_back(numerator(q));
    } else {
      throw ParseError(at + ": expected an integer");
    }
  }
  return v;
}

RatVec ratvec_from_json(const json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError(field + ": expected an array of rationals");
  RatVec v;
  for (std::size_t t = 0; t < j.size(); ++t)
    v.push_back(rat_from_json(j[t], field + "[" + std::to_string(t) + "]"));
  return v;
}

namespace {

json ratvec_to_json(const RatVec& v) {
  json out = json::array();
  for (const Rat& x : v) out.push_back(rat_str(x));
  return out;
}

json intvec_to_json(const IntVec& v) {
  json out = json::array();
  for (const Int& x : v) out.push_back(x.str());
  return out;
}

json halfspace_to_json(const HalfSpace& h) {
  return {{"normal", intvec_to_json(h.normal)}, {"offset", rat_str(h.offset)}};
}

json face_to_json(const Face& f) {
  json verts = json::array();
  for (const RatVec& v : f.vertices) verts.push_back(ratvec_to_json(v));
  json active = json::array();
  for (std::size_t i : f.active) active.push_back(i);
  return {{"active", active}, {"vertices", verts}, {"dim", f.dim}};
}

std::string index_set_str(const IndexSet& I) {
  std::string s;
  for (std::size_t t = 0; t < I.size(); ++t) {
    if (t) s += ",";
    s += std::to_string(I[t] + 1);
  }
  return s;
}

}  // namespace

Polytope polytope_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("polytope: expected an object");
  if (j.contains("halfspaces")) {
    if (!j.contains("rank") || !j["rank"].is_number_integer())
      throw ParseError("polytope.rank: required with halfspaces");
    long long rank = j["rank"].get<long long>();
    if (rank < 1) throw ParseError("polytope.rank: must be >= 1");
    const json& hs = j["halfspaces"];
    if (!hs.is_array() || hs.empty())
      throw ParseError("polytope.halfspaces: expected a nonempty array");
    std::vector<HalfSpace> list;
    for (std::size_t t = 0; t < hs.size(); ++t) {
      std::string at = "polytope.halfspaces[" + std::to_string(t) + "]";
      if (!hs[t].is_object() || !hs[t].contains("normal") || !hs[t].contains("offset"))
        throw ParseError(at + ": expected {normal, offset}");
      IntVec n = intvec_from_json(hs[t]["normal"], at + ".normal");
      if (n.size() != static_cast<std::size_t>(rank))
        throw ParseError(at + ".normal: length != rank");
      if (is_zero(n)) throw ParseError(at + ".normal: zero vector");
      Rat off = rat_from_json(hs[t]["offset"], at + ".offset");
      list.emplace_back(std::move(n), std::move(off));
    }
    try {
      return Polytope::from_halfspaces(static_cast<std::size_t>(rank), list);
    } catch (const EmptyError&) {
      throw ParseError("polytope.halfspaces: feasible set is empty");
    } catch (const UnboundedError&) {
      throw ParseError("polytope.halfspaces: feasible set is unbounded");
    }
  }
  if (j.contains("vertices")) {
    const json& vs = j["vertices"];
    if (!vs.is_array() || vs.empty())
      throw ParseError("polytope.vertices: expected a nonempty array");
    std::vector<RatVec> pts;
    for (std::size_t t = 0; t < vs.size(); ++t)
      pts.push_back(ratvec_from_json(vs[t], "polytope.vertices[" + std::to_string(t) + "]"));
    std::size_t rank = pts[0].size();
    if (rank == 0) throw ParseError("polytope.vertices[0]: empty point");
    for (const RatVec& p : pts)
      if (p.size() != rank) throw ParseError("polytope.vertices: inconsistent lengths");
    if (j.contains("rank") && j["rank"].get<long long>() != static_cast<long long>(rank))
      throw ParseError("polytope.rank: does not match vertex length");
    return Polytope::from_vertices(rank, std::move(pts));
  }
  throw ParseError("polytope: need either halfspaces or vertices");
}

json polytope_to_json(const Polytope& p) {
  json hs = json::array();
  for (const HalfSpace& h : p.halfspaces()) hs.push_back(halfspace_to_json(h));
  for (const HalfSpace& e : p.equations()) {
    hs.push_back(halfspace_to_json(e));
    hs.push_back(halfspace_to_json(e.flipped()));
  }
  json verts = json::array();
  for (const RatVec& v : p.vertices()) verts.push_back(ratvec_to_json(v));
  return {{"rank", p.rank()},
          {"dim", p.dim()},
          {"halfspaces", hs},
          {"vertices", verts}};
}

CutData cuts_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw ParseError("cuts: expected a nonempty array");
  CutData c;
  std::size_t rank = 0;
  for (std::size_t t = 0; t < j.size(); ++t) {
    std::string at = "cuts[" + std::to_string(t) + "]";
    if (!j[t].is_object() || !j[t].contains("xi") || !j[t].contains("eps"))
      throw ParseError(at + ": expected {xi, eps}");
    CutDatum d;
    d.xi = intvec_from_json(j[t]["xi"], at + ".xi");
    d.eps = rat_from_json(j[t]["eps"], at + ".eps");
    if (t == 0)
      rank = d.xi.size();
    else if (d.xi.size() != rank)
      throw ParseError(at + ".xi: inconsistent length");
    c.data.push_back(std::move(d));
  }
  if (rank == 0) throw ParseError("cuts[0].xi: empty vector");
  return c;
}

json cuts_to_json(const CutData& c) {
  json out = json::array();
  for (const CutDatum& d : c.data)
    out.push_back({{"xi", intvec_to_json(d.xi)}, {"eps", rat_str(d.eps)}});
  return out;
}

Cocycle cocycle_from_json(const json& j, std::size_t rank) {
  if (!j.is_array() || j.empty())
    throw ParseError("cocycle: expected a nonempty array");
  Cocycle c;
  c.rank = rank;
  int max_index = 0;
  for (std::size_t t = 0; t < j.size(); ++t) {
    std::string at = "cocycle[" + std::to_string(t) + "]";
    const json& e = j[t];
    if (!e.is_object() || !e.contains("i") || !e.contains("j") ||
        !e.contains("xi") || !e.contains("eps"))
      throw ParseError(at + ": expected {i, j, xi, eps}");
    CocycleEntry en;
    if (!e["i"].is_number_integer() || !e["j"].is_number_integer())
      throw ParseError(at + ": i and j must be integers");
    en.i = e["i"].get<int>() - 1;
    en.j = e["j"].get<int>() - 1;
    if (en.i < 0 || en.j < 0) throw ParseError(at + ": indices are 1-based");
    en.xi = intvec_from_json(e["xi"], at + ".xi");
    if (en.xi.size() != rank) throw ParseError(at + ".xi: length != polytope rank");
    en.eps = rat_from_json(e["eps"], at + ".eps");
    max_index = std::max({max_index, en.i, en.j});
    c.entries.push_back(std::move(en));
  }
  c.n = static_cast<std::size_t>(max_index) + 1;
  return c;
}

json fan_to_json(const Fan& f) {
  json rays = json::array();
  for (const IntVec& r : f.rays) rays.push_back(intvec_to_json(r));
  json cones = json::array();
  for (const auto& cone : f.maximal_cones) {
    json c = json::array();
    for (std::size_t i : cone) c.push_back(i);
    cones.push_back(c);
  }
  return {{"rays", rays}, {"cones", cones}};
}

json subdivision_to_json(const Subdivision& s) {
  json pieces = json::array();
  for (const auto& [I, piece] : s.pieces) {
    json entry;
    json idx = json::array();
    for (int i : I) idx.push_back(i + 1);
    entry["indices"] = idx;
    entry["label"] = "Delta_{" + index_set_str(I) + "}";
    if (piece.has_value()) {
      entry["empty"] = false;
      entry["dim"] = piece->dim();
      entry["degenerate"] = piece->dim() < s.ambient.dim();
      json verts = json::array();
      for (const RatVec& v : piece->vertices()) verts.push_back(ratvec_to_json(v));
      entry["vertices"] = verts;
    } else {
      entry["empty"] = true;
    }
    pieces.push_back(std::move(entry));
  }
  return {{"ambient", polytope_to_json(s.ambient)},
          {"cuts", cuts_to_json(s.cuts)},
          {"pieces", pieces}};
}

json delzant_report_to_json(const DelzantReport& r) {
  json verts = json::array();
  for (const SmoothnessReport& v : r.vertex_reports) {
    json dirs = json::array();
    for (const IntVec& u : v.edge_directions) dirs.push_back(intvec_to_json(u));
    std::string why;
    switch (v.failure) {
      case SmoothnessFailure::None:
        why = "";
        break;
      case SmoothnessFailure::EdgeCountMismatch:
        why = "EdgeCountMismatch";
        break;
      case SmoothnessFailure::NotZBasis:
        why = "NotZBasis";
        break;
      case SmoothnessFailure::IrrationalSlope:
        why = "IrrationalSlope";
        break;
    }
    json entry = {{"vertex", ratvec_to_json(v.vertex)},
                  {"smooth", v.is_smooth},
                  {"edge_directions", dirs}};
    if (!why.empty()) entry["failure"] = why;
    verts.push_back(std::move(entry));
  }
  return {{"delzant", r.is_delzant}, {"vertices", verts}};
}

json quasi_regularity_report_to_json(const QuasiRegularityReport& r) {
  json out;
  out["quasi_regular"] = r.is_quasi_regular;
  out["ambient_delzant"] = r.ambient_delzant;
  json empties = json::array();
  for (int i : r.empty_pieces) empties.push_back(i + 1);
  out["empty_pieces"] = empties;
  json dfail = json::array();
  for (const PieceDelzantFailure& f : r.delzant_failures) {
    json verts = json::array();
    for (const RatVec& v : f.bad_vertices) verts.push_back(ratvec_to_json(v));
    dfail.push_back({{"piece", f.piece + 1},
                     {"reason", f.reason == DelzantFailureReason::Degenerate
                                    ? "Degenerate"
                                    : "NotDelzant"},
                     {"vertices", verts}});
  }
  out["delzant_failures"] = dfail;
  json pfail = json::array();
  for (const auto& [i, j] : r.primitivity_failures)
    pfail.push_back(json::array({i + 1, j + 1}));
  out["primitivity_failures"] = pfail;
  json tfail = json::array();
  for (const DetransViolation& v : r.detrans_failures)
    tfail.push_back({{"vertex", ratvec_to_json(v.vertex)},
                     {"active_count", v.active_count},
                     {"face_dim", v.face_dim}});
  out["detrans_failures"] = tfail;
  return out;
}

json lifted_polytope_to_json(const LiftedPolytope& l) {
  json out;
  out["a"] = rat_str(l.a);
  out["polytope"] = polytope_to_json(l.polytope);
  out["top_face"] = face_to_json(l.top_face);
  json faces = json::object();
  for (const auto& [i, f] : l.piece_faces)
    faces[std::to_string(i + 1)] = face_to_json(f);
  out["piece_faces"] = faces;
  json crit = json::array();
  for (const Rat& h : l.criticals) crit.push_back(rat_str(h));
  out["critical_heights"] = crit;
  return out;
}

json fibration_report_to_json(const FibrationReport& r) {
  json cones = json::array();
  for (const auto& img : r.cone_images) {
    if (!img.has_value()) {
      cones.push_back("mixed");
    } else {
      switch (*img) {
        case ConeImage::NonNeg:
          cones.push_back(">=0");
          break;
        case ConeImage::NonPos:
          cones.push_back("<=0");
          break;
        case ConeImage::Zero:
          cones.push_back("0");
          break;
      }
    }
  }
  return {{"compatible", r.compatible}, {"cone_images", cones}};
}

json divisor_degrees_to_json(const std::vector<DivisorDegreeEntry>& entries) {
  json edges = json::array();
  for (const DivisorDegreeEntry& e : entries)
    edges.push_back({{"between", json::array({e.between.first + 1, e.between.second + 1})},
                     {"in_piece", e.in_piece + 1},
                     {"degree", e.degree.str()}});
  return {{"edges", edges}};
}

json edge_degrees_to_json(const std::vector<EdgeDegree>& entries) {
  json out = json::array();
  for (const EdgeDegree& e : entries)
    out.push_back({{"endpoints", json::array({ratvec_to_json(e.endpoint_a),
                                              ratvec_to_json(e.endpoint_b)})},
                   {"inward_normal", intvec_to_json(e.inward_normal)},
                   {"degree", e.degree.str()}});
  return out;
}

JobSpec jobspec_from_json(const json& j, bool need_cuts, std::size_t max_rank) {
  if (!j.is_object()) throw ParseError("job: expected a JSON object");
  if (!j.contains("polytope")) throw ParseError("polytope: missing");
  JobSpec spec;
  spec.polytope = polytope_from_json(j["polytope"]);
  if (spec.polytope.rank() > max_rank)
    throw ParseError("polytope.rank: exceeds the rank cap (" +
                     std::to_string(max_rank) + "); set MOMENTCUT_MAX_RANK to raise it");
  bool has_cuts = j.contains("cuts");
  bool has_cocycle = j.contains("cocycle");
  if (has_cuts && has_cocycle)
    throw ParseError("job: give exactly one of cuts or cocycle");
  if (has_cuts) {
    spec.cuts = cuts_from_json(j["cuts"]);
    spec.has_cuts = true;
    if (spec.cuts.rank() != spec.polytope.rank())
      throw ParseError("cuts[0].xi: length != polytope rank");
  } else if (has_cocycle) {
    Cocycle c = cocycle_from_json(j["cocycle"], spec.polytope.rank());
    try {
      spec.cuts = cobound(c);
    } catch (const NotACocycleError& e) {
      throw ParseError(std::string("cocycle: ") + e.what());
    }
    spec.has_cuts = true;
  }
  if (need_cuts && !spec.has_cuts)
    throw ParseError("job: this command needs cuts or cocycle");
  if (j.contains("a")) spec.a = rat_from_json(j["a"], "a");
  return spec;
}

}  // namespace momentcut
