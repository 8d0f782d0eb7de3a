#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "momentcut/json_io.hpp"
#include "momentcut/svg.hpp"

namespace {

using namespace momentcut;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

std::size_t max_rank_cap() {
  if (const char* env = std::getenv("MOMENTCUT_MAX_RANK")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return static_cast<std::size_t>(v);
    std::cerr << "warning: ignoring invalid MOMENTCUT_MAX_RANK='" << env << "'\n";
  }
  return 8;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return j;
}

void emit(const json& report, const std::string& json_path) {
  std::cout << report.dump(2) << std::endl;
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    out << report.dump(2) << '\n';
  }
}

void write_svg_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  out << body;
  std::cerr << "figure written to " << path << '\n';
}

int cmd_check_delzant(const std::string& file, const std::string& json_path) {
  JobSpec spec = jobspec_from_json(load_json(file), false, max_rank_cap());
  DelzantReport rep = is_delzant(spec.polytope);
  emit(delzant_report_to_json(rep), json_path);
  if (rep.is_delzant) {
    std::cerr << "Delzant: all " << rep.vertex_reports.size() << " vertices smooth\n";
    return kExitTrue;
  }
  for (const SmoothnessReport& v : rep.vertex_reports)
    if (!v.is_smooth) std::cerr << "not smooth at " << vec_str(v.vertex) << '\n';
  return kExitFalse;
}

int cmd_subdivide(const std::string& file, const std::string& json_path,
                  const std::string& svg_path) {
  JobSpec spec = jobspec_from_json(load_json(file), true, max_rank_cap());
  Subdivision s = subdivide(spec.polytope, spec.cuts);
  emit(subdivision_to_json(s), json_path);
  std::size_t nonempty = 0;
  for (const auto& [I, piece] : s.pieces)
    if (piece.has_value()) ++nonempty;
  std::cerr << nonempty << " nonempty pieces out of " << s.pieces.size()
            << " index sets\n";
  if (!svg_path.empty()) {
    try {
      write_svg_file(svg_path, svg_subdivision(s));
    } catch (const FigureUnsupportedError& e) {
      std::cerr << "figure skipped: " << e.what() << '\n';
    }
  }
  return kExitTrue;
}

int cmd_check_regular(const std::string& file, const std::string& json_path) {
  JobSpec spec = jobspec_from_json(load_json(file), true, max_rank_cap());
  Subdivision s = subdivide(spec.polytope, spec.cuts);
  QuasiRegularityReport rep = is_quasi_regular(s);

  bool lattice_ok = true;
  for (const LatticeCriterionCheck& chk : lattice_criterion_quasi_regular(s))
    if (chk.status != LatticeCriterionCheck::Status::True) lattice_ok = false;

  json out = quasi_regularity_report_to_json(rep);
  out["lattice_criterion"] = lattice_ok;
  out["verdicts_agree"] = (lattice_ok == rep.is_quasi_regular);
  out["toric_note"] =
      "for a toric ambient manifold these combinatorial checks are decisive: "
      "quasi-regular cutting data is regular";
  emit(out, json_path);

  if (lattice_ok != rep.is_quasi_regular) {
    std::cerr << "internal inconsistency: definitional verdict "
              << (rep.is_quasi_regular ? "true" : "false")
              << " vs lattice criterion " << (lattice_ok ? "true" : "false") << '\n';
    return kExitInternal;
  }
  if (!rep.ambient_delzant)
    std::cerr << "warning: the ambient polytope is not Delzant\n";
  std::cerr << (rep.is_quasi_regular ? "quasi-regular" : "not quasi-regular") << '\n';
  return rep.is_quasi_regular ? kExitTrue : kExitFalse;
}

int cmd_lift(const std::string& file, const std::string& a_arg,
             const std::string& json_path, const std::string& svg_path) {
  JobSpec spec = jobspec_from_json(load_json(file), true, max_rank_cap());
  Rat a;
  if (!a_arg.empty()) {
    try {
      a = parse_rat(a_arg);
    } catch (const RatParseError& e) {
      throw ParseError(std::string("--a: ") + e.what());
    }
  } else if (spec.a.has_value()) {
    a = *spec.a;
  } else {
    a = min_a_bound(spec.polytope, spec.cuts) + 1;
    std::cerr << "using a = " << rat_str(a) << " (bound + 1)\n";
  }

  LiftedPolytope lifted;
  try {
    lifted = lift(spec.polytope, spec.cuts, a);
  } catch (const BoundViolatedError& e) {
    std::cerr << "a = " << rat_str(a) << " violates the strict bound "
              << rat_str(e.bound) << '\n';
    json out = {{"error", "BoundViolated"}, {"bound", rat_str(e.bound)}};
    emit(out, json_path);
    return kExitFalse;
  }

  json out = lifted_polytope_to_json(lifted);
  DelzantReport dr = is_delzant(lifted.polytope);
  out["delzant"] = dr.is_delzant;
  if (dr.is_delzant) {
    Fan fan = normal_fan(lifted.polytope);
    out["fan"] = fan_to_json(fan);
    out["fibration"] = fibration_report_to_json(fan_fibration(fan));
  }
  emit(out, json_path);
  std::cerr << "lifted polytope has " << lifted.polytope.vertices().size()
            << " vertices; Delzant: " << (dr.is_delzant ? "yes" : "no") << '\n';
  if (!svg_path.empty()) {
    try {
      write_svg_file(svg_path, svg_polytope(lifted.polytope));
    } catch (const FigureUnsupportedError& e) {
      std::cerr << "figure skipped: " << e.what() << '\n';
    }
  }
  return kExitTrue;
}

int cmd_degrees(const std::string& file, const std::string& json_path) {
  JobSpec spec = jobspec_from_json(load_json(file), true, max_rank_cap());
  if (spec.polytope.rank() != 2) {
    std::cerr << "degrees needs a rank-2 polytope\n";
    emit(json{{"error", "NotDim2"}}, json_path);
    return kExitFalse;
  }
  Subdivision s = subdivide(spec.polytope, spec.cuts);
  try {
    json out = divisor_degrees_to_json(divisor_degree_report(s));
    json per_piece = json::object();
    for (int i : s.nonempty_singles()) {
      const Polytope& piece = *s.piece({i});
      if (piece.dim() != 2) continue;
      per_piece[std::to_string(i + 1)] =
          edge_degrees_to_json(edge_self_intersections(piece));
    }
    out["piece_edges"] = per_piece;
    emit(out, json_path);
    return kExitTrue;
  } catch (const NotDelzantError& e) {
    std::cerr << e.what() << '\n';
    emit(json{{"error", "NotDelzant"}}, json_path);
    return kExitFalse;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lattice-polytope toolkit for multifold moment-map cuts"};
  app.require_subcommand(1);

  std::string file, json_path, svg_path, a_arg;

  CLI::App* check_delzant =
      app.add_subcommand("check-delzant", "smooth-vertex report (exit 0 iff Delzant)");
  check_delzant->add_option("spec", file, "job JSON file")->required();
  check_delzant->add_option("--json", json_path, "also write the report here");

  CLI::App* subdiv = app.add_subcommand("subdivide", "all pieces Delta_I of the cut");
  subdiv->add_option("spec", file, "job JSON file")->required();
  subdiv->add_option("--json", json_path, "also write the report here");
  subdiv->add_option("--svg", svg_path, "figure output (rank 2 or 3)");

  CLI::App* regular = app.add_subcommand(
      "check-regular", "quasi-regularity by both criteria (exit 0 iff quasi-regular)");
  regular->add_option("spec", file, "job JSON file")->required();
  regular->add_option("--json", json_path, "also write the report here");

  CLI::App* lift_cmd =
      app.add_subcommand("lift", "lifted degeneration polytope, fan, fibration");
  lift_cmd->add_option("spec", file, "job JSON file")->required();
  lift_cmd->add_option("--a", a_arg, "height parameter as p/q (default: bound + 1)");
  lift_cmd->add_option("--json", json_path, "also write the report here");
  lift_cmd->add_option("--svg", svg_path, "figure output (rank 2 or 3)");

  CLI::App* degrees = app.add_subcommand("degrees", "normal-bundle degree table (rank 2)");
  degrees->add_option("spec", file, "job JSON file")->required();
  degrees->add_option("--json", json_path, "also write the report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check_delzant->parsed()) return cmd_check_delzant(file, json_path);
    if (subdiv->parsed()) return cmd_subdivide(file, json_path, svg_path);
    if (regular->parsed()) return cmd_check_regular(file, json_path);
    if (lift_cmd->parsed()) return cmd_lift(file, a_arg, json_path, svg_path);
    if (degrees->parsed()) return cmd_degrees(file, json_path);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInput;
}
