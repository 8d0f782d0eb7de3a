#include "momentcut/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace momentcut {

namespace {

constexpr double kView = 800.0;
constexpr double kMargin = 60.0;

double approx(const Rat& q) {
  return static_cast<double>(numerator(q)) / static_cast<double>(denominator(q));
}

struct Mapper {
  double minx = 0, miny = 0, scale = 1;

  std::pair<double, double> operator()(double x, double y) const {
    return {kMargin + (x - minx) * scale, kView - kMargin - (y - miny) * scale};
  }
};

std::pair<double, double> flatten(const RatVec& v) {
  if (v.size() == 2) return {approx(v[0]), approx(v[1])};
  // oblique projection for rank-3 wireframes
  return {approx(v[0]) + 0.45 * approx(v[2]), approx(v[1]) + 0.28 * approx(v[2])};
}

Mapper fit(const std::vector<std::pair<double, double>>& pts) {
  Mapper m;
  double maxx = -1e300, maxy = -1e300;
  m.minx = 1e300;
  m.miny = 1e300;
  for (const auto& [x, y] : pts) {
    m.minx = std::min(m.minx, x);
    m.miny = std::min(m.miny, y);
    maxx = std::max(maxx, x);
    maxy = std::max(maxy, y);
  }
  double w = std::max(maxx - m.minx, 1e-9);
  double h = std::max(maxy - m.miny, 1e-9);
  m.scale = (kView - 2 * kMargin) / std::max(w, h);
  return m;
}

std::string label(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += rat_str(v[i]);
  }
  return s + ")";
}

void draw_dot_label(std::ostringstream& os, const Mapper& m,
                    const std::pair<double, double>& q, const std::string& text) {
  auto [x, y] = m(q.first, q.second);
  os << "<circle cx='" << x << "' cy='" << y << "' r='4' fill='black'/>\n";
  os << "<text x='" << x + 7 << "' y='" << y - 7
     << "' font-size='15' font-family='monospace'>" << text << "</text>\n";
}

std::string header() {
  return "<svg xmlns='http://www.w3.org/2000/svg' viewBox='0 0 800 800'>\n"
         "<rect width='800' height='800' fill='white'/>\n";
}

// Vertices of a polygon ordered around its centroid (display only).
std::vector<RatVec> polygon_cycle(const Polytope& p) {
  std::vector<RatVec> vs = p.vertices();
  RatVec c = p.centroid();
  auto angle = [&](const RatVec& v) {
    return std::atan2(approx(v[1] - c[1]), approx(v[0] - c[0]));
  };
  std::sort(vs.begin(), vs.end(),
            [&](const RatVec& a, const RatVec& b) { return angle(a) < angle(b); });
  return vs;
}

void draw_polygon(std::ostringstream& os, const Mapper& m, const Polytope& p,
                  const std::string& fill, const std::string& stroke) {
  if (p.dim() == 0) return;
  std::vector<RatVec> cycle = polygon_cycle(p);
  os << "<polygon points='";
  for (const RatVec& v : cycle) {
    auto [x, y] = m(flatten(v).first, flatten(v).second);
    os << x << "," << y << " ";
  }
  os << "' fill='" << fill << "' stroke='" << stroke << "' stroke-width='2'/>\n";
}

std::string wireframe(const Polytope& p) {
  std::vector<std::pair<double, double>> flat;
  for (const RatVec& v : p.vertices()) flat.push_back(flatten(v));
  Mapper m = fit(flat);
  std::ostringstream os;
  os << header();
  for (const auto& [i, j] : p.edge_pairs()) {
    auto [x1, y1] = m(flat[i].first, flat[i].second);
    auto [x2, y2] = m(flat[j].first, flat[j].second);
    os << "<line x1='" << x1 << "' y1='" << y1 << "' x2='" << x2 << "' y2='" << y2
       << "' stroke='black' stroke-width='2'/>\n";
  }
  for (std::size_t i = 0; i < p.vertices().size(); ++i)
    draw_dot_label(os, m, flat[i], label(p.vertices()[i]));
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string svg_polytope(const Polytope& p) {
  if (p.rank() == 3) return wireframe(p);
  if (p.rank() != 2)
    throw FigureUnsupportedError("svg: only rank 2 and 3 figures are supported");
  std::vector<std::pair<double, double>> flat;
  for (const RatVec& v : p.vertices()) flat.push_back(flatten(v));
  Mapper m = fit(flat);
  std::ostringstream os;
  os << header();
  draw_polygon(os, m, p, "none", "black");
  for (std::size_t i = 0; i < p.vertices().size(); ++i)
    draw_dot_label(os, m, flat[i], label(p.vertices()[i]));
  os << "</svg>\n";
  return os.str();
}

std::string svg_subdivision(const Subdivision& s) {
  if (s.ambient.rank() == 3) return wireframe(s.ambient);
  if (s.ambient.rank() == 1 || s.ambient.rank() > 3)
    throw FigureUnsupportedError("svg: subdivision figures need rank 2 or 3");

  std::vector<std::pair<double, double>> flat;
  for (const RatVec& v : s.ambient.vertices()) flat.push_back(flatten(v));
  Mapper m = fit(flat);
  std::ostringstream os;
  os << header();
  static const char* kFills[] = {"#dbeafe", "#dcfce7", "#fee2e2",
                                 "#fef9c3", "#f3e8ff", "#e0f2fe"};
  int color = 0;
  for (int i : s.nonempty_singles()) {
    const Polytope& piece = *s.piece({i});
    draw_polygon(os, m, piece, kFills[color++ % 6], "#334155");
    if (piece.dim() >= 1) {
      RatVec c = piece.centroid();
      auto [x, y] = m(flatten(c).first, flatten(c).second);
      os << "<text x='" << x << "' y='" << y
         << "' font-size='20' font-family='monospace' text-anchor='middle'>D"
         << i + 1 << "</text>\n";
    }
  }
  draw_polygon(os, m, s.ambient, "none", "black");
  for (std::size_t i = 0; i < s.ambient.vertices().size(); ++i)
    draw_dot_label(os, m, flat[i], label(s.ambient.vertices()[i]));
  os << "</svg>\n";
  return os.str();
}

}  // namespace momentcut
