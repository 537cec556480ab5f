#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bubblecross/mesh.hpp"

namespace bubblecross::io {

inline nlohmann::json mesh_to_json(const MeshSpec& spec) { return {{"n", spec.n}, {"a", spec.a}, {"P", spec.lost}}; }

inline MeshSpec mesh_from_json(const nlohmann::json& j) {
  try {
    return make_mesh(j.at("n").get<int>(), j.at("a").get<int>(), j.at("P").get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw invalid_input(std::string("malformed mesh JSON: ") + e.what());
  }
}

namespace detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace detail

// SVG 1.1 drawing: the axis with anchors 1..n, every ray clipped to a box that
// holds all crossings, a marker per crossing, and the oracle count as text.
inline std::string mesh_svg(const MeshSpec& spec) {
  const auto slopes = default_slopes(spec.n);
  const auto rays = mesh_rays(spec, slopes);
  const auto points = oracle_crossing_points(spec, slopes);

  double half_width = 2.0;
  double top = spec.n + 1.0;
  for (const auto& p : points) {
    half_width = std::max(half_width, std::abs(static_cast<double>(p.x_num) / p.den) + 1.0);
    top = std::max(top, static_cast<double>(p.y_num) / p.den + 1.0);
  }

  constexpr double kSize = 720.0;
  constexpr double kMargin = 40.0;
  const double sx = kSize / (2.0 * half_width);
  const double sy = kSize / top;
  auto px = [&](double x) { return kMargin + (x + half_width) * sx; };
  auto py = [&](double y) { return kMargin + (top - y) * sy; };

  std::ostringstream os;
  const double full = kSize + 2 * kMargin;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << detail::num(full) << "\" height=\""
     << detail::num(full + 30) << "\">\n";
  os << "  <line x1=\"" << detail::num(px(0)) << "\" y1=\"" << detail::num(py(top)) << "\" x2=\"" << detail::num(px(0))
     << "\" y2=\"" << detail::num(py(0)) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

  os << "  <g stroke-width=\"0.6\">\n";
  for (const Ray& r : rays) {
    const double dx = static_cast<double>(r.direction.x);
    const double dy = static_cast<double>(r.direction.y);
    const double t = std::min(half_width / std::abs(dx), (top - r.anchor) / dy);
    const char* color = r.direction.x < 0 ? "#1f77b4" : "#2ca02c";
    os << "    <line x1=\"" << detail::num(px(0)) << "\" y1=\"" << detail::num(py(r.anchor)) << "\" x2=\""
       << detail::num(px(dx * t)) << "\" y2=\"" << detail::num(py(r.anchor + dy * t)) << "\" stroke=\"" << color
       << "\"/>\n";
  }
  os << "  </g>\n";

  os << "  <g fill=\"red\">\n";
  for (const auto& p : points) {
    os << "    <circle cx=\"" << detail::num(px(static_cast<double>(p.x_num) / p.den)) << "\" cy=\""
       << detail::num(py(static_cast<double>(p.y_num) / p.den)) << "\" r=\"2\"/>\n";
  }
  os << "  </g>\n";

  for (int j = 1; j <= spec.n; ++j) {
    os << "  <circle cx=\"" << detail::num(px(0)) << "\" cy=\"" << detail::num(py(j)) << "\" r=\"3\" fill=\"black\"/>\n";
    os << "  <text x=\"" << detail::num(px(0) + 6) << "\" y=\"" << detail::num(py(j) + 4)
       << "\" font-family=\"monospace\" font-size=\"11\">" << j << "</text>\n";
  }

  std::ostringstream perm;
  for (std::size_t i = 0; i < spec.lost.size(); ++i) perm << (i ? "," : "") << spec.lost[i];
  os << "  <text x=\"" << detail::num(kMargin) << "\" y=\"" << detail::num(full + 15)
     << "\" font-family=\"monospace\" font-size=\"14\" id=\"crossings\" data-crossings=\"" << points.size()
     << "\">M(" << spec.n << "," << spec.a << ") P=(" << perm.str() << ") crossings: " << points.size()
     << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace bubblecross::io
