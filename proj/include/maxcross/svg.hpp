#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iomanip>
#include <locale>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "maxcross/errors.hpp"
#include "maxcross/geometry.hpp"

namespace maxcross {

struct RenderStyle {
  double scale = 0.0;         // pixels per unit; 0 fits the larger side to 600 px
  double vertex_radius = 4.0;  // pixels
  double stroke_width = 1.5;   // pixels
  std::vector<Edge> highlight;  // drawn dashed; may include edges not in the graph
  bool circle_layout = false;
};

/// Corners of a convex-position point set in counter-clockwise order, or
/// nullopt if some point is not a hull vertex. Exact.
inline std::optional<std::vector<int>> convex_hull_order(std::span<const Point> points) {
  const std::size_t n = points.size();
  if (n < 3) return std::nullopt;
  std::size_t low = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (points[i].y < points[low].y || (points[i].y == points[low].y && points[i].x < points[low].x)) low = i;
  std::vector<int> order;
  for (std::size_t i = 0; i < n; ++i)
    if (i != low) order.push_back(static_cast<int>(i));
  const Point& pivot = points[low];
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return orientation(pivot, points[static_cast<std::size_t>(a)], points[static_cast<std::size_t>(b)]) ==
           Orientation::left;
  });
  order.insert(order.begin(), static_cast<int>(low));
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = points[static_cast<std::size_t>(order[i])];
    const Point& b = points[static_cast<std::size_t>(order[(i + 1) % n])];
    const Point& c = points[static_cast<std::size_t>(order[(i + 2) % n])];
    if (orientation(a, b, c) != Orientation::left) return std::nullopt;
  }
  return order;
}

/// SVG 1.1 rendering: one <circle> per vertex, one <line> per edge. Graph
/// edges listed in style.highlight, and highlighted non-edges, are dashed.
/// With circle_layout the corners of a convex drawing are moved onto a regular
/// polygon; only the picture changes.
inline std::string render_svg(const GeometricDrawing& drawing, const RenderStyle& style = {}) {
  detail::require(style.scale >= 0.0 && style.vertex_radius > 0.0 && style.stroke_width > 0.0,
                  "render style dimensions must be positive");
  const std::size_t n = drawing.positions.size();
  std::vector<double> xs(n), ys(n);
  if (style.circle_layout) {
    auto hull = convex_hull_order(drawing.positions);
    detail::require(hull.has_value(), "circle layout needs a drawing in convex position");
    for (std::size_t i = 0; i < n; ++i) {
      double angle = std::numbers::pi / 2 + 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
      auto v = static_cast<std::size_t>((*hull)[i]);
      xs[v] = std::cos(angle);
      ys[v] = std::sin(angle);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      xs[i] = drawing.positions[i].x.convert_to<double>();
      ys[i] = drawing.positions[i].y.convert_to<double>();
    }
  }
  // SVG y grows downward
  for (double& y : ys) y = -y;

  const auto [min_x, max_x] = std::minmax_element(xs.begin(), xs.end());
  const auto [min_y, max_y] = std::minmax_element(ys.begin(), ys.end());
  double width = *max_x - *min_x, height = *max_y - *min_y;
  double mx = 0.05 * std::max(width, 1e-9), my = 0.05 * std::max(height, 1e-9);
  double vx = *min_x - mx, vy = *min_y - my, vw = width + 2 * mx, vh = height + 2 * my;
  double scale = style.scale > 0.0 ? style.scale : 600.0 / std::max(vw, vh);

  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::fixed << std::setprecision(4);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << vw * scale << "\" height=\""
     << vh * scale << "\" viewBox=\"" << vx << ' ' << vy << ' ' << vw << ' ' << vh << "\">\n";
  const double stroke = style.stroke_width / scale;
  const double radius = style.vertex_radius / scale;

  std::vector<Edge> dashed = style.highlight;
  std::sort(dashed.begin(), dashed.end());
  dashed.erase(std::unique(dashed.begin(), dashed.end()), dashed.end());
  auto line = [&](const Edge& e, bool dash) {
    auto u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
    os << "  <line x1=\"" << xs[u] << "\" y1=\"" << ys[u] << "\" x2=\"" << xs[v] << "\" y2=\"" << ys[v]
       << "\" stroke=\"black\" stroke-width=\"" << stroke << '"';
    if (dash) os << " stroke-dasharray=\"" << 4 * stroke << ' ' << 3 * stroke << '"';
    os << "/>\n";
  };
  os << "  <g id=\"edges\">\n";
  for (const Edge& e : drawing.graph.edges())
    if (!std::binary_search(dashed.begin(), dashed.end(), e)) line(e, false);
  for (const Edge& e : dashed) {
    detail::require(e.u >= 0 && e.v < static_cast<int>(n), "highlighted edge out of range");
    line(e, true);
  }
  os << "  </g>\n  <g id=\"vertices\">\n";
  for (std::size_t i = 0; i < n; ++i)
    os << "  <circle cx=\"" << xs[i] << "\" cy=\"" << ys[i] << "\" r=\"" << radius << "\" fill=\"black\"/>\n";
  os << "  </g>\n</svg>\n";
  return os.str();
}

}  // namespace maxcross
