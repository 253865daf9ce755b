#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "maxcross/errors.hpp"
#include "maxcross/graph.hpp"

namespace maxcross {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A point with exact rational coordinates (always in lowest terms).
struct Point {
  Rational x;
  Rational y;

  Point() = default;
  Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
  Point(long long px, long long py) : x(px), y(py) {}

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

enum class Orientation { left, right, collinear };

inline const char* to_string(Orientation o) {
  switch (o) {
    case Orientation::left: return "left";
    case Orientation::right: return "right";
    default: return "collinear";
  }
}

/// Sign of (q - p) x (r - p): left is counter-clockwise.
inline Orientation orientation(const Point& p, const Point& q, const Point& r) {
  Rational cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  int s = cross.sign();
  return s > 0 ? Orientation::left : (s < 0 ? Orientation::right : Orientation::collinear);
}

/// True iff the two closed segments meet in exactly one point interior to
/// both. Segments sharing an endpoint never cross. Throws DegeneracyError when
/// four distinct endpoints are not in general position.
inline bool segments_cross(const Point& a1, const Point& a2, const Point& b1, const Point& b2) {
  if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) return false;
  Orientation o1 = orientation(a1, a2, b1);
  Orientation o2 = orientation(a1, a2, b2);
  Orientation o3 = orientation(b1, b2, a1);
  Orientation o4 = orientation(b1, b2, a2);
  if (o1 == Orientation::collinear || o2 == Orientation::collinear ||
      o3 == Orientation::collinear || o4 == Orientation::collinear)
    throw DegeneracyError("segment endpoints are collinear");
  return o1 != o2 && o3 != o4;
}

/// A straight-line drawing: vertex i of the graph sits at positions[i].
struct GeometricDrawing {
  RegularGraph graph;
  std::vector<Point> positions;

  GeometricDrawing(RegularGraph g, std::vector<Point> p) : graph(std::move(g)), positions(std::move(p)) {
    detail::require(positions.size() == static_cast<std::size_t>(graph.order()),
                    "drawing needs one point per vertex");
  }

  friend bool operator==(const GeometricDrawing& a, const GeometricDrawing& b) {
    return a.graph == b.graph && a.positions == b.positions;
  }
};

/// Crossing statistics of a drawing. per_edge is parallel to graph.edges().
struct CrossingReport {
  std::int64_t total = 0;
  std::vector<std::int64_t> per_edge;
  std::int64_t noncrossing = 0;        // non-adjacent pairs that do not cross
  std::int64_t nonadjacent_pairs = 0;  // total + noncrossing

  friend bool operator==(const CrossingReport&, const CrossingReport&) = default;
};

namespace detail {

// Vertex coordinates scaled by the lcm of their denominators. Scaling x and y
// by positive factors preserves every orientation.
template <class Int>
struct IntegerPlane {
  std::vector<Int> xs;
  std::vector<Int> ys;

  int orient(std::size_t p, std::size_t q, std::size_t r) const {
    Int cross = (xs[q] - xs[p]) * (ys[r] - ys[p]) - (ys[q] - ys[p]) * (xs[r] - xs[p]);
    return cross > 0 ? 1 : (cross < 0 ? -1 : 0);
  }
};

inline std::vector<BigInt> scaled_numerators(std::span<const Point> points, bool use_x) {
  BigInt scale = 1;
  for (const Point& p : points) {
    const Rational& c = use_x ? p.x : p.y;
    scale = boost::multiprecision::lcm(scale, BigInt(boost::multiprecision::denominator(c)));
  }
  std::vector<BigInt> out;
  out.reserve(points.size());
  for (const Point& p : points) {
    const Rational& c = use_x ? p.x : p.y;
    out.push_back(BigInt(boost::multiprecision::numerator(c)) *
                  (scale / BigInt(boost::multiprecision::denominator(c))));
  }
  return out;
}

// Calls f with an IntegerPlane<int64_t> when every scaled coordinate stays
// below 2^30 in magnitude (so cross products fit), otherwise with a
// multiprecision plane.
template <class F>
decltype(auto) with_plane(std::span<const Point> points, F&& f) {
  std::vector<BigInt> xs = scaled_numerators(points, true);
  std::vector<BigInt> ys = scaled_numerators(points, false);
  const BigInt limit = BigInt(1) << 30;
  bool small = true;
  for (std::size_t i = 0; i < xs.size() && small; ++i)
    small = abs(xs[i]) < limit && abs(ys[i]) < limit;
  if (small) {
    IntegerPlane<std::int64_t> plane;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      plane.xs.push_back(xs[i].convert_to<std::int64_t>());
      plane.ys.push_back(ys[i].convert_to<std::int64_t>());
    }
    return f(plane);
  }
  IntegerPlane<BigInt> plane{std::move(xs), std::move(ys)};
  return f(plane);
}

template <class Plane>
bool plane_cross(const Plane& plane, const Edge& a, const Edge& b) {
  auto au = static_cast<std::size_t>(a.u), av = static_cast<std::size_t>(a.v);
  auto bu = static_cast<std::size_t>(b.u), bv = static_cast<std::size_t>(b.v);
  int o1 = plane.orient(au, av, bu);
  int o2 = plane.orient(au, av, bv);
  int o3 = plane.orient(bu, bv, au);
  int o4 = plane.orient(bu, bv, av);
  if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0) throw DegeneracyError("segment endpoints are collinear");
  return o1 != o2 && o3 != o4;
}

template <class CrossFn>
CrossingReport tally_crossings(std::span<const Edge> edges, CrossFn&& crosses) {
  CrossingReport report;
  report.per_edge.assign(edges.size(), 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i].adjacent(edges[j])) continue;
      ++report.nonadjacent_pairs;
      if (crosses(edges[i], edges[j])) {
        ++report.total;
        ++report.per_edge[i];
        ++report.per_edge[j];
      } else {
        ++report.noncrossing;
      }
    }
  }
  return report;
}

}  // namespace detail

struct Violation {
  enum class Kind { duplicate, collinear };
  Kind kind;
  std::vector<int> vertices;

  std::string describe() const {
    std::ostringstream os;
    os << (kind == Kind::duplicate ? "coincident vertices" : "collinear vertices");
    for (int v : vertices) os << ' ' << v;
    return os.str();
  }
};

/// First coincident pair, else first collinear triple in lexicographic order.
inline std::optional<Violation> validate_general_position(std::span<const Point> points) {
  return detail::with_plane(points, [](const auto& plane) -> std::optional<Violation> {
    const std::size_t n = plane.xs.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (plane.xs[i] == plane.xs[j] && plane.ys[i] == plane.ys[j])
          return Violation{Violation::Kind::duplicate, {static_cast<int>(i), static_cast<int>(j)}};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          if (plane.orient(i, j, k) == 0)
            return Violation{Violation::Kind::collinear,
                             {static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)}};
    return std::nullopt;
  });
}

inline std::optional<Violation> validate_general_position(const GeometricDrawing& drawing) {
  return validate_general_position(std::span<const Point>(drawing.positions));
}

inline void require_general_position(std::span<const Point> points) {
  if (auto v = validate_general_position(points)) throw DegeneracyError(v->describe());
}

/// Counts crossing edge pairs of a general-position drawing exactly.
inline CrossingReport count_crossings_geometric(const GeometricDrawing& drawing) {
  std::span<const Point> points(drawing.positions);
  require_general_position(points);
  return detail::with_plane(points, [&](const auto& plane) {
    return detail::tally_crossings(drawing.graph.edges(), [&](const Edge& a, const Edge& b) {
      return detail::plane_cross(plane, a, b);
    });
  });
}

/// Number of non-adjacent edge pairs of a d-regular graph on n vertices.
inline std::int64_t nonadjacent_pair_count(int n, int d) {
  std::int64_t m = static_cast<std::int64_t>(n) * d / 2;
  return m * (m - 2 * d + 1) / 2;
}

}  // namespace maxcross
