#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "maxcross/errors.hpp"
#include "maxcross/geometry.hpp"
#include "maxcross/graph.hpp"

namespace maxcross {

/// Cyclic placement of the vertices on a convex polygon: order[i] is the
/// vertex at the i-th corner.
class ConvexOrder {
 public:
  explicit ConvexOrder(std::vector<int> order) : order_(std::move(order)) {
    const int n = static_cast<int>(order_.size());
    detail::require(n >= 3, "convex order needs at least 3 vertices");
    std::vector<char> seen(order_.size(), 0);
    for (int v : order_) {
      detail::require(v >= 0 && v < n && !seen[static_cast<std::size_t>(v)],
                      "convex order is not a permutation");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }

  static ConvexOrder identity(int n) {
    std::vector<int> order(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(order.begin(), order.end(), 0);
    return ConvexOrder(std::move(order));
  }

  int size() const { return static_cast<int>(order_.size()); }
  const std::vector<int>& order() const { return order_; }

  /// corner index of each vertex
  std::vector<int> positions() const {
    std::vector<int> pos(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) pos[static_cast<std::size_t>(order_[i])] = static_cast<int>(i);
    return pos;
  }

  /// Representative of the dihedral class: order[0] = 0 and order[1] < order[n-1].
  ConvexOrder canonical() const {
    const std::size_t n = order_.size();
    std::size_t start = static_cast<std::size_t>(positions()[0]);
    std::vector<int> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = order_[(start + i) % n];
    if (out[1] > out[n - 1]) std::reverse(out.begin() + 1, out.end());
    return ConvexOrder(std::move(out));
  }

  bool is_canonical() const { return order_[0] == 0 && order_[1] < order_.back(); }

  friend bool operator==(const ConvexOrder&, const ConvexOrder&) = default;

 private:
  std::vector<int> order_;
};

/// Parameters of the extremal constructions. k is the shortest kept diagonal
/// length, g = gcd(n, k) the number of cycles formed by length-k diagonals.
struct ConstructionParams {
  int n = 0;
  int d = 0;
  int k = 0;
  int g = 0;

  /// n + d odd: convex K_n without diagonals shorter than k = (n - d + 1) / 2.
  static ConstructionParams odd_sum(int n, int d) {
    detail::require(n >= 3 && d >= 2 && d <= n - 1, "need 2 <= d <= n-1");
    detail::require((n + d) % 2 == 1, "generalized star needs n + d odd");
    int k = (n - d + 1) / 2;
    return ConstructionParams{n, d, k, std::gcd(n, k)};
  }

  /// n, d even: k = (n - d) / 2.
  static ConstructionParams even_even(int n, int d) {
    detail::require(n >= 4 && d >= 2 && d <= n - 2, "need 2 <= d <= n-2");
    detail::require(n % 2 == 0 && d % 2 == 0, "star-like drawing needs n and d even");
    int k = (n - d) / 2;
    return ConstructionParams{n, d, k, std::gcd(n, k)};
  }

  int cycle_order() const { return n / g; }
  bool odd_cycles() const { return cycle_order() % 2 == 1; }
};

/// Vertex i at (i, i^2): integer, convex, and no three collinear.
inline std::vector<Point> convex_points(int n) {
  detail::require(n >= 3, "convex_points needs n >= 3");
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) pts.emplace_back(i, i * i);
  return pts;
}

/// Circulant graph keeping every diagonal of cyclic length >= shortest.
inline RegularGraph long_diagonals(int n, int shortest) {
  detail::require(shortest >= 1 && shortest <= n / 2, "diagonal length out of range");
  std::vector<int> offsets;
  for (int l = shortest; l <= n / 2; ++l) offsets.push_back(l);
  return make_circulant(n, offsets);
}

/// Generalized star: convex K_n minus all diagonals shorter than k.
inline GeometricDrawing generalized_star(int n, int d) {
  ConstructionParams params = ConstructionParams::odd_sum(n, d);
  RegularGraph graph = long_diagonals(n, params.k);
  if (graph.degree() != d) throw ConstructionError("generalized star has wrong degree");
  return GeometricDrawing(std::move(graph), convex_points(n));
}

struct StarLikeConstruction {
  ConstructionParams params;
  GeometricDrawing base;      // generalized star of degree d + 1
  std::vector<Edge> removed;  // edges deleted from base, sorted
  GeometricDrawing drawing;   // the d-regular result
};

/// Star-like drawing for n, d even: one edge per vertex removed from the
/// generalized star of degree d + 1.
///
/// The length-k diagonals split into g cycles (residue classes mod g) of
/// order n/g. For even n/g every second edge of every cycle goes. For odd n/g
/// the cycles are paired (r, r+1) for even r; the length-(k+1) diagonal
/// {r, r+k+1} is removed, both of its endpoints keep their length-k
/// diagonals, and the remaining path of each of the two cycles loses every
/// second edge starting next to the kept ones.
inline StarLikeConstruction star_like_construction(int n, int d) {
  ConstructionParams params = ConstructionParams::even_even(n, d);
  const int k = params.k;
  const int g = params.g;
  const int m = params.cycle_order();
  auto diag = [n](int a, int b) { return Edge(((a % n) + n) % n, ((b % n) + n) % n); };

  GeometricDrawing base = generalized_star(n, d + 1);
  std::vector<Edge> removed;
  if (!params.odd_cycles()) {
    for (int r = 0; r < g; ++r)
      for (int j = 0; j < m; j += 2) removed.push_back(diag(r + j * k, r + (j + 1) * k));
  } else {
    for (int r = 0; r + 1 < g; r += 2) {
      removed.push_back(diag(r, r + k + 1));
      for (int anchor : {r, r + k + 1})
        for (int j = 1; j + 1 < m; j += 2) removed.push_back(diag(anchor + j * k, anchor + (j + 1) * k));
    }
  }
  std::sort(removed.begin(), removed.end());
  if (std::adjacent_find(removed.begin(), removed.end()) != removed.end())
    throw ConstructionError("star-like construction removed an edge twice");

  std::vector<Edge> kept;
  for (const Edge& e : base.graph.edges())
    if (!std::binary_search(removed.begin(), removed.end(), e)) kept.push_back(e);
  if (kept.size() + removed.size() != base.graph.size())
    throw ConstructionError("star-like construction removed a non-edge");

  std::vector<Edge> edges = std::move(kept);
  RegularGraph graph = [&] {
    try {
      return RegularGraph(n, d, std::move(edges));
    } catch (const ArgumentError& e) {
      throw ConstructionError(std::string("star-like result is not regular: ") + e.what());
    }
  }();
  GeometricDrawing drawing(std::move(graph), convex_points(n));
  return StarLikeConstruction{params, std::move(base), std::move(removed), std::move(drawing)};
}

inline GeometricDrawing star_like_even(int n, int d) { return star_like_construction(n, d).drawing; }

/// The drawing induced by placing order[i] at convex_points(n)[i].
inline GeometricDrawing convex_drawing(const RegularGraph& graph, const ConvexOrder& order) {
  detail::require(order.size() == graph.order(), "convex order size differs from graph order");
  std::vector<Point> corners = convex_points(graph.order());
  std::vector<Point> positions(corners.size());
  for (std::size_t i = 0; i < corners.size(); ++i)
    positions[static_cast<std::size_t>(order.order()[i])] = corners[i];
  return GeometricDrawing(graph, std::move(positions));
}

/// Chord-interleaving crossing count: in convex position two disjoint edges
/// cross iff exactly one endpoint of one lies strictly between the endpoints
/// of the other along the polygon.
inline CrossingReport crossings_convex(const RegularGraph& graph, const ConvexOrder& order) {
  detail::require(order.size() == graph.order(), "convex order size differs from graph order");
  const std::vector<int> pos = order.positions();
  return detail::tally_crossings(graph.edges(), [&](const Edge& a, const Edge& b) {
    int a0 = pos[static_cast<std::size_t>(a.u)], a1 = pos[static_cast<std::size_t>(a.v)];
    int b0 = pos[static_cast<std::size_t>(b.u)], b1 = pos[static_cast<std::size_t>(b.v)];
    if (a0 > a1) std::swap(a0, a1);
    bool in0 = a0 < b0 && b0 < a1;
    bool in1 = a0 < b1 && b1 < a1;
    return in0 != in1;
  });
}

}  // namespace maxcross
