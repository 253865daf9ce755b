#pragma once

#include <algorithm>
#include <cstddef>
#include <random>
#include <vector>

#include "maxcross/errors.hpp"
#include "maxcross/geometry.hpp"
#include "maxcross/graph.hpp"

namespace maxcross {

using Rng = std::mt19937_64;

/// A random labeled d-regular graph. Degrees above (n-1)/2 are sampled as the
/// complement of a sparser graph; the sparse side uses the pairing model with
/// rejection of loops and multi-edges. Not uniform, but deterministic per seed.
inline RegularGraph random_regular_graph(int n, int d, Rng& rng) {
  detail::require(n >= 3 && d >= 1 && d <= n - 1, "random_regular_graph: degree out of range");
  detail::require((n * d) % 2 == 0, "random_regular_graph: n and d both odd");
  if (d == n - 1) return make_complete(n);
  if (2 * d > n - 1) return random_regular_graph(n, n - 1 - d, rng).complement();

  std::vector<int> stubs;
  stubs.reserve(static_cast<std::size_t>(n * d));
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < d; ++i) stubs.push_back(v);
  std::vector<Edge> edges;
  for (;;) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    edges.clear();
    bool simple = true;
    for (std::size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
      if (stubs[i] == stubs[i + 1]) {
        simple = false;
        break;
      }
      Edge e(stubs[i], stubs[i + 1]);
      simple = std::find(edges.begin(), edges.end(), e) == edges.end();
      edges.push_back(e);
    }
    if (simple) return RegularGraph(n, d, edges);
  }
}

/// n integer points uniform in [0, 4n^2]^2, redrawn until in general position.
inline std::vector<Point> random_general_position_points(int n, Rng& rng) {
  detail::require(n >= 3, "need at least 3 points");
  const long long side = 4LL * n * n;
  std::uniform_int_distribution<long long> coord(0, side);
  std::vector<Point> pts(static_cast<std::size_t>(n));
  do {
    for (auto& p : pts) {
      long long x = coord(rng);
      long long y = coord(rng);
      p = Point(x, y);
    }
  } while (validate_general_position(pts));
  return pts;
}

inline GeometricDrawing random_drawing(int n, int d, Rng& rng) {
  RegularGraph g = random_regular_graph(n, d, rng);
  return GeometricDrawing(std::move(g), random_general_position_points(n, rng));
}

}  // namespace maxcross
