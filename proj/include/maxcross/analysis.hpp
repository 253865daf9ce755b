#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "maxcross/errors.hpp"
#include "maxcross/formulas.hpp"
#include "maxcross/geometry.hpp"
#include "maxcross/graph.hpp"

namespace maxcross {

/// Vertices sharing the same minimum endvertex type s and the same sorted
/// multiset of endvertex types.
struct VertexGroup {
  int s = 0;                   // minimum type
  int t = 0;                   // 1-based index among groups with this s
  std::vector<int> signature;  // sorted endvertex types
  std::int64_t count = 0;      // number of vertices in the group
  std::vector<int> z;          // z[i]: occurrences of type i in signature, i = 0..D
};

/// Endvertex and edge type statistics of a drawing.
struct TypeProfile {
  int d = 0;
  int max_type = 0;                             // D = floor((d-1)/2)
  std::vector<std::int64_t> y;                  // y[i], i = 0..D
  std::vector<std::vector<std::int64_t>> x;     // x[i][j], meaningful for i <= j
  std::int64_t accounting = 0;                  // M
  std::vector<std::pair<int, int>> edge_types;  // (type at u, type at v), parallel to edges()
  std::vector<std::vector<int>> vertex_profiles;
  std::vector<VertexGroup> groups;
};

namespace detail {

struct SideCounts {
  int left = 0;
  int right = 0;
  int type() const { return std::min(left, right); }
};

// Sides of the directed line from `from` to `to` taken by the other edges at `from`.
template <class Plane>
SideCounts side_counts(const Plane& plane, const std::vector<std::vector<int>>& adj, int from, int to) {
  SideCounts c;
  for (int w : adj[static_cast<std::size_t>(from)]) {
    if (w == to) continue;
    int o = plane.orient(static_cast<std::size_t>(from), static_cast<std::size_t>(to), static_cast<std::size_t>(w));
    if (o == 0) throw DegeneracyError("edge collinear with a neighbouring edge");
    (o > 0 ? c.left : c.right)++;
  }
  return c;
}

inline std::int64_t pair_weight(int i, int j, int d) {
  return static_cast<std::int64_t>(i) * (d - j - 1) + static_cast<std::int64_t>(j) * (d - i - 1);
}

}  // namespace detail

/// Type of `endpoint` on `edge`: the smaller number of other incident edges
/// on either side of the edge's line.
inline int endvertex_type(const GeometricDrawing& drawing, const Edge& edge, int endpoint) {
  detail::require(drawing.graph.has_edge(edge.u, edge.v), "edge is not in the drawing");
  detail::require(edge.touches(endpoint), "endpoint does not belong to edge");
  require_general_position(drawing.positions);
  auto adj = drawing.graph.adjacency();
  return detail::with_plane(std::span<const Point>(drawing.positions), [&](const auto& plane) {
    return detail::side_counts(plane, adj, endpoint, edge.other(endpoint)).type();
  });
}

inline TypeProfile type_profile(const GeometricDrawing& drawing) {
  require_general_position(drawing.positions);
  const RegularGraph& graph = drawing.graph;
  const int n = graph.order();
  const int d = graph.degree();
  const int big_d = max_endvertex_type(d);
  const auto adj = graph.adjacency();

  TypeProfile p;
  p.d = d;
  p.max_type = big_d;
  p.y.assign(static_cast<std::size_t>(big_d + 1), 0);
  p.x.assign(static_cast<std::size_t>(big_d + 1), std::vector<std::int64_t>(static_cast<std::size_t>(big_d + 1), 0));
  p.vertex_profiles.assign(static_cast<std::size_t>(n), {});

  detail::with_plane(std::span<const Point>(drawing.positions), [&](const auto& plane) {
    for (const Edge& e : graph.edges()) {
      int tu = detail::side_counts(plane, adj, e.u, e.v).type();
      int tv = detail::side_counts(plane, adj, e.v, e.u).type();
      p.edge_types.emplace_back(tu, tv);
      ++p.y[static_cast<std::size_t>(tu)];
      ++p.y[static_cast<std::size_t>(tv)];
      int i = std::min(tu, tv), j = std::max(tu, tv);
      ++p.x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      p.accounting += detail::pair_weight(i, j, d);
      p.vertex_profiles[static_cast<std::size_t>(e.u)].push_back(tu);
      p.vertex_profiles[static_cast<std::size_t>(e.v)].push_back(tv);
    }
    return 0;
  });

  std::map<std::pair<int, std::vector<int>>, std::int64_t> tally;
  for (auto& types : p.vertex_profiles) {
    std::sort(types.begin(), types.end());
    ++tally[{types.front(), types}];
  }
  int last_s = -1, t = 0;
  for (const auto& [key, count] : tally) {
    const auto& [s, signature] = key;
    t = (s == last_s) ? t + 1 : 1;
    last_s = s;
    VertexGroup group{s, t, signature, count, std::vector<int>(static_cast<std::size_t>(big_d + 1), 0)};
    for (int type : signature) ++group.z[static_cast<std::size_t>(type)];
    p.groups.push_back(std::move(group));
  }
  return p;
}

/// Outcome of the per-vertex coverage property: every type from a vertex's
/// minimum type up to D occurs at least twice, except that type D needs only
/// one occurrence when d is odd.
struct LemmaVerdict {
  bool ok = true;
  int vertex = -1;
  int type = -1;
  int occurrences = 0;
  int required = 0;

  std::string describe() const {
    if (ok) return "ok";
    std::ostringstream os;
    os << "counterexample vertex " << vertex << " type " << type << " occurs " << occurrences
       << " needs " << required;
    return os.str();
  }
};

inline LemmaVerdict lemma_coverage_check(const TypeProfile& profile) {
  const int big_d = profile.max_type;
  for (std::size_t v = 0; v < profile.vertex_profiles.size(); ++v) {
    const auto& types = profile.vertex_profiles[v];
    const int s = types.front();
    for (int i = s; i <= big_d; ++i) {
      int have = static_cast<int>(std::count(types.begin(), types.end(), i));
      int need = (i == big_d && profile.d % 2 == 1) ? 1 : 2;
      if (have < need) return LemmaVerdict{false, static_cast<int>(v), i, have, need};
    }
  }
  return {};
}

inline LemmaVerdict lemma_coverage_check(const GeometricDrawing& drawing) {
  return lemma_coverage_check(type_profile(drawing));
}

/// Measured non-crossing pairs N against the type accounting M and the
/// non-adjacent pair count P.
struct NoncrossingAccounting {
  std::int64_t noncrossing = 0;        // N
  std::int64_t accounting = 0;         // M
  std::int64_t nonadjacent_pairs = 0;  // P
  std::int64_t crossings = 0;
  bool crossings_is_p_minus_n = false;
  bool n_at_least_half_m = false;
};

inline NoncrossingAccounting noncrossing_accounting(const GeometricDrawing& drawing, const TypeProfile& profile) {
  CrossingReport report = count_crossings_geometric(drawing);
  NoncrossingAccounting a;
  a.noncrossing = report.noncrossing;
  a.accounting = profile.accounting;
  a.nonadjacent_pairs = nonadjacent_pair_count(drawing.graph.order(), drawing.graph.degree());
  a.crossings = report.total;
  a.crossings_is_p_minus_n = report.total == a.nonadjacent_pairs - a.noncrossing;
  a.n_at_least_half_m = 2 * a.noncrossing >= a.accounting;
  return a;
}

inline NoncrossingAccounting noncrossing_accounting(const GeometricDrawing& drawing) {
  return noncrossing_accounting(drawing, type_profile(drawing));
}

}  // namespace maxcross
