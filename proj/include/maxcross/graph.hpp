#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "maxcross/errors.hpp"

namespace maxcross {

/// Undirected edge stored with u < v. Ordering is lexicographic on (u, v).
struct Edge {
  int u = 0;
  int v = 0;

  constexpr Edge() = default;
  constexpr Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr bool touches(int w) const { return u == w || v == w; }
  constexpr bool adjacent(const Edge& other) const {
    return touches(other.u) || touches(other.v);
  }
  constexpr int other(int w) const { return w == u ? v : u; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// True iff a d-regular graph of order n exists (nd even).
inline bool feasible(int n, int d) {
  detail::require(n >= 3, "order n must be at least 3");
  detail::require(d >= 2 && d <= n - 1, "degree d must satisfy 2 <= d <= n-1");
  return (n % 2 == 0) || (d % 2 == 0);
}

/// A simple d-regular graph on vertices 0..n-1.
///
/// Immutable once built; the edge list is kept sorted so two graphs with the
/// same edge set compare equal. The structural constructor accepts any degree
/// d >= 1 so that intermediate objects (a single circulant class, a perfect
/// matching) can be represented; operations on the class R(n,d) additionally
/// require 2 <= d.
class RegularGraph {
 public:
  RegularGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    detail::require(n_ >= 3, "order n must be at least 3");
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      detail::require(e.u >= 0 && e.v < n_, "edge endpoint out of range");
      detail::require(e.u != e.v, "self-loop");
      detail::require(i == 0 || edges_[i - 1] != e, "duplicate edge");
    }
    std::vector<int> deg(static_cast<std::size_t>(n_), 0);
    for (const Edge& e : edges_) {
      ++deg[static_cast<std::size_t>(e.u)];
      ++deg[static_cast<std::size_t>(e.v)];
    }
    d_ = deg[0];
    detail::require(d_ >= 1, "graph has an isolated vertex");
    detail::require(std::all_of(deg.begin(), deg.end(), [&](int x) { return x == d_; }),
                    "graph is not regular");
  }

  RegularGraph(int n, int d, std::vector<Edge> edges) : RegularGraph(n, std::move(edges)) {
    detail::require(d_ == d, "graph degree " + std::to_string(d_) + " differs from expected " +
                                 std::to_string(d));
  }

  int order() const { return n_; }
  int degree() const { return d_; }
  std::size_t size() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  bool has_edge(int a, int b) const {
    return std::binary_search(edges_.begin(), edges_.end(), Edge(a, b));
  }

  /// Position of an edge in edges(), or size() when absent.
  std::size_t index_of(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    return (it != edges_.end() && *it == e) ? static_cast<std::size_t>(it - edges_.begin())
                                            : edges_.size();
  }

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_));
    for (const Edge& e : edges_) {
      adj[static_cast<std::size_t>(e.u)].push_back(e.v);
      adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    return adj;
  }

  /// Sizes of the connected components, ascending.
  std::vector<int> component_sizes() const {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] =
            parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    for (const Edge& e : edges_) parent[static_cast<std::size_t>(find(e.u))] = find(e.v);
    std::vector<int> count(static_cast<std::size_t>(n_), 0);
    for (int v = 0; v < n_; ++v) ++count[static_cast<std::size_t>(find(v))];
    std::vector<int> sizes;
    for (int c : count)
      if (c > 0) sizes.push_back(c);
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  }

  bool connected() const { return component_sizes().size() == 1; }

  /// Complement graph; requires the result to have degree >= 1.
  RegularGraph complement() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ - 1 - d_) / 2);
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b)
        if (!has_edge(a, b)) out.emplace_back(a, b);
    return RegularGraph(n_, std::move(out));
  }

  friend bool operator==(const RegularGraph& a, const RegularGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  int d_ = 0;
  std::vector<Edge> edges_;
};

inline RegularGraph make_cycle(int n) {
  detail::require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return RegularGraph(n, 2, std::move(edges));
}

inline RegularGraph make_complete(int n) {
  detail::require(n >= 3, "complete graph needs n >= 3");
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return RegularGraph(n, n - 1, std::move(edges));
}

/// Cyclic length of the chord {a, b} on n positions, in 1..n/2.
inline int cyclic_length(int n, int a, int b) {
  int diff = ((b - a) % n + n) % n;
  return std::min(diff, n - diff);
}

/// Edges {i, i+l mod n} for every offset l. Offset n/2 contributes one edge per
/// vertex, every other offset two.
inline RegularGraph make_circulant(int n, std::span<const int> offsets) {
  detail::require(n >= 3, "circulant needs n >= 3");
  detail::require(!offsets.empty(), "circulant needs at least one offset");
  std::vector<int> seen;
  std::vector<Edge> edges;
  for (int l : offsets) {
    detail::require(l >= 1 && l <= n / 2, "circulant offset out of range");
    detail::require(std::find(seen.begin(), seen.end(), l) == seen.end(),
                    "duplicate circulant offset");
    seen.push_back(l);
    int count = (2 * l == n) ? n / 2 : n;
    for (int i = 0; i < count; ++i) edges.emplace_back(i, (i + l) % n);
  }
  return RegularGraph(n, std::move(edges));
}

inline RegularGraph make_circulant(int n, std::initializer_list<int> offsets) {
  return make_circulant(n, std::span<const int>(offsets.begin(), offsets.size()));
}

}  // namespace maxcross
