#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "maxcross/errors.hpp"
#include "maxcross/graph.hpp"

namespace maxcross {

struct EnumerationOptions {
  int max_order = 10;
  bool connected_only = false;
};

/// Callbacks driven by the backtracking enumerator.
///
/// push/pop bracket every tentative edge, so a visitor can maintain incremental
/// state (for example a running crossing count). prune is consulted after each
/// push with the number of edges still to be placed; returning true abandons
/// the branch. emit receives each complete edge set in lexicographic order.
template <class V>
concept EnumerationVisitor = requires(V& v, Edge e, std::size_t remaining, std::span<const Edge> s) {
  v.push(e);
  v.pop();
  { v.prune(remaining) } -> std::convertible_to<bool>;
  v.emit(s);
};

/// Forced edges for vertices 0..depth-1. Shards produced by the same depth are
/// disjoint and, taken in order, cover the full enumeration in order.
struct ShardPrefix {
  int depth = 0;
  std::vector<Edge> edges;
};

/// Enumerates labeled d-regular graphs on 0..n-1 by choosing, vertex by
/// vertex, the higher-numbered neighbours in lexicographic order. Within a
/// fixed history every vertex has the same residual degree, so the edge lists
/// come out in lexicographic order.
class RegularEnumerator {
 public:
  RegularEnumerator(int n, int d) : n_(n), d_(d) {}

  int order() const { return n_; }
  int degree() const { return d_; }
  std::size_t edge_count() const {
    return static_cast<std::size_t>(n_) * static_cast<std::size_t>(d_) / 2;
  }

  template <EnumerationVisitor V>
  void run(V& visitor) {
    run(ShardPrefix{}, visitor);
  }

  template <EnumerationVisitor V>
  void run(const ShardPrefix& prefix, V& visitor) {
    if ((n_ * d_) % 2 != 0) return;
    reset();
    for (const Edge& e : prefix.edges) {
      place(e);
      visitor.push(e);
    }
    bool consistent = true;
    for (int u = 0; u < prefix.depth; ++u)
      if (rem_[static_cast<std::size_t>(u)] != 0) consistent = false;
    if (consistent && residual_feasible(prefix.depth - 1)) vertex_step(prefix.depth, visitor);
    for (std::size_t i = prefix.edges.size(); i-- > 0;) {
      unplace(prefix.edges[i]);
      visitor.pop();
    }
  }

  /// Every feasible assignment of neighbours for vertices 0..depth-1.
  std::vector<ShardPrefix> shards(int depth) {
    std::vector<ShardPrefix> out;
    if ((n_ * d_) % 2 != 0) return out;
    depth = std::clamp(depth, 0, n_);
    reset();
    PrefixCollector collector{depth, &out, {}};
    stop_depth_ = depth;
    vertex_step(0, collector);
    stop_depth_ = -1;
    return out;
  }

 private:
  struct PrefixCollector {
    int depth;
    std::vector<ShardPrefix>* out;
    std::vector<Edge> stack;
    void push(Edge e) { stack.push_back(e); }
    void pop() { stack.pop_back(); }
    bool prune(std::size_t) const { return false; }
    void emit(std::span<const Edge>) {}
    void cut() { out->push_back(ShardPrefix{depth, stack}); }
  };

  void reset() {
    rem_.assign(static_cast<std::size_t>(n_), d_);
    edges_.clear();
    edges_.reserve(edge_count());
  }

  void place(const Edge& e) {
    --rem_[static_cast<std::size_t>(e.u)];
    --rem_[static_cast<std::size_t>(e.v)];
    edges_.push_back(e);
  }

  void unplace(const Edge& e) {
    ++rem_[static_cast<std::size_t>(e.u)];
    ++rem_[static_cast<std::size_t>(e.v)];
    edges_.pop_back();
  }

  // After vertices 0..done are saturated, every later vertex must still find
  // enough later partners.
  bool residual_feasible(int done) const {
    int open = 0;
    for (int x = done + 1; x < n_; ++x)
      if (rem_[static_cast<std::size_t>(x)] > 0) ++open;
    for (int w = done + 1; w < n_; ++w)
      if (rem_[static_cast<std::size_t>(w)] > open - 1 && rem_[static_cast<std::size_t>(w)] > 0)
        return false;
    return true;
  }

  template <class V>
  void vertex_step(int u, V& visitor) {
    if constexpr (std::is_same_v<V, PrefixCollector>) {
      if (u == stop_depth_) {
        visitor.cut();
        return;
      }
    }
    if (u == n_) {
      visitor.emit(std::span<const Edge>(edges_));
      return;
    }
    choose(u, u + 1, rem_[static_cast<std::size_t>(u)], visitor);
  }

  template <class V>
  void choose(int u, int start, int need, V& visitor) {
    if (need == 0) {
      if (residual_feasible(u)) vertex_step(u + 1, visitor);
      return;
    }
    int available = 0;
    for (int v = start; v < n_; ++v)
      if (rem_[static_cast<std::size_t>(v)] > 0) ++available;
    if (available < need) return;
    for (int v = start; v < n_; ++v) {
      if (rem_[static_cast<std::size_t>(v)] == 0) continue;
      Edge e(u, v);
      place(e);
      visitor.push(e);
      if (!visitor.prune(edge_count() - edges_.size())) choose(u, v + 1, need - 1, visitor);
      visitor.pop();
      unplace(e);
    }
  }

  int n_;
  int d_;
  int stop_depth_ = -1;
  std::vector<int> rem_;
  std::vector<Edge> edges_;
};

namespace detail {

inline void check_enumeration_request(int n, int d, const EnumerationOptions& options) {
  (void)feasible(n, d);
  if (n > options.max_order)
    throw ResourceError("enumeration of order " + std::to_string(n) + " exceeds cap " +
                        std::to_string(options.max_order));
}

inline bool edges_connected(int n, std::span<const Edge> edges) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  int components = n;
  for (const Edge& e : edges) {
    int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  return components == 1;
}

template <class F>
struct CallbackVisitor {
  int n;
  bool connected_only;
  F* callback;
  void push(Edge) {}
  void pop() {}
  bool prune(std::size_t) const { return false; }
  void emit(std::span<const Edge> edges) {
    if (connected_only && !edges_connected(n, edges)) return;
    (*callback)(RegularGraph(n, std::vector<Edge>(edges.begin(), edges.end())));
  }
};

}  // namespace detail

/// Streams every labeled d-regular graph on 0..n-1 exactly once, in
/// lexicographic order of the sorted edge lists. Disconnected graphs are
/// included unless options.connected_only is set. An infeasible (n, d) yields
/// nothing.
template <class F>
void enumerate_labeled_regular(int n, int d, F&& on_graph, const EnumerationOptions& options = {}) {
  detail::check_enumeration_request(n, d, options);
  RegularEnumerator enumerator(n, d);
  detail::CallbackVisitor<std::remove_reference_t<F>> visitor{n, options.connected_only, &on_graph};
  enumerator.run(visitor);
}

/// Same stream restricted to one shard.
template <class F>
void enumerate_labeled_regular(int n, int d, const ShardPrefix& prefix, F&& on_graph,
                               const EnumerationOptions& options = {}) {
  detail::check_enumeration_request(n, d, options);
  RegularEnumerator enumerator(n, d);
  detail::CallbackVisitor<std::remove_reference_t<F>> visitor{n, options.connected_only, &on_graph};
  enumerator.run(prefix, visitor);
}

inline std::vector<RegularGraph> labeled_regular_graphs(int n, int d,
                                                        const EnumerationOptions& options = {}) {
  std::vector<RegularGraph> out;
  enumerate_labeled_regular(n, d, [&](RegularGraph g) { out.push_back(std::move(g)); }, options);
  return out;
}

inline std::uint64_t count_labeled_regular(int n, int d, const EnumerationOptions& options = {}) {
  detail::check_enumeration_request(n, d, options);
  struct Counter {
    int n;
    bool connected_only;
    std::uint64_t count = 0;
    void push(Edge) {}
    void pop() {}
    bool prune(std::size_t) const { return false; }
    void emit(std::span<const Edge> edges) {
      if (!connected_only || detail::edges_connected(n, edges)) ++count;
    }
  } counter{n, options.connected_only};
  RegularEnumerator(n, d).run(counter);
  return counter.count;
}

}  // namespace maxcross
