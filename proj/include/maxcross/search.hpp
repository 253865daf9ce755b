#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "maxcross/enumerate.hpp"
#include "maxcross/errors.hpp"
#include "maxcross/formulas.hpp"
#include "maxcross/geometry.hpp"
#include "maxcross/graph.hpp"
#include "maxcross/sampling.hpp"

namespace maxcross {

enum class SearchMode { convex_exhaustive, perturbation };

inline const char* to_string(SearchMode mode) {
  return mode == SearchMode::convex_exhaustive ? "convex-exhaustive" : "perturbation";
}

struct SearchResult {
  int n = 0;
  int d = 0;
  std::int64_t max_crossings = -1;
  std::optional<RegularGraph> witness;
  std::optional<GeometricDrawing> witness_drawing;  // perturbation mode only
  std::uint64_t graphs_examined = 0;
  std::chrono::nanoseconds elapsed{0};
  SearchMode mode = SearchMode::convex_exhaustive;
};

struct SearchOptions {
  int workers = 1;
  int max_order = 9;
  bool long_run = false;  // lifts the order cap to 10
  int shard_depth = 2;
  // Pruning threshold starts at the construction value, which is always
  // attained in convex position.
  bool seed_with_construction = true;
  std::optional<std::filesystem::path> checkpoint_dir;
};

/// Result of one shard of the convex search; also the checkpoint payload.
struct ShardResult {
  int n = 0;
  int d = 0;
  std::size_t id = 0;
  ShardPrefix prefix;
  std::int64_t best = -1;
  std::vector<Edge> witness;
  std::uint64_t examined = 0;
};

namespace detail {

inline void write_edge_list(std::ostream& os, const char* key, const std::vector<Edge>& edges) {
  os << key;
  for (const Edge& e : edges) os << ' ' << e.u << ' ' << e.v;
  os << '\n';
}

inline std::vector<Edge> read_edge_list(std::istringstream& is) {
  std::vector<Edge> edges;
  int u = 0, v = 0;
  while (is >> u >> v) edges.emplace_back(u, v);
  return edges;
}

// Branch-and-bound visitor for the identity convex order. Positions equal
// labels, so {a,b} and {c,e} with a<b, c<e cross iff a<c<b<e or c<a<e<b.
class ConvexMaxVisitor {
 public:
  ConvexMaxVisitor(int n, int d, std::int64_t threshold)
      : total_edges_(static_cast<std::int64_t>(n) * d / 2),
        partner_cap_(total_edges_ - 2 * d + 1),
        threshold_(threshold) {}

  void push(Edge e) {
    std::int64_t delta = 0;
    for (const Edge& f : edges_) {
      if (e.adjacent(f)) continue;
      if ((e.u < f.u && f.u < e.v && e.v < f.v) || (f.u < e.u && e.u < f.v && f.v < e.v)) ++delta;
    }
    edges_.push_back(e);
    deltas_.push_back(delta);
    current_ += delta;
  }

  void pop() {
    current_ -= deltas_.back();
    deltas_.pop_back();
    edges_.pop_back();
  }

  bool prune(std::size_t remaining) const {
    const auto r = static_cast<std::int64_t>(remaining);
    const auto placed = static_cast<std::int64_t>(edges_.size());
    const std::int64_t gain = std::min(r * placed + r * (r - 1) / 2, r * partner_cap_);
    return current_ + gain < threshold_;
  }

  void emit(std::span<const Edge> edges) {
    ++examined_;
    if (current_ > best_) {
      best_ = current_;
      witness_.assign(edges.begin(), edges.end());
      threshold_ = std::max(threshold_, best_);
    }
  }

  std::int64_t best() const { return best_; }
  const std::vector<Edge>& witness() const { return witness_; }
  std::uint64_t examined() const { return examined_; }

 private:
  std::int64_t total_edges_;
  std::int64_t partner_cap_;
  std::int64_t threshold_;
  std::int64_t current_ = 0;
  std::int64_t best_ = -1;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> deltas_;
  std::vector<Edge> witness_;
  std::uint64_t examined_ = 0;
};

}  // namespace detail

/// Checkpoint file name for a shard.
inline std::filesystem::path checkpoint_path(const std::filesystem::path& dir, std::size_t id) {
  return dir / ("shard-" + std::to_string(id) + ".ckpt");
}

/// Text checkpoint, format "ckpt v1":
///   ckpt v1
///   order <n> degree <d>
///   shard <id> depth <depth>
///   prefix <u v>...
///   incumbent <best, -1 if none>
///   examined <count>
///   witness <u v>...
inline void write_checkpoint(const std::filesystem::path& path, const ShardResult& r) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary);
    if (!os) throw ResourceError("cannot write checkpoint " + tmp.string());
    os << "ckpt v1\n";
    os << "order " << r.n << " degree " << r.d << '\n';
    os << "shard " << r.id << " depth " << r.prefix.depth << '\n';
    detail::write_edge_list(os, "prefix", r.prefix.edges);
    os << "incumbent " << r.best << '\n';
    os << "examined " << r.examined << '\n';
    detail::write_edge_list(os, "witness", r.witness);
  }
  std::filesystem::rename(tmp, path);
}

inline ShardResult read_checkpoint(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw FormatError("cannot open checkpoint " + path.string());
  std::string line;
  auto next = [&](const std::string& key) {
    if (!std::getline(is, line)) throw FormatError("truncated checkpoint " + path.string());
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word != key) throw FormatError("checkpoint expected '" + key + "' in " + path.string());
    return ls;
  };
  if (!std::getline(is, line) || line != "ckpt v1") throw FormatError("not a ckpt v1 file: " + path.string());
  ShardResult r;
  std::string word;
  {
    auto ls = next("order");
    if (!(ls >> r.n >> word >> r.d) || word != "degree") throw FormatError("bad order line");
  }
  {
    auto ls = next("shard");
    if (!(ls >> r.id >> word >> r.prefix.depth) || word != "depth") throw FormatError("bad shard line");
  }
  {
    auto ls = next("prefix");
    r.prefix.edges = detail::read_edge_list(ls);
  }
  {
    auto ls = next("incumbent");
    if (!(ls >> r.best)) throw FormatError("bad incumbent line");
  }
  {
    auto ls = next("examined");
    if (!(ls >> r.examined)) throw FormatError("bad examined line");
  }
  {
    auto ls = next("witness");
    r.witness = detail::read_edge_list(ls);
  }
  return r;
}

namespace detail {

inline void check_search_cap(int n, int d, const SearchOptions& options) {
  require(feasible(n, d), "no d-regular graph of order n exists (n and d both odd)");
  const int cap = options.long_run ? std::max(options.max_order, 10) : options.max_order;
  if (n > cap || n > 10)
    throw ResourceError("convex search of order " + std::to_string(n) + " exceeds cap " + std::to_string(cap) +
                        (options.long_run ? "" : " (long-run mode allows 10)"));
}

inline ShardResult run_shard(int n, int d, std::size_t id, const ShardPrefix& prefix, std::int64_t threshold) {
  RegularEnumerator enumerator(n, d);
  ConvexMaxVisitor visitor(n, d, threshold);
  enumerator.run(prefix, visitor);
  return ShardResult{n, d, id, prefix, visitor.best(), visitor.witness(), visitor.examined()};
}

inline bool checkpoint_matches(const ShardResult& saved, int n, int d, std::size_t id, const ShardPrefix& prefix) {
  return saved.n == n && saved.d == d && saved.id == id && saved.prefix.depth == prefix.depth &&
         saved.prefix.edges == prefix.edges;
}

}  // namespace detail

/// Maximum crossings over all labeled d-regular graphs drawn on the identity
/// convex order. Relabeling a graph is the same as permuting the corners, so
/// this is the maximum over every graph and every convex placement.
///
/// Shards run concurrently but each keeps its own incumbent, so the value,
/// the witness (lexicographically least maximizer), and graphs_examined do not
/// depend on the worker count.
inline SearchResult convex_max(int n, int d, const SearchOptions& options = {}) {
  detail::check_search_cap(n, d, options);
  const auto start = std::chrono::steady_clock::now();

  const std::int64_t threshold = options.seed_with_construction ? best_known(n, d).lower : 0;
  std::vector<ShardPrefix> prefixes = RegularEnumerator(n, d).shards(options.shard_depth);
  std::vector<ShardResult> results(prefixes.size());

  if (options.checkpoint_dir) std::filesystem::create_directories(*options.checkpoint_dir);

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    for (;;) {
      std::size_t id = next.fetch_add(1);
      if (id >= prefixes.size()) return;
      try {
        if (options.checkpoint_dir) {
          auto path = checkpoint_path(*options.checkpoint_dir, id);
          if (std::filesystem::exists(path)) {
            ShardResult saved = read_checkpoint(path);
            if (detail::checkpoint_matches(saved, n, d, id, prefixes[id])) {
              results[id] = std::move(saved);
              continue;
            }
          }
          results[id] = detail::run_shard(n, d, id, prefixes[id], threshold);
          write_checkpoint(path, results[id]);
        } else {
          results[id] = detail::run_shard(n, d, id, prefixes[id], threshold);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };

  const int workers = std::max(1, options.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  SearchResult out;
  out.n = n;
  out.d = d;
  out.mode = SearchMode::convex_exhaustive;
  const ShardResult* winner = nullptr;
  for (const ShardResult& r : results) {
    out.graphs_examined += r.examined;
    if (r.best > out.max_crossings) {
      out.max_crossings = r.best;
      winner = &r;
    }
  }
  if (winner) out.witness = RegularGraph(n, d, winner->witness);
  out.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return out;
}

/// Best crossing count over random general-position drawings of random
/// d-regular graphs. Deterministic for a fixed seed.
inline SearchResult perturbation_probe(int n, int d, std::int64_t trials, std::uint64_t seed) {
  detail::require(feasible(n, d), "no d-regular graph of order n exists (n and d both odd)");
  detail::require(trials >= 1, "perturbation probe needs at least one trial");
  const auto start = std::chrono::steady_clock::now();
  Rng rng(seed);
  SearchResult out;
  out.n = n;
  out.d = d;
  out.mode = SearchMode::perturbation;
  for (std::int64_t t = 0; t < trials; ++t) {
    GeometricDrawing drawing = random_drawing(n, d, rng);
    std::int64_t crossings = count_crossings_geometric(drawing).total;
    ++out.graphs_examined;
    if (crossings > out.max_crossings) {
      out.max_crossings = crossings;
      out.witness = drawing.graph;
      out.witness_drawing = std::move(drawing);
    }
  }
  out.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return out;
}

}  // namespace maxcross
