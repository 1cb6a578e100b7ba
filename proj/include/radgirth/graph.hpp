#pragma once

// Immutable simple undirected graphs and the metric toolkit built on them:
// BFS distances, eccentricities, radius, diameter, girth, balls, spheres,
// bridges and induced subgraphs.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "radgirth/error.hpp"

namespace radgirth {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  /// Same edge with the smaller endpoint first.
  constexpr Edge normalized() const { return u <= v ? Edge{u, v} : Edge{v, u}; }

  friend constexpr bool operator==(const Edge&, const Edge&) = default;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Neighbour lists are sorted
/// and duplicate free. Graphs up to kBitRowLimit vertices additionally carry
/// one adjacency bit row per vertex for O(1) adjacency tests and word-parallel
/// neighbourhood intersection.
class Graph {
 public:
  static constexpr std::size_t kBitRowLimit = 4096;

  Graph() = default;

  /// Builds a graph from an edge list. Repeated pairs collapse into one edge.
  /// Throws InputError on an out-of-range endpoint or a self-loop.
  Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
    for (const Edge& e : edges) {
      if (e.u >= n || e.v >= n) {
        throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") has an endpoint outside 0.." + (n == 0 ? std::string("(empty)") : std::to_string(n - 1)));
      }
      if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    std::size_t degree_sum = 0;
    for (auto& nbrs : adj_) {
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
      degree_sum += nbrs.size();
    }
    edge_count_ = degree_sum / 2;
    if (n <= kBitRowLimit) {
      words_ = (n + 63) / 64;
      rows_.assign(n * words_, 0);
      for (Vertex v = 0; v < n; ++v)
        for (Vertex w : adj_[v]) rows_[v * words_ + w / 64] |= std::uint64_t{1} << (w % 64);
    }
  }

  Graph(std::size_t n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}
  Graph(std::size_t n, const std::vector<Edge>& edges) : Graph(n, std::span<const Edge>(edges)) {}

  std::size_t order() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  bool adjacent(Vertex u, Vertex v) const {
    if (u >= order() || v >= order()) return false;
    if (has_bit_rows()) return (rows_[u * words_ + v / 64] >> (v % 64)) & 1U;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  bool has_bit_rows() const { return !adj_.empty() && !rows_.empty(); }

  /// Adjacency bit row of v; empty when the graph is above kBitRowLimit.
  std::span<const std::uint64_t> row(Vertex v) const {
    if (!has_bit_rows()) return {};
    return {rows_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  std::size_t common_neighbor_count(Vertex u, Vertex v) const {
    if (has_bit_rows()) {
      std::size_t count = 0;
      auto a = row(u);
      auto b = row(v);
      for (std::size_t i = 0; i < words_; ++i) count += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
      return count;
    }
    std::size_t count = 0;
    auto a = neighbors(u);
    auto b = neighbors(v);
    for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
      if (a[i] < b[j]) {
        ++i;
      } else if (b[j] < a[i]) {
        ++j;
      } else {
        ++count;
        ++i;
        ++j;
      }
    }
    return count;
  }

  std::size_t min_degree() const {
    std::size_t d = adj_.empty() ? 0 : std::numeric_limits<std::size_t>::max();
    for (const auto& nbrs : adj_) d = std::min(d, nbrs.size());
    return d;
  }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& nbrs : adj_) d = std::max(d, nbrs.size());
    return d;
  }

  /// All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.push_back({u, v});
    return out;
  }

  /// Copy with one edge removed (no-op when absent).
  Graph without_edge(Edge e) const {
    const Edge target = e.normalized();
    std::vector<Edge> kept;
    kept.reserve(edge_count_);
    for (const Edge& f : edges())
      if (f != target) kept.push_back(f);
    return {order(), kept};
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> rows_;
  std::size_t words_ = 0;
  std::size_t edge_count_ = 0;
};

/// Hop distances from one source vertex.
class DistanceVector {
 public:
  static constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

  DistanceVector(Vertex source, std::vector<std::uint32_t> dist) : source_(source), dist_(std::move(dist)) {}

  Vertex source() const { return source_; }
  std::size_t size() const { return dist_.size(); }
  std::uint32_t operator[](Vertex v) const { return dist_[v]; }
  bool reachable(Vertex v) const { return dist_[v] != kUnreachable; }
  std::span<const std::uint32_t> values() const { return dist_; }

  bool all_reachable() const {
    return std::none_of(dist_.begin(), dist_.end(), [](std::uint32_t d) { return d == kUnreachable; });
  }

  /// Largest finite distance (the eccentricity when the graph is connected).
  std::uint32_t max_finite() const {
    std::uint32_t best = 0;
    for (std::uint32_t d : dist_)
      if (d != kUnreachable) best = std::max(best, d);
    return best;
  }

 private:
  Vertex source_;
  std::vector<std::uint32_t> dist_;
};

/// Length of a shortest cycle; forests have infinite girth, which orders
/// above every finite length.
class Girth {
 public:
  static constexpr Girth infinite() { return Girth(); }
  constexpr explicit Girth(std::uint32_t length) : length_(length) {}

  constexpr bool is_infinite() const { return !length_.has_value(); }
  constexpr std::uint32_t value() const { return length_.value(); }

  /// girth >= g; always true for forests.
  constexpr bool at_least(std::uint32_t g) const { return is_infinite() || *length_ >= g; }

  std::string str() const { return is_infinite() ? std::string("infinite") : std::to_string(*length_); }

  friend constexpr bool operator==(const Girth&, const Girth&) = default;
  friend constexpr std::strong_ordering operator<=>(const Girth& a, const Girth& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
    return *a.length_ <=> *b.length_;
  }

 private:
  constexpr Girth() = default;
  std::optional<std::uint32_t> length_;
};

inline void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) throw InputError("vertex " + std::to_string(v) + " out of range for graph of order " +
                                       std::to_string(g.order()));
}

inline DistanceVector bfs(const Graph& g, Vertex source) {
  check_vertex(g, source);
  std::vector<std::uint32_t> dist(g.order(), DistanceVector::kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == DistanceVector::kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return {source, std::move(dist)};
}

inline std::uint32_t distance(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, v);
  return bfs(g, u)[v];
}

/// Dense all-pairs distance table, one BFS per vertex.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g) : n_(g.order()), dist_(g.order() * g.order()) {
    for (Vertex s = 0; s < n_; ++s) {
      const DistanceVector d = bfs(g, s);
      std::copy(d.values().begin(), d.values().end(), dist_.begin() + static_cast<std::ptrdiff_t>(s * n_));
    }
  }

  std::uint32_t operator()(Vertex u, Vertex v) const { return dist_[u * n_ + v]; }
  std::size_t order() const { return n_; }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> dist_;
};

inline std::size_t component_count(const Graph& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Vertex> stack;
  std::size_t count = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++count;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

/// The empty graph counts as disconnected; a single vertex is connected.
inline bool is_connected(const Graph& g) { return g.order() > 0 && component_count(g) == 1; }

/// Shortest cycle length via one BFS per root.
inline Girth girth(const Graph& g) {
  const std::size_t n = g.order();
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dist(n);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), DistanceVector::kUnreachable);
    queue.clear();
    dist[root] = 0;
    parent[root] = root;
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      if (2 * dist[u] >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == DistanceVector::kUnreachable) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best == std::numeric_limits<std::uint32_t>::max() ? Girth::infinite() : Girth(best);
}

struct MetricSummary {
  std::size_t order = 0;
  std::size_t edge_count = 0;
  bool connected = false;
  std::optional<std::uint32_t> radius;    ///< empty when disconnected
  std::optional<std::uint32_t> diameter;  ///< empty when disconnected
  Girth girth = Girth::infinite();
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::vector<Vertex> centers;            ///< vertices of minimum eccentricity, ascending
  std::vector<std::uint32_t> eccentricity;  ///< per vertex; empty when disconnected
};

inline MetricSummary metric_summary(const Graph& g) {
  MetricSummary s;
  s.order = g.order();
  s.edge_count = g.edge_count();
  s.connected = is_connected(g);
  s.girth = girth(g);
  s.min_degree = g.min_degree();
  s.max_degree = g.max_degree();
  if (!s.connected) return s;
  s.eccentricity.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) s.eccentricity[v] = bfs(g, v).max_finite();
  const auto [lo, hi] = std::minmax_element(s.eccentricity.begin(), s.eccentricity.end());
  s.radius = *lo;
  s.diameter = *hi;
  for (Vertex v = 0; v < g.order(); ++v)
    if (s.eccentricity[v] == *lo) s.centers.push_back(v);
  return s;
}

inline std::optional<std::uint32_t> radius(const Graph& g) { return metric_summary(g).radius; }

/// { w : d(v, w) <= k }, ascending.
inline std::vector<Vertex> ball(const Graph& g, Vertex v, std::uint32_t k) {
  const DistanceVector d = bfs(g, v);
  std::vector<Vertex> out;
  for (Vertex w = 0; w < g.order(); ++w)
    if (d[w] <= k) out.push_back(w);
  return out;
}

/// { w : d(v, w) == k }, ascending.
inline std::vector<Vertex> sphere(const Graph& g, Vertex v, std::uint32_t k) {
  const DistanceVector d = bfs(g, v);
  std::vector<Vertex> out;
  for (Vertex w = 0; w < g.order(); ++w)
    if (d[w] == k) out.push_back(w);
  return out;
}

/// Cut edges (u < v), sorted. Iterative lowlink DFS.
inline std::vector<Edge> bridges(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> order(n, kUnvisited);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<Edge> out;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
    bool parent_edge_skipped;
  };
  std::vector<Frame> stack;
  std::uint32_t clock = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (order[root] != kUnvisited) continue;
    order[root] = low[root] = clock++;
    stack.push_back({root, root, 0, true});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        const Vertex w = nbrs[f.next++];
        if (w == f.parent && !f.parent_edge_skipped) {
          f.parent_edge_skipped = true;
          continue;
        }
        if (order[w] == kUnvisited) {
          order[w] = low[w] = clock++;
          stack.push_back({w, f.v, 0, false});
        } else {
          low[f.v] = std::min(low[f.v], order[w]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          const Vertex p = stack.back().v;
          low[p] = std::min(low[p], low[done.v]);
          if (low[done.v] > order[p]) out.push_back(Edge{p, done.v}.normalized());
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  ///< original[i] = id in the parent graph of new vertex i
};

/// Subgraph induced by `subset`; relabels in ascending original order.
inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  std::vector<Vertex> keep(subset.begin(), subset.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  constexpr Vertex kAbsent = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> relabel(g.order(), kAbsent);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    check_vertex(g, keep[i]);
    relabel[keep[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (Vertex u : keep)
    for (Vertex w : g.neighbors(u))
      if (u < w && relabel[w] != kAbsent) edges.push_back({relabel[u], relabel[w]});
  return {Graph(keep.size(), edges), std::move(keep)};
}

/// A shortest path from `from` to `to` (inclusive). At every step back from
/// `to` the lowest-index neighbour one level closer is taken. Empty when
/// unreachable.
inline std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to) {
  check_vertex(g, to);
  const DistanceVector d = bfs(g, from);
  if (!d.reachable(to)) return {};
  std::vector<Vertex> path(d[to] + 1);
  Vertex cur = to;
  path[d[to]] = cur;
  for (std::uint32_t level = d[to]; level > 0; --level) {
    for (Vertex w : g.neighbors(cur)) {
      if (d[w] == level - 1) {
        cur = w;
        break;
      }
    }
    path[level - 1] = cur;
  }
  return path;
}

/// True when consecutive entries are adjacent and path[i] is at distance i
/// from path[0].
inline bool is_geodesic(const Graph& g, std::span<const Vertex> path) {
  if (path.empty()) return false;
  for (Vertex v : path)
    if (v >= g.order()) return false;
  const DistanceVector d = bfs(g, path.front());
  for (std::size_t i = 0; i < path.size(); ++i)
    if (d[path[i]] != i) return false;
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!g.adjacent(path[i], path[i + 1])) return false;
  return true;
}

}  // namespace radgirth
