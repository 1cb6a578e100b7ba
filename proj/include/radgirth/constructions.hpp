#pragma once

// Explicit extremal families: blown-up even cycles ("box graphs"), the two
// small-radius triangle-free families, cyclic gluing of cage copies, and
// extraction of a dense ball from a graph of large radius.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "radgirth/error.hpp"
#include "radgirth/graph.hpp"
#include "radgirth/rational.hpp"

namespace radgirth {

struct BoxSpec {
  std::uint32_t r = 0;
  std::uint32_t delta = 0;
  std::uint32_t c = 0;
  std::vector<std::uint32_t> box_sizes;  ///< 2r entries, B_0 first
};

/// Box sizes: ceil(delta/2) for boxes i = 0,1 (mod 4), floor(delta/2) for
/// i = 2,3 (mod 4), and every surplus vertex in B_0. Keeping the surplus in
/// one box leaves the boxes away from B_0 at degree exactly delta.
inline BoxSpec box_spec(std::uint32_t r, std::uint32_t delta, std::uint32_t c) {
  if (r < 4) throw InputError("box graph needs radius r >= 4 (got " + std::to_string(r) + ")");
  if (delta < 2) throw InputError("box graph needs minimum degree >= 2 (got " + std::to_string(delta) + ")");
  BoxSpec spec{r, delta, c, std::vector<std::uint32_t>(2 * r)};
  for (std::uint32_t i = 0; i < 2 * r; ++i) spec.box_sizes[i] = (i % 4 <= 1) ? (delta + 1) / 2 : delta / 2;
  spec.box_sizes[0] += c;
  return spec;
}

/// Blow-up of C_{2r}: box B_i is fully joined to B_{i-1} and B_{i+1}
/// (indices mod 2r). Vertices are numbered box by box.
inline Graph box_graph(const BoxSpec& spec) {
  const std::size_t boxes = spec.box_sizes.size();
  std::vector<Vertex> first(boxes + 1, 0);
  for (std::size_t i = 0; i < boxes; ++i) first[i + 1] = first[i] + spec.box_sizes[i];
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < boxes; ++i) {
    const std::size_t j = (i + 1) % boxes;
    for (Vertex a = first[i]; a < first[i + 1]; ++a)
      for (Vertex b = first[j]; b < first[j + 1]; ++b) edges.push_back({a, b});
  }
  return {first[boxes], edges};
}

/// Connected triangle-free graph on 2*ceil(r*delta/2) + c vertices with
/// minimum degree delta and radius r.
inline Graph box_graph(std::uint32_t r, std::uint32_t delta, std::uint32_t c) { return box_graph(box_spec(r, delta, c)); }

/// K_{delta, n-delta}: radius 2, minimum degree delta. Needs n >= 2 delta.
inline Graph bipartite_radius2(std::uint32_t n, std::uint32_t delta) {
  if (delta < 1) throw InputError("minimum degree must be positive");
  if (n < 2 * delta)
    throw InputError("no connected triangle-free graph on " + std::to_string(n) + " vertices has minimum degree " +
                     std::to_string(delta) + " (need n >= 2*delta)");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < delta; ++i)
    for (Vertex j = delta; j < n; ++j) edges.push_back({i, j});
  return {n, edges};
}

/// K_{delta+1, n-delta-1} on sides v_1..v_{delta+1} (vertices 0..delta) and
/// w_1..w_{n-delta-1} (vertices delta+1..n-1), minus the matching v_i w_i for
/// i <= delta+1 and minus every edge v_{delta+1} w_j for j >= delta+2.
/// Radius 3, minimum degree delta, triangle-free. Needs n >= 2 delta + 2.
inline Graph radius3_graph(std::uint32_t n, std::uint32_t delta) {
  if (delta < 1) throw InputError("minimum degree must be positive");
  if (n < 2 * delta + 2)
    throw InputError("radius-3 construction needs n >= 2*delta+2 (got n=" + std::to_string(n) +
                     ", delta=" + std::to_string(delta) + ")");
  const std::uint32_t left = delta + 1;
  const std::uint32_t right = n - left;
  std::vector<Edge> edges;
  for (std::uint32_t i = 1; i <= left; ++i) {
    for (std::uint32_t j = 1; j <= right; ++j) {
      if (i == j) continue;
      if (i == left && j >= left + 1) continue;
      edges.push_back({i - 1, left + j - 1});
    }
  }
  return {n, edges};
}

struct GlueSpec {
  Graph base;
  std::uint32_t copies = 0;
  Edge cut_edge;  ///< lexicographically smallest non-bridge edge of base
};

/// Validates the base graph and picks the cut edge.
inline GlueSpec glue_spec(const Graph& base, std::uint32_t copies) {
  if (copies < 2) throw InputError("gluing needs at least 2 copies");
  if (!is_connected(base)) throw InputError("gluing needs a connected base graph");
  if (base.min_degree() < 2) throw InputError("gluing needs a base graph of minimum degree >= 2");
  const std::vector<Edge> cut = bridges(base);
  for (const Edge& e : base.edges())
    if (!std::binary_search(cut.begin(), cut.end(), e)) return {base, copies, e};
  throw InputError("base graph has no edge on a cycle");
}

/// m copies of H minus its cut edge (v,w), strung into a ring by the edges
/// v_i -- w_{i+1} (indices mod m). Copy i occupies vertices i*|H|..(i+1)*|H|-1.
inline Graph glue_cycle(const GlueSpec& spec) {
  const auto n = static_cast<Vertex>(spec.base.order());
  const Edge cut = spec.cut_edge;
  std::vector<Edge> base_edges;
  for (const Edge& e : spec.base.edges())
    if (e != cut) base_edges.push_back(e);
  std::vector<Edge> edges;
  edges.reserve(spec.copies * spec.base.edge_count());
  for (Vertex i = 0; i < spec.copies; ++i) {
    for (const Edge& e : base_edges) edges.push_back({i * n + e.u, i * n + e.v});
    const Vertex next = (i + 1) % spec.copies;
    edges.push_back({i * n + cut.u, next * n + cut.v});
  }
  return {static_cast<std::size_t>(spec.copies) * n, edges};
}

inline Graph glue_cycle(const Graph& base, std::uint32_t copies) { return glue_cycle(glue_spec(base, copies)); }

struct ExtractionResult {
  Vertex center = 0;
  std::vector<Vertex> geodesic;    ///< v_0..v_r, v_0 = center
  std::size_t chosen_index = 0;    ///< i minimizing |Q(v_i)|, lowest on ties
  std::vector<Vertex> ball;        ///< Q(v_i), ascending
  InducedSubgraph subgraph;        ///< graph induced by Q(v_i)
  std::vector<std::size_t> ball_sizes;  ///< |Q(v_j)| for every j
  std::size_t covering_sum = 0;    ///< sum of ball_sizes
  Rational vertex_bound;           ///< (2k+1) n / (r+1)
  Rational edge_bound;             ///< delta^2 (delta-1)^(k-2) / 2
  bool meets_vertex_bound = false;
  bool meets_edge_bound = false;
  bool meets_covering_bound = false;  ///< covering_sum <= (2k+1) n
};

/// Walks a geodesic from the lowest-index center to the lowest-index
/// farthest vertex and returns the smallest radius-k ball around a geodesic
/// vertex. Needs a connected graph with girth >= 2k, k >= 2, min degree >= 2.
inline ExtractionResult extract_dense_subgraph(const Graph& g, std::uint32_t k) {
  if (k < 2) throw InputError("half-girth k must be at least 2");
  const MetricSummary ms = metric_summary(g);
  if (!ms.connected) throw InputError("extraction needs a connected graph");
  if (!ms.girth.at_least(2 * k))
    throw InputError("extraction needs girth >= " + std::to_string(2 * k) + " (measured " + ms.girth.str() + ")");
  if (ms.min_degree < 2) throw InputError("extraction needs minimum degree >= 2");

  ExtractionResult out;
  out.center = ms.centers.front();
  const std::uint32_t r = *ms.radius;
  const DistanceVector from_center = bfs(g, out.center);
  Vertex far = 0;
  while (from_center[far] != r) ++far;
  out.geodesic = shortest_path(g, out.center, far);

  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < out.geodesic.size(); ++i) {
    const std::size_t size = ball(g, out.geodesic[i], k).size();
    out.ball_sizes.push_back(size);
    out.covering_sum += size;
    if (size < best) {
      best = size;
      out.chosen_index = i;
    }
  }
  out.ball = ball(g, out.geodesic[out.chosen_index], k);
  out.subgraph = induced_subgraph(g, out.ball);

  const auto n = static_cast<std::int64_t>(g.order());
  const auto delta = static_cast<std::int64_t>(ms.min_degree);
  out.vertex_bound = Rational((2 * k + 1) * n, r + 1);
  out.edge_bound = Rational(delta * delta * detail::checked_pow(delta - 1, static_cast<int>(k) - 2), 2);
  out.meets_vertex_bound = Rational(static_cast<std::int64_t>(out.ball.size())) <= out.vertex_bound;
  out.meets_edge_bound = Rational(static_cast<std::int64_t>(out.subgraph.graph.edge_count())) >= out.edge_bound;
  out.meets_covering_bound = out.covering_sum <= (2 * k + 1) * g.order();
  return out;
}

}  // namespace radgirth
