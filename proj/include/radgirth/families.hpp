#pragma once

// Small named graphs used as inputs and test fixtures.

#include <cstdint>
#include <vector>

#include "radgirth/error.hpp"
#include "radgirth/graph.hpp"

namespace radgirth {

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return {n, edges};
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InputError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return {n, edges};
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
  return {n, edges};
}

/// K_{a,b}: side A is 0..a-1, side B is a..a+b-1.
inline Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) edges.push_back({i, static_cast<Vertex>(a + j)});
  return {a + b, edges};
}

/// Star K_{1,leaves} with centre 0.
inline Graph star_graph(std::size_t leaves) { return complete_bipartite_graph(1, leaves); }

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({i + 5, (i + 2) % 5 + 5});
  }
  return {10, edges};
}

/// d-dimensional hypercube Q_d on bit strings.
inline Graph hypercube_graph(unsigned d) {
  const std::size_t n = std::size_t{1} << d;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    for (unsigned b = 0; b < d; ++b)
      if (!(v & (1U << b))) edges.push_back({v, v | (1U << b)});
  return {n, edges};
}

/// Disjoint union of two graphs; b's vertices are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const auto shift = static_cast<Vertex>(a.order());
  for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return {a.order() + b.order(), edges};
}

}  // namespace radgirth
