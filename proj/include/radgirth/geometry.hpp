#pragma once

// Incidence graphs of finite geometries: the projective plane PG(2,q)
// (girth 6) and the symplectic generalized quadrangle W(q) (girth 8).
// Girth-12 cages are brought in through import_cage.

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "radgirth/error.hpp"
#include "radgirth/finite_field.hpp"
#include "radgirth/graph.hpp"
#include "radgirth/graph_io.hpp"

namespace radgirth {

/// A point of PG(d,q): d+1 coordinates, first nonzero coordinate equal to one.
struct ProjectivePoint {
  std::vector<FieldElement> coords;

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
  friend auto operator<=>(const ProjectivePoint&, const ProjectivePoint&) = default;
};

/// Scales a nonzero vector so its first nonzero coordinate is one.
inline ProjectivePoint normalize(const FiniteField& f, std::vector<FieldElement> v) {
  auto lead = std::find_if(v.begin(), v.end(), [](FieldElement x) { return x.index != 0; });
  if (lead == v.end()) throw InputError("the zero vector is not a projective point");
  const FieldElement s = f.inv(*lead);
  for (auto& x : v) x = f.mul(x, s);
  return {std::move(v)};
}

/// Packs normalized coordinates into a base-q integer; lexicographic order on
/// coordinates equals numeric order on codes.
inline std::size_t point_code(const FiniteField& f, const ProjectivePoint& p) {
  std::size_t code = 0;
  for (FieldElement x : p.coords) code = code * f.order() + x.index;
  return code;
}

/// All points of PG(d,q) in lexicographic order of normalized coordinates.
inline std::vector<ProjectivePoint> projective_points(const FiniteField& f, std::size_t d) {
  const std::size_t len = d + 1;
  std::size_t total = 1;
  for (std::size_t i = 0; i < len; ++i) total *= f.order();
  std::vector<ProjectivePoint> out;
  std::vector<FieldElement> v(len);
  for (std::size_t code = 1; code < total; ++code) {
    std::size_t x = code;
    for (std::size_t i = len; i-- > 0; x /= f.order()) v[i] = {static_cast<std::uint32_t>(x % f.order())};
    auto lead = std::find_if(v.begin(), v.end(), [](FieldElement e) { return e.index != 0; });
    if (lead->index == 1) out.push_back({v});
  }
  return out;
}

inline FieldElement dot(const FiniteField& f, const ProjectivePoint& a, const ProjectivePoint& b) {
  FieldElement s = f.zero();
  for (std::size_t i = 0; i < a.coords.size(); ++i) s = f.add(s, f.mul(a.coords[i], b.coords[i]));
  return s;
}

/// B(x,y) = x0 y1 - x1 y0 + x2 y3 - x3 y2 on GF(q)^4.
inline FieldElement symplectic_form(const FiniteField& f, const ProjectivePoint& x, const ProjectivePoint& y) {
  const auto& a = x.coords;
  const auto& b = y.coords;
  FieldElement s = f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]));
  return f.add(s, f.sub(f.mul(a[2], b[3]), f.mul(a[3], b[2])));
}

/// Point/line incidence graph of PG(2,q). Vertices 0..q^2+q are the points,
/// the next q^2+q+1 vertices the lines, both in lexicographic coordinate
/// order; a point lies on a line when their coordinate dot product vanishes.
inline Graph projective_plane_incidence_graph(std::uint32_t q) {
  const FiniteField f(q);
  const auto pts = projective_points(f, 2);
  const auto count = static_cast<Vertex>(pts.size());
  std::vector<Edge> edges;
  edges.reserve(pts.size() * (q + 1));
  for (Vertex i = 0; i < count; ++i)
    for (Vertex j = 0; j < count; ++j)
      if (dot(f, pts[i], pts[j]).index == 0) edges.push_back({i, count + j});
  return {2 * pts.size(), edges};
}

/// Totally isotropic lines of W(q), each as the ascending list of the
/// indices (into projective_points(f, 3)) of its q+1 points. Sorted
/// lexicographically.
inline std::vector<std::vector<Vertex>> symplectic_lines(const FiniteField& f,
                                                         const std::vector<ProjectivePoint>& pts) {
  const std::uint32_t q = f.order();
  std::vector<Vertex> index_of(static_cast<std::size_t>(q) * q * q * q, 0);
  for (Vertex i = 0; i < pts.size(); ++i) index_of[point_code(f, pts[i])] = i;

  std::vector<std::vector<Vertex>> lines;
  std::vector<FieldElement> v(4);
  for (Vertex x = 0; x < pts.size(); ++x) {
    for (Vertex y = x + 1; y < pts.size(); ++y) {
      if (symplectic_form(f, pts[x], pts[y]).index != 0) continue;
      // Points of span(x, y): y itself and x + b y for every b.
      std::vector<Vertex> line{y};
      bool smallest_pair = true;
      for (std::uint32_t b = 0; b < q && smallest_pair; ++b) {
        for (std::size_t c = 0; c < 4; ++c) v[c] = f.add(pts[x].coords[c], f.mul({b}, pts[y].coords[c]));
        const Vertex idx = index_of[point_code(f, normalize(f, v))];
        if (idx < y && idx != x) smallest_pair = false;
        line.push_back(idx);
      }
      // Each line is emitted once, from its two smallest points.
      if (!smallest_pair) continue;
      std::sort(line.begin(), line.end());
      lines.push_back(std::move(line));
    }
  }
  std::sort(lines.begin(), lines.end());
  return lines;
}

/// Point/line incidence graph of the symplectic generalized quadrangle
/// W(q): points of PG(3,q) first, then the totally isotropic lines.
inline Graph symplectic_quadrangle_incidence_graph(std::uint32_t q) {
  const FiniteField f(q);
  const auto pts = projective_points(f, 3);
  const auto lines = symplectic_lines(f, pts);
  const auto base = static_cast<Vertex>(pts.size());
  std::vector<Edge> edges;
  edges.reserve(lines.size() * (q + 1));
  for (Vertex l = 0; l < lines.size(); ++l)
    for (Vertex p : lines[l]) edges.push_back({p, base + l});
  return {pts.size() + lines.size(), edges};
}

inline Graph heawood_graph() { return projective_plane_incidence_graph(2); }
inline Graph tutte_coxeter_graph() { return symplectic_quadrangle_incidence_graph(2); }

/// Decodes graph6 data and checks it is connected with min degree at least
/// expected_delta and girth at least expected_girth. Throws InputError on
/// malformed data, ValidationError (with the measured values) otherwise.
inline Graph import_cage(std::string_view graph6, std::size_t expected_delta, std::uint32_t expected_girth) {
  Graph g = from_graph6(graph6);
  const bool connected = is_connected(g);
  const std::size_t delta = g.min_degree();
  const Girth measured = girth(g);
  if (!connected || delta < expected_delta || !measured.at_least(expected_girth)) {
    throw ValidationError("imported graph rejected: connected=" + std::string(connected ? "yes" : "no") +
                          ", min degree " + std::to_string(delta) + " (need >= " + std::to_string(expected_delta) +
                          "), girth " + measured.str() + " (need >= " + std::to_string(expected_girth) + ")");
  }
  return g;
}

}  // namespace radgirth
