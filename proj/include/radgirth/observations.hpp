#pragma once

// Two geodesics out of a center and the distance facts relating them.
//
// Setting: v_0 is a center of a connected graph of radius r, v_0..v_r a
// shortest path, 1 <= m <= r-1, v' a vertex with d(v_m, v') >= r, and
// v_0 = v'_0, ..., v'_{r-t} = v' a shortest path (so d(v_0, v') = r - t).
// Then
//   (a) t <= m;
//   (b) with D = d(v_m, v'): d(v_i, v'_j) >= D + m + t + j - r - i for i >= m,
//       d(v_i, v'_j) >= D + i + j + t - m - r for i < m, and
//       d(v_i, v'_j) >= |i - j| always;
//   (c) v_i != v'_i whenever 2i > m + r - t - D, and v_i != v'_j for i != j.

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "radgirth/error.hpp"
#include "radgirth/graph.hpp"
#include "radgirth/witness.hpp"

namespace radgirth {

struct GeodesicConfiguration {
  std::vector<Vertex> path;         ///< v_0..v_r
  std::uint32_t m = 1;
  std::vector<Vertex> vprime_path;  ///< v'_0..v'_{r-t}
};

struct ObservationReport {
  std::uint32_t r = 0;
  std::int64_t t = 0;
  std::uint32_t far_distance = 0;  ///< D = d(v_m, v')
  std::vector<ProofCheck> preconditions;
  ProofCheck shift_at_most_m{"shift_at_most_m", false, ""};
  ProofCheck cross_distance_bounds{"cross_distance_bounds", false, ""};
  ProofCheck level_difference_bound{"level_difference_bound", false, ""};
  ProofCheck distinct_vertices{"distinct_vertices", false, ""};

  bool preconditions_hold() const {
    return std::all_of(preconditions.begin(), preconditions.end(), [](const ProofCheck& c) { return c.holds; });
  }
  bool observations_hold() const {
    return shift_at_most_m.holds && cross_distance_bounds.holds && level_difference_bound.holds &&
           distinct_vertices.holds;
  }
};

/// Evaluates the setting's preconditions and the three observations without
/// throwing on a broken setting, so a violated precondition can be seen to
/// break the corresponding observation.
inline ObservationReport evaluate_geodesic_observations(const Graph& g, Vertex v0, const GeodesicConfiguration& cfg) {
  ObservationReport rep;
  const auto& path = cfg.path;
  const auto& vp = cfg.vprime_path;
  check_vertex(g, v0);
  if (path.empty() || vp.empty()) throw InputError("both geodesics need at least one vertex");
  for (Vertex v : path) check_vertex(g, v);
  for (Vertex v : vp) check_vertex(g, v);

  const MetricSummary ms = metric_summary(g);
  rep.preconditions.push_back({"connected", ms.connected, ""});
  if (!ms.connected) return rep;
  const std::uint32_t radius = *ms.radius;
  rep.r = static_cast<std::uint32_t>(path.size() - 1);
  const std::uint32_t r = rep.r;
  const std::uint32_t m = cfg.m;
  rep.t = static_cast<std::int64_t>(r) - static_cast<std::int64_t>(vp.size() - 1);

  rep.preconditions.push_back({"center", ms.eccentricity[v0] == radius,
                               "eccentricity " + std::to_string(ms.eccentricity[v0]) + ", radius " + std::to_string(radius)});
  rep.preconditions.push_back({"path_starts_at_center", path.front() == v0 && vp.front() == v0, ""});
  rep.preconditions.push_back({"path_length_is_radius", r == radius, "length " + std::to_string(r)});
  rep.preconditions.push_back({"path_is_geodesic", is_geodesic(g, path), ""});
  rep.preconditions.push_back({"vprime_path_is_geodesic", is_geodesic(g, vp), ""});
  rep.preconditions.push_back({"m_in_range", m >= 1 && m + 1 <= r, "m = " + std::to_string(m)});
  if (m > r) return rep;

  const DistanceVector from_m = bfs(g, path[m]);
  rep.far_distance = from_m[vp.back()];
  const auto D = static_cast<std::int64_t>(rep.far_distance);
  rep.preconditions.push_back({"far_from_v_m", rep.far_distance >= r, "d(v_m, v') = " + std::to_string(rep.far_distance)});

  const std::int64_t t = rep.t;
  rep.shift_at_most_m = {"shift_at_most_m", t <= static_cast<std::int64_t>(m),
                         "t = " + std::to_string(t) + ", m = " + std::to_string(m)};

  bool bounds_ok = true;
  bool abs_ok = true;
  std::string bounds_detail;
  std::string abs_detail;
  const auto ri = static_cast<std::int64_t>(r);
  const auto mi = static_cast<std::int64_t>(m);
  for (std::size_t i = 0; i < path.size(); ++i) {
    const DistanceVector di = bfs(g, path[i]);
    const auto ii = static_cast<std::int64_t>(i);
    for (std::size_t j = 0; j < vp.size(); ++j) {
      const auto jj = static_cast<std::int64_t>(j);
      const auto d = static_cast<std::int64_t>(di[vp[j]]);
      const std::int64_t lower = i >= m ? D + mi + t + jj - ri - ii : D + ii + jj + t - mi - ri;
      if (d < lower && bounds_ok) {
        bounds_ok = false;
        bounds_detail = "d(v_" + std::to_string(i) + ", v'_" + std::to_string(j) + ") = " + std::to_string(d) + " < " +
                        std::to_string(lower);
      }
      if (d < std::llabs(ii - jj) && abs_ok) {
        abs_ok = false;
        abs_detail = "d(v_" + std::to_string(i) + ", v'_" + std::to_string(j) + ") = " + std::to_string(d);
      }
    }
  }
  rep.cross_distance_bounds = {"cross_distance_bounds", bounds_ok, bounds_detail};
  rep.level_difference_bound = {"level_difference_bound", abs_ok, abs_detail};

  bool distinct_ok = true;
  std::string distinct_detail;
  for (std::size_t i = 0; i < path.size() && distinct_ok; ++i) {
    for (std::size_t j = 0; j < vp.size(); ++j) {
      if (path[i] != vp[j]) continue;
      const auto ii = static_cast<std::int64_t>(i);
      const bool forbidden = i != j || 2 * ii > mi + ri - t - D;
      if (forbidden) {
        distinct_ok = false;
        distinct_detail = "v_" + std::to_string(i) + " = v'_" + std::to_string(j) + " = vertex " + std::to_string(path[i]);
        break;
      }
    }
  }
  rep.distinct_vertices = {"distinct_vertices", distinct_ok, distinct_detail};
  return rep;
}

/// As evaluate_geodesic_observations, but a configuration that does not meet
/// the setting is an error (ValidationError naming the failed precondition).
inline ObservationReport validate_geodesic_observations(const Graph& g, Vertex v0, const GeodesicConfiguration& cfg) {
  ObservationReport rep = evaluate_geodesic_observations(g, v0, cfg);
  for (const ProofCheck& c : rep.preconditions)
    if (!c.holds)
      throw ValidationError("configuration precondition '" + c.name + "' fails" + (c.detail.empty() ? "" : ": " + c.detail));
  return rep;
}

/// Configurations used for the triangle-free witness patterns: v_0 is the
/// center with the fewest vertices at distance r (lowest index on ties);
/// for every vertex v_r at distance r, v_0..v_r is the shortest_path
/// geodesic, and v' ranges over every vertex with d(v_3, v') >= r+1 when v_3
/// is not a center, or with d(v_3, v') = r and d(v_0, v') < r when it is.
/// m is 3 throughout. Needs radius >= 4.
inline std::vector<GeodesicConfiguration> easycase_configurations(const Graph& g) {
  const MetricSummary ms = metric_summary(g);
  if (!ms.connected || *ms.radius < 4) throw InputError("configurations need a connected graph of radius >= 4");
  const std::uint32_t r = *ms.radius;
  Vertex v0 = ms.centers.front();
  std::size_t fewest = std::numeric_limits<std::size_t>::max();
  for (Vertex c : ms.centers) {
    const DistanceVector d = bfs(g, c);
    std::size_t count = 0;
    for (Vertex w = 0; w < g.order(); ++w) count += d[w] == r ? 1 : 0;
    if (count < fewest) {
      fewest = count;
      v0 = c;
    }
  }
  const DistanceVector from0 = bfs(g, v0);
  std::vector<GeodesicConfiguration> out;
  for (Vertex target = 0; target < g.order(); ++target) {
    if (from0[target] != r) continue;
    std::vector<Vertex> path = shortest_path(g, v0, target);
    const DistanceVector from3 = bfs(g, path[3]);
    const bool v3_center = ms.eccentricity[path[3]] == r;
    for (Vertex w = 0; w < g.order(); ++w) {
      const bool ok = v3_center ? (from3[w] == r && from0[w] < r) : from3[w] >= r + 1;
      if (!ok) continue;
      out.push_back({path, 3, shortest_path(g, v0, w)});
    }
  }
  return out;
}

/// Configurations for the even-girth witness pattern: lowest-index center,
/// every v_r at distance r, m = 2k and every v' with d(v_{2k}, v') >= r.
/// Needs radius >= 2k.
inline std::vector<GeodesicConfiguration> upper_bound_configurations(const Graph& g, std::uint32_t k) {
  const MetricSummary ms = metric_summary(g);
  if (!ms.connected || *ms.radius < 2 * k) throw InputError("configurations need a connected graph of radius >= 2k");
  const std::uint32_t r = *ms.radius;
  const Vertex v0 = ms.centers.front();
  const DistanceVector from0 = bfs(g, v0);
  std::vector<GeodesicConfiguration> out;
  for (Vertex target = 0; target < g.order(); ++target) {
    if (from0[target] != r) continue;
    std::vector<Vertex> path = shortest_path(g, v0, target);
    const DistanceVector from_m = bfs(g, path[2 * k]);
    for (Vertex w = 0; w < g.order(); ++w)
      if (from_m[w] >= r) out.push_back({path, 2 * k, shortest_path(g, v0, w)});
  }
  return out;
}

}  // namespace radgirth
