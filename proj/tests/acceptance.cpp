// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "radgirth/bounds.hpp"
#include "radgirth/constructions.hpp"
#include "radgirth/families.hpp"
#include "radgirth/geometry.hpp"
#include "radgirth/graph_io.hpp"
#include "radgirth/observations.hpp"
#include "radgirth/search.hpp"
#include "radgirth/witness.hpp"

using namespace radgirth;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Records the first failure; later ones only bump the count.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (ok) return;
    if (failures_++ == 0) first_ = what;
  }
  std::size_t checked() const { return checked_; }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, summary + "; " + std::to_string(failures_) + " failures, first: " + first_};
  }

 private:
  std::size_t checked_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

std::vector<Graph>& constructed() {
  static std::vector<Graph> all;
  return all;
}

Outcome criterion_small_enumeration() {
  const auto start = std::chrono::steady_clock::now();
  SearchOptions options;
  options.jobs = std::max(1u, std::thread::hardware_concurrency());
  const ComparisonTable t = verify_theorem_main_small(8, {2, 3}, options);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Tally tally;
  std::size_t nonexistent = 0;
  for (const ComparisonRow& row : t.rows) {
    std::ostringstream what;
    what << "n=" << row.n << " delta=" << row.delta;
    tally.expect(row.equal && row.enumerated == row.formula.optional(), what.str());
    if (!row.enumerated) ++nonexistent;
    if (row.witness) constructed().push_back(*row.witness);
  }
  tally.expect(t.rows.size() == 16, "expected 16 rows");
  SearchOptions long_run = options;
  long_run.long_run = true;
  long_run.count_classes = false;
  const SearchResult nine = enumerate_extremal(9, 2, 4, long_run);
  const bool nine_equal = nine.max_radius == exact_radius_formula_g4(9, 2).optional();
  tally.expect(nine_equal, "long run n=9 delta=2");
  if (nine.extremal_witness) constructed().push_back(*nine.extremal_witness);
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream s;
  s << t.rows.size() << " rows EQUAL (" << nonexistent << " nonexistent) in " << static_cast<int>(secs)
    << "s; long run n=9 delta=2 radius " << nine.max_radius.value_or(0) << (nine_equal ? " EQUAL, " : " MISMATCH, ") << static_cast<int>(total) << "s total";
  return tally.outcome(s.str());
}

Outcome criterion_box() {
  Tally tally;
  std::size_t cycles = 0;
  std::size_t boxes = 0;
  for (std::uint32_t r = 4; r <= 20; ++r)
    for (std::uint32_t delta = 2; delta <= 8; ++delta)
      for (std::uint32_t c : {0u, 1u, delta}) {
        const Graph g = box_graph(r, delta, c);
        const MetricSummary ms = metric_summary(g);
        const std::size_t n = 2 * ((r * delta + 1) / 2) + c;
        std::ostringstream what;
        what << "box(" << r << "," << delta << "," << c << ")";
        // Singleton boxes throughout (delta = 2, c = 0) give the cycle C_2r.
        const bool cycle = delta == 2 && c == 0;
        if (cycle) ++cycles;
        ++boxes;
        const Girth want = cycle ? Girth(2 * r) : Girth(4);
        tally.expect(ms.order == n && ms.min_degree == delta && ms.girth == want && ms.radius == r, what.str());
        if (cycle) tally.expect(g == cycle_graph(2 * r), what.str() + " is C_2r");
        constructed().push_back(g);
      }
  return tally.outcome(std::to_string(boxes) + " box graphs exact: order, min degree, radius; girth 4 (girth 2r for the " +
                       std::to_string(cycles) + " all-singleton cases, which are C_2r)");
}

Outcome criterion_cages() {
  Tally tally;
  const MetricSummary h = metric_summary(projective_plane_incidence_graph(2));
  tally.expect(h.order == 14 && h.min_degree == 3 && h.max_degree == 3 && h.girth == Girth(6) && h.radius == 3u,
               "PG(2,2)");
  tally.expect(h.order == static_cast<std::size_t>(2 * (3 * 3 - 3 + 1)), "PG(2,2) order formula");
  const MetricSummary p3 = metric_summary(projective_plane_incidence_graph(3));
  tally.expect(p3.order == 26 && p3.min_degree == 4 && p3.max_degree == 4 && p3.girth == Girth(6), "PG(2,3)");
  tally.expect(p3.order == static_cast<std::size_t>(2 * (4 * 4 - 4 + 1)), "PG(2,3) order formula");
  const MetricSummary w = metric_summary(symplectic_quadrangle_incidence_graph(2));
  tally.expect(w.order == 30 && w.min_degree == 3 && w.max_degree == 3 && w.girth == Girth(8), "W(2)");
  tally.expect(w.order == static_cast<std::size_t>(2 * (27 - 18 + 6)), "W(2) order formula");
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) constructed().push_back(projective_plane_incidence_graph(q));
  for (std::uint32_t q : {2u, 3u}) constructed().push_back(symplectic_quadrangle_incidence_graph(q));
  return tally.outcome("PG(2,2)=14/3-reg/g6/r3, PG(2,3)=26/4-reg/g6, W(2)=30/3-reg/g8");
}

Outcome criterion_gluing() {
  Tally tally;
  std::uint32_t heawood_slack = UINT32_MAX;
  for (std::uint32_t m = 2; m <= 20; ++m) {
    const Graph g = glue_cycle(heawood_graph(), m);
    const MetricSummary ms = metric_summary(g);
    const auto n = static_cast<std::int64_t>(ms.order);
    const Rational lower = cage_lower_bound(n, 3, 6);
    tally.expect(lower == Rational(3 * n, 14) - 3, "Heawood bound formula m=" + std::to_string(m));
    tally.expect(ms.order == 14u * m && ms.girth.at_least(6) && ms.min_degree == 3 && Rational(*ms.radius) >= lower,
                 "Heawood m=" + std::to_string(m));
    heawood_slack = std::min<std::uint32_t>(heawood_slack, static_cast<std::uint32_t>((Rational(*ms.radius) - lower).floor()));
    constructed().push_back(g);
  }
  for (std::uint32_t m = 2; m <= 10; ++m) {
    const Graph g = glue_cycle(tutte_coxeter_graph(), m);
    const MetricSummary ms = metric_summary(g);
    const auto n = static_cast<std::int64_t>(ms.order);
    const Rational lower = cage_lower_bound(n, 3, 8);
    tally.expect(ms.order == 30u * m && ms.girth.at_least(8) && ms.min_degree == 3, "Tutte-Coxeter m=" + std::to_string(m));
    tally.expect(Rational(*ms.radius) >= lower, "Tutte-Coxeter cage bound m=" + std::to_string(m));
    tally.expect(Rational(*ms.radius) >= Rational(2 * n, 30) - 4, "Tutte-Coxeter 2n/30-4 m=" + std::to_string(m));
    constructed().push_back(g);
  }
  return tally.outcome("19 Heawood and 9 Tutte-Coxeter gluings meet the cage bound (min Heawood slack " +
                       std::to_string(heawood_slack) + ")");
}

Outcome criterion_upper_bound() {
  Tally tally;
  std::vector<Graph> extra;
  for (std::uint32_t delta = 2; delta <= 7; ++delta)
    for (std::uint32_t n = 2 * delta; n < 4 * delta; ++n)
      extra.push_back(n <= 2 * delta + 1 ? bipartite_radius2(n, delta) : radius3_graph(n, delta));
  for (std::uint32_t n = 3; n <= 40; ++n) extra.push_back(cycle_graph(n));
  for (const Graph& base : {cycle_graph(6), petersen_graph(), hypercube_graph(3), box_graph(5, 3, 1)})
    for (std::uint32_t m = 2; m <= 6; ++m) extra.push_back(glue_cycle(base, m));
  for (const Graph& g : {heawood_graph(), tutte_coxeter_graph()})
    for (std::uint32_t m : {6u, 10u}) extra.push_back(extract_dense_subgraph(glue_cycle(g, m), 3).subgraph.graph);
  for (std::size_t n = 4; n <= 8; ++n)
    for (std::size_t delta : {1u, 2u, 3u})
      for (std::uint32_t g : {4u, 5u, 6u})
        if (auto w = enumerate_extremal(n, delta, g).extremal_witness) extra.push_back(*w);
  std::size_t evaluated = 0;
  for (const std::vector<Graph>* list : {&constructed(), &extra})
    for (const Graph& g : *list) {
      const auto v = upper_bound_violations(g);
      tally.expect(v.empty(), "violation on graph " + to_graph6(g));
      ++evaluated;
    }
  return tally.outcome(std::to_string(evaluated) + " graphs, zero upper-bound violations");
}

/// First pair (input order) whose distance is forbidden.
std::optional<std::pair<Vertex, Vertex>> first_bad_pair(const std::vector<std::vector<std::uint32_t>>& d,
                                                        const std::vector<Vertex>& set,
                                                        const std::function<bool(std::uint32_t)>& forbidden) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (forbidden(d[set[i]][set[j]])) return std::pair{set[i], set[j]};
  return std::nullopt;
}

std::vector<Vertex> greedy_set(std::mt19937& rng, std::size_t n, const std::vector<std::vector<std::uint32_t>>& d,
                               const std::function<bool(std::uint32_t)>& forbidden) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Vertex> set;
  for (Vertex v : order)
    if (std::none_of(set.begin(), set.end(), [&](Vertex u) { return forbidden(d[u][v]); })) set.push_back(v);
  return set;
}

/// Distance-2 graph on `set` is two disjoint cycles of length r.
bool two_cycles_oracle(const std::vector<std::vector<std::uint32_t>>& d, const std::vector<Vertex>& set, std::uint32_t r) {
  if (set.size() != 2 * r) return false;
  const std::size_t m = set.size();
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t deg = 0;
    for (std::size_t j = 0; j < m; ++j) deg += (i != j && d[set[i]][set[j]] == 2) ? 1 : 0;
    if (deg != 2) return false;
  }
  std::vector<bool> seen(m, false);
  std::vector<std::size_t> sizes;
  for (std::size_t s = 0; s < m; ++s) {
    if (seen[s]) continue;
    std::size_t size = 0;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      ++size;
      for (std::size_t w = 0; w < m; ++w)
        if (!seen[w] && d[set[u]][set[w]] == 2) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    sizes.push_back(size);
  }
  return sizes.size() == 2 && sizes[0] == r && sizes[1] == r;
}

bool holds_all(const BoundReport& r) {
  if (!r.pass || !r.checks_hold()) return false;
  return true;
}

bool has_check(const BoundReport& r, const std::string& name) {
  return std::any_of(r.checks.begin(), r.checks.end(), [&](const ProofCheck& c) { return c.name == name && c.holds; });
}

Outcome criterion_lemmas() {
  std::mt19937 rng(20261014);
  Tally tally;
  std::size_t instances = 0, valid_checks = 0, mutations = 0;
  while (instances < 1000) {
    Graph g;
    std::optional<std::pair<std::vector<Vertex>, std::uint32_t>> cycles_set;
    switch (instances % 4) {
      case 0: {
        const std::uint32_t n = 8 + static_cast<std::uint32_t>(rng() % 53);
        g = cycle_graph(n);
        if (n % 2 == 0) {
          std::vector<Vertex> all(n);
          std::iota(all.begin(), all.end(), 0);
          std::shuffle(all.begin(), all.end(), rng);
          cycles_set = {all, n / 2};
        }
        break;
      }
      case 1: {
        const std::uint32_t r = 4 + static_cast<std::uint32_t>(rng() % 7);
        const std::uint32_t delta = 2 + static_cast<std::uint32_t>(rng() % 4);
        const std::uint32_t choices[3] = {0, 1, delta};
        const BoxSpec spec = box_spec(r, delta, choices[rng() % 3]);
        g = box_graph(spec);
        std::vector<Vertex> reps;
        Vertex first = 0;
        for (std::uint32_t s : spec.box_sizes) {
          reps.push_back(first + static_cast<Vertex>(rng() % s));
          first += s;
        }
        cycles_set = {reps, r};
        break;
      }
      case 2: {
        const std::uint32_t m = 2 + static_cast<std::uint32_t>(rng() % 5);
        g = glue_cycle(rng() % 2 ? heawood_graph() : tutte_coxeter_graph(), m);
        break;
      }
      default:
        g = oracle::random_bipartite(rng, 5 + rng() % 8, 5 + rng() % 8, 0.25 + 0.25 * (rng() % 3) / 2.0);
        break;
    }
    ++instances;
    const auto d = oracle::distances(g);
    const Girth gg = girth(g);
    const std::size_t n = g.order();
    const auto delta = static_cast<std::int64_t>(g.min_degree());
    const std::string tag = "instance " + std::to_string(instances) + " " + to_graph6(g);

    // General 2k witness.
    const std::uint32_t k = gg.is_infinite() ? 3 : std::min<std::uint32_t>(4, gg.value() / 2);
    auto bad_general = [k](std::uint32_t dist) { return dist != 1 && dist < 2 * k - 1; };
    std::vector<Vertex> set = greedy_set(rng, n, d, bad_general);
    {
      const BoundReport r = check_witness_general(g, set, k);
      const auto size = static_cast<std::int64_t>(set.size());
      std::int64_t per = delta;
      for (std::uint32_t i = 2; i < k; ++i) per *= delta - 1;
      tally.expect(holds_all(r) && has_check(r, "spheres_disjoint") && has_check(r, "sphere_size"), tag + " general");
      tally.expect(r.claimed == Rational(size * per + size % 2), tag + " general claimed");
      ++valid_checks;
    }
    // Mutation: insert a vertex at a forbidden distance from some member.
    std::vector<Vertex> outsiders;
    for (Vertex w = 0; w < n; ++w)
      if (std::find(set.begin(), set.end(), w) == set.end() &&
          std::any_of(set.begin(), set.end(), [&](Vertex u) { return bad_general(d[u][w]); }))
        outsiders.push_back(w);
    if (!outsiders.empty()) {
      std::vector<Vertex> mutated = set;
      mutated.insert(mutated.begin() + static_cast<std::ptrdiff_t>(rng() % (mutated.size() + 1)),
                     outsiders[rng() % outsiders.size()]);
      const auto expected = first_bad_pair(d, mutated, bad_general);
      try {
        check_witness_general(g, mutated, k);
        tally.expect(false, tag + " general mutation accepted");
      } catch (const WitnessError& e) {
        tally.expect(e.pair() == expected, tag + " general mutation pair");
      }
      ++mutations;
    }

    // Triangle-free witness.
    auto bad_tf = [](std::uint32_t dist) { return dist == 2; };
    set = greedy_set(rng, n, d, bad_tf);
    {
      const BoundReport r = check_witness_triangle_free(g, set);
      const std::int64_t want = 2 * ((delta * static_cast<std::int64_t>(set.size()) + 1) / 2);
      tally.expect(holds_all(r) && has_check(r, "spheres_disjoint") && has_check(r, "sphere_size"), tag + " tf");
      tally.expect(r.claimed == Rational(want), tag + " tf claimed");
      ++valid_checks;
    }
    outsiders.clear();
    for (Vertex w = 0; w < n; ++w)
      if (std::find(set.begin(), set.end(), w) == set.end() &&
          std::any_of(set.begin(), set.end(), [&](Vertex u) { return d[u][w] == 2; }))
        outsiders.push_back(w);
    if (!outsiders.empty()) {
      std::vector<Vertex> mutated = set;
      mutated.insert(mutated.begin() + static_cast<std::ptrdiff_t>(rng() % (mutated.size() + 1)),
                     outsiders[rng() % outsiders.size()]);
      const auto expected = first_bad_pair(d, mutated, bad_tf);
      try {
        check_witness_triangle_free(g, mutated);
        tally.expect(false, tag + " tf mutation accepted");
      } catch (const WitnessError& e) {
        tally.expect(e.pair() == expected, tag + " tf mutation pair");
      }
      ++mutations;
    }

    // Two r-cycles witness and a one-vertex replacement judged by the oracle.
    if (cycles_set) {
      const auto& [u, r] = *cycles_set;
      tally.expect(two_cycles_oracle(d, u, r), tag + " two-cycles oracle");
      const BoundReport rep = check_witness_two_cycles(g, u, r);
      tally.expect(holds_all(rep) && rep.claimed == Rational(2 * ((r * delta + 1) / 2)), tag + " two-cycles");
      ++valid_checks;
      std::vector<Vertex> mutated = u;
      std::vector<Vertex> rest;
      for (Vertex w = 0; w < n; ++w)
        if (std::find(u.begin(), u.end(), w) == u.end()) rest.push_back(w);
      if (!rest.empty()) {
        mutated[rng() % mutated.size()] = rest[rng() % rest.size()];
        const bool want = two_cycles_oracle(d, mutated, r);
        bool got = true;
        try {
          got = holds_all(check_witness_two_cycles(g, mutated, r));
        } catch (const WitnessError&) {
          got = false;
        }
        tally.expect(got == want, tag + " two-cycles mutation verdict");
      } else {
        mutated.pop_back();
        bool rejected = false;
        try {
          check_witness_two_cycles(g, mutated, r);
        } catch (const WitnessError&) {
          rejected = true;
        }
        tally.expect(rejected, tag + " two-cycles short set");
      }
      ++mutations;
    }
  }
  return tally.outcome(std::to_string(instances) + " instances, " + std::to_string(valid_checks) + " valid sets accepted, " +
                       std::to_string(mutations) + " mutations judged correctly");
}

Outcome criterion_extraction() {
  Tally tally;
  std::ostringstream s;
  for (std::uint32_t m : {6u, 10u}) {
    const Graph g = glue_cycle(heawood_graph(), m);
    const MetricSummary ms = metric_summary(g);
    const ExtractionResult e = extract_dense_subgraph(g, 3);
    const std::int64_t r = *ms.radius;
    const Rational vertex_cap(7 * static_cast<std::int64_t>(g.order()), r + 1);
    const std::size_t edges = e.subgraph.graph.edge_count();
    const std::size_t verts = e.subgraph.graph.order();
    tally.expect(Rational(static_cast<std::int64_t>(verts)) <= vertex_cap, "vertex cap m=" + std::to_string(m));
    tally.expect(edges >= 18, "18 edges m=" + std::to_string(m));
    tally.expect(Rational(static_cast<std::int64_t>(edges)) >= e.edge_bound && e.edge_bound == Rational(9),
                 "edge bound m=" + std::to_string(m));
    tally.expect(e.meets_vertex_bound && e.meets_edge_bound && e.meets_covering_bound,
                 "reported bounds m=" + std::to_string(m));
    s << (m == 6 ? "" : ", ") << "m=" << m << ": " << verts << " vertices <= " << vertex_cap.str() << ", " << edges
      << " edges";
  }
  return tally.outcome(s.str());
}

/// The three observations recomputed from a dense distance table.
bool observations_oracle(const std::vector<std::vector<std::uint32_t>>& d, const GeodesicConfiguration& cfg) {
  const auto r = static_cast<std::int64_t>(cfg.path.size()) - 1;
  const auto m = static_cast<std::int64_t>(cfg.m);
  const auto t = r - (static_cast<std::int64_t>(cfg.vprime_path.size()) - 1);
  const auto D = static_cast<std::int64_t>(d[cfg.path[cfg.m]][cfg.vprime_path.back()]);
  if (t > m) return false;
  for (std::int64_t i = 0; i <= r; ++i)
    for (std::int64_t j = 0; j <= r - t; ++j) {
      const auto dij = static_cast<std::int64_t>(d[cfg.path[i]][cfg.vprime_path[j]]);
      const std::int64_t lower = i >= m ? D + m + t + j - r - i : D + i + j + t - m - r;
      if (dij < lower || dij < std::abs(i - j)) return false;
      const bool same = cfg.path[i] == cfg.vprime_path[j];
      if (same && i != j) return false;
      if (same && i == j && 2 * i > m + r - t - D) return false;
    }
  return true;
}

Outcome criterion_observations() {
  std::mt19937 rng(777);
  Tally tally;
  const std::vector<Graph> graphs = {box_graph(7, 3, 1), box_graph(9, 2, 0), box_graph(6, 4, 4),
                                     glue_cycle(heawood_graph(), 4), glue_cycle(tutte_coxeter_graph(), 3),
                                     cycle_graph(25), cycle_graph(30)};
  std::size_t sampled = 0;
  for (std::size_t gi = 0; sampled < 100; gi = (gi + 1) % graphs.size()) {
    const Graph& g = graphs[gi];
    const MetricSummary ms = metric_summary(g);
    const auto d = oracle::distances(g);
    const std::uint32_t r = *ms.radius;
    const Vertex v0 = ms.centers[rng() % ms.centers.size()];
    std::vector<Vertex> far;
    for (Vertex w = 0; w < g.order(); ++w)
      if (d[v0][w] == r) far.push_back(w);
    const auto path = shortest_path(g, v0, far[rng() % far.size()]);
    const std::uint32_t m = 1 + static_cast<std::uint32_t>(rng() % (r - 1));
    std::vector<Vertex> candidates;
    for (Vertex w = 0; w < g.order(); ++w)
      if (d[path[m]][w] >= r) candidates.push_back(w);
    if (candidates.empty()) continue;
    const GeodesicConfiguration cfg{path, m, shortest_path(g, v0, candidates[rng() % candidates.size()])};
    ++sampled;
    const ObservationReport rep = validate_geodesic_observations(g, v0, cfg);
    tally.expect(rep.observations_hold() && observations_oracle(d, cfg), "config " + std::to_string(sampled));
  }

  // Broken preconditions.
  std::size_t negatives = 0;
  auto expect_rejected = [&](const Graph& g, Vertex v0, const GeodesicConfiguration& cfg, const std::string& what) {
    ++negatives;
    try {
      validate_geodesic_observations(g, v0, cfg);
      tally.expect(false, what);
    } catch (const ValidationError&) {
    }
  };
  auto ring = [](std::size_t n, std::size_t len, bool cw) {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i <= len; ++i) out.push_back(static_cast<Vertex>(cw ? i % n : (n - i) % n));
    return out;
  };
  const Graph c20 = cycle_graph(20);
  expect_rejected(c20, 0, {ring(20, 10, true), 5, ring(20, 10, false)}, "v' too close to v_m");
  expect_rejected(c20, 0, {ring(20, 10, true), 5, ring(20, 3, false)}, "shift above m");
  expect_rejected(c20, 0, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 8}, 5, ring(20, 5, false)}, "bent geodesic");
  expect_rejected(path_graph(9), 0, {{0, 1, 2, 3, 4}, 2, {0, 1}}, "non-center");
  expect_rejected(c20, 0, {ring(20, 10, true), 10, ring(20, 5, false)}, "m = r");
  const ObservationReport shifted = evaluate_geodesic_observations(c20, 0, {ring(20, 10, true), 5, ring(20, 3, false)});
  tally.expect(!shifted.shift_at_most_m.holds, "shift observation must fail once its precondition is broken");
  return tally.outcome(std::to_string(sampled) + " configurations hold, " + std::to_string(negatives) +
                       " broken settings rejected");
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"small-scale exact formula", criterion_small_enumeration},
      {"box construction exactness", criterion_box},
      {"cage identities", criterion_cages},
      {"cage gluing lower bound", criterion_gluing},
      {"upper bound never violated", criterion_upper_bound},
      {"witness lemma suite", criterion_lemmas},
      {"dense subgraph extraction", criterion_extraction},
      {"geodesic observations", criterion_observations},
  };
  int failed = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %d %s: %s\n", o.pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
