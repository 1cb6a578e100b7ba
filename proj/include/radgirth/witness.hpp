#pragma once

// Witness sets: vertex subsets whose pairwise distance pattern forces a lower
// bound on the order of the graph. The checkers validate the distance
// hypothesis, compute the bound, and re-verify the counting steps that lead
// to it (sphere disjointness, sphere growth, neighbourhood multiplicity).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "radgirth/error.hpp"
#include "radgirth/graph.hpp"
#include "radgirth/rational.hpp"

namespace radgirth {

enum class WitnessKind {
  general_2k,     ///< non-adjacent pairs at distance >= 2k-1
  no_distance_2,  ///< no pair at distance exactly 2
  double_cycle,   ///< distance-2 graph on the set is two disjoint r-cycles
};

inline std::string to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::general_2k: return "general_2k";
    case WitnessKind::no_distance_2: return "no_distance_2";
    case WitnessKind::double_cycle: return "double_cycle";
  }
  return "unknown";
}

/// A vertex set that has passed the distance check named by `kind`.
/// `parameter` is k for general_2k and r for double_cycle (0 otherwise).
struct WitnessSet {
  std::vector<Vertex> vertices;
  WitnessKind kind = WitnessKind::general_2k;
  std::uint32_t parameter = 0;
};

/// One intermediate counting step, re-checked on the concrete graph.
struct ProofCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

enum class BoundDirection {
  lower,  ///< pass when measured >= claimed
  upper,  ///< pass when measured <= claimed
};

struct BoundReport {
  std::string kind;
  BoundDirection direction = BoundDirection::lower;
  Rational claimed;
  std::int64_t measured = 0;
  std::optional<WitnessSet> witness;
  bool pass = false;
  std::vector<ProofCheck> checks;

  bool checks_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const ProofCheck& c) { return c.holds; });
  }
};

inline BoundReport make_report(std::string kind, BoundDirection dir, Rational claimed, std::int64_t measured) {
  BoundReport r;
  r.kind = std::move(kind);
  r.direction = dir;
  r.claimed = claimed;
  r.measured = measured;
  r.pass = dir == BoundDirection::lower ? Rational(measured) >= claimed : Rational(measured) <= claimed;
  return r;
}

/// A witness set violated its distance hypothesis. When the violation is a
/// pair of vertices, `pair` names it in the order the vertices were given.
class WitnessError : public ValidationError {
 public:
  WitnessError(const std::string& what, std::optional<std::pair<Vertex, Vertex>> pair = std::nullopt,
               std::uint32_t pair_distance = 0)
      : ValidationError(what), pair_(pair), distance_(pair_distance) {}

  const std::optional<std::pair<Vertex, Vertex>>& pair() const { return pair_; }
  std::uint32_t pair_distance() const { return distance_; }

 private:
  std::optional<std::pair<Vertex, Vertex>> pair_;
  std::uint32_t distance_;
};

namespace witness_detail {

inline void check_members(const Graph& g, std::span<const Vertex> set) {
  std::vector<Vertex> sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  for (Vertex v : sorted) check_vertex(g, v);
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) throw InputError("witness set lists vertex " + std::to_string(*dup) + " twice");
}

inline std::string distance_text(std::uint32_t d) {
  return d == DistanceVector::kUnreachable ? std::string("unreachable") : std::to_string(d);
}

/// Spheres of radius `level` around every set member must be pairwise
/// disjoint and each hold at least `min_size` vertices.
inline void add_sphere_checks(BoundReport& report, const Graph& g, const std::vector<DistanceVector>& dists,
                              std::uint32_t level, std::int64_t min_size) {
  std::vector<std::int64_t> owner(g.order(), -1);
  bool disjoint = true;
  bool sized = true;
  std::string disjoint_detail;
  std::string size_detail;
  for (std::size_t i = 0; i < dists.size(); ++i) {
    std::int64_t size = 0;
    for (Vertex w = 0; w < g.order(); ++w) {
      if (dists[i][w] != level) continue;
      ++size;
      if (owner[w] >= 0 && disjoint) {
        disjoint = false;
        disjoint_detail = "vertex " + std::to_string(w) + " lies on the spheres of " +
                          std::to_string(dists[static_cast<std::size_t>(owner[w])].source()) + " and " +
                          std::to_string(dists[i].source());
      }
      owner[w] = static_cast<std::int64_t>(i);
    }
    if (size < min_size && sized) {
      sized = false;
      size_detail = "sphere of " + std::to_string(dists[i].source()) + " has " + std::to_string(size) + " < " +
                    std::to_string(min_size) + " vertices";
    }
  }
  report.checks.push_back({"spheres_disjoint", disjoint, disjoint_detail});
  report.checks.push_back({"sphere_size", sized, size_detail});
}

/// Each member is adjacent to at most one other member (the parity step).
inline void add_partner_check(BoundReport& report, const Graph& g, std::span<const Vertex> set) {
  for (Vertex a : set) {
    std::size_t partners = 0;
    for (Vertex b : set) partners += g.adjacent(a, b) ? 1 : 0;
    if (partners > 1) {
      report.checks.push_back({"adjacent_partner_at_most_one", false,
                               "vertex " + std::to_string(a) + " has " + std::to_string(partners) + " neighbours in the set"});
      return;
    }
  }
  report.checks.push_back({"adjacent_partner_at_most_one", true, ""});
}

inline std::vector<DistanceVector> distances_from(const Graph& g, std::span<const Vertex> set) {
  std::vector<DistanceVector> out;
  out.reserve(set.size());
  for (Vertex v : set) out.push_back(bfs(g, v));
  return out;
}

}  // namespace witness_detail

/// n >= |T| delta (delta-1)^(k-2), plus one when |T| is odd, for a set T whose
/// non-adjacent pairs are at distance >= 2k-1 in a graph of girth >= 2k.
/// Throws WitnessError naming the first offending pair (in input order).
inline BoundReport check_witness_general(const Graph& g, std::span<const Vertex> set, std::uint32_t k) {
  using namespace witness_detail;
  if (k < 2) throw InputError("half-girth k must be at least 2");
  check_members(g, set);
  const Girth gg = girth(g);
  if (!gg.at_least(2 * k))
    throw InputError("girth " + gg.str() + " is below 2k = " + std::to_string(2 * k));
  const auto dists = distances_from(g, set);
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const std::uint32_t d = dists[i][set[j]];
      if (d != 1 && d < 2 * k - 1) {
        throw WitnessError("vertices " + std::to_string(set[i]) + " and " + std::to_string(set[j]) + " are at distance " +
                               distance_text(d) + " (non-adjacent pairs need >= " + std::to_string(2 * k - 1) + ")",
                           std::pair{set[i], set[j]}, d);
      }
    }
  }
  const auto delta = static_cast<std::int64_t>(g.min_degree());
  const std::int64_t per_vertex =
      detail::checked_mul(delta, delta >= 1 ? detail::checked_pow(delta - 1, static_cast<int>(k) - 2) : 0);
  const auto size = static_cast<std::int64_t>(set.size());
  const std::int64_t bound = detail::checked_mul(size, per_vertex) + (size % 2);
  BoundReport report = make_report("witness_general", BoundDirection::lower, bound, static_cast<std::int64_t>(g.order()));
  report.witness = WitnessSet{{set.begin(), set.end()}, WitnessKind::general_2k, k};
  add_sphere_checks(report, g, dists, k - 1, per_vertex);
  add_partner_check(report, g, set);
  return report;
}

/// n >= 2 ceil(delta |T| / 2) for a set T with no pair at distance exactly 2
/// in a triangle-free graph.
inline BoundReport check_witness_triangle_free(const Graph& g, std::span<const Vertex> set) {
  using namespace witness_detail;
  check_members(g, set);
  if (!girth(g).at_least(4)) throw InputError("graph contains a triangle");
  const auto dists = distances_from(g, set);
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (dists[i][set[j]] == 2) {
        throw WitnessError("vertices " + std::to_string(set[i]) + " and " + std::to_string(set[j]) + " are at distance 2",
                           std::pair{set[i], set[j]}, 2);
      }
    }
  }
  const auto delta = static_cast<std::int64_t>(g.min_degree());
  const std::int64_t bound = 2 * Rational(delta * static_cast<std::int64_t>(set.size()), 2).ceil();
  BoundReport report =
      make_report("witness_triangle_free", BoundDirection::lower, bound, static_cast<std::int64_t>(g.order()));
  report.witness = WitnessSet{{set.begin(), set.end()}, WitnessKind::no_distance_2, 0};
  add_sphere_checks(report, g, dists, 1, delta);
  add_partner_check(report, g, set);
  return report;
}

/// n >= 2 ceil(r delta / 2) for a 2r-set U in a triangle-free graph whose
/// distance-exactly-2 graph is two disjoint r-cycles.
inline BoundReport check_witness_two_cycles(const Graph& g, std::span<const Vertex> set, std::uint32_t r) {
  using namespace witness_detail;
  if (r < 4) throw InputError("cycle length r must be at least 4");
  if (set.size() != 2 * static_cast<std::size_t>(r))
    throw WitnessError("set has " + std::to_string(set.size()) + " vertices, expected 2r = " + std::to_string(2 * r));
  check_members(g, set);
  if (!girth(g).at_least(4)) throw InputError("graph contains a triangle");

  const auto dists = distances_from(g, set);
  const std::size_t m = set.size();
  std::vector<std::vector<std::size_t>> aux(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && dists[i][set[j]] == 2) aux[i].push_back(j);

  std::vector<int> comp(m, -1);
  std::vector<std::size_t> comp_sizes;
  for (std::size_t s = 0; s < m; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(comp_sizes.size());
    comp_sizes.push_back(0);
    std::vector<std::size_t> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      ++comp_sizes.back();
      for (std::size_t w : aux[u]) {
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  std::string bad_degrees;
  for (std::size_t i = 0; i < m; ++i)
    if (aux[i].size() != 2) bad_degrees += " " + std::to_string(set[i]) + ":" + std::to_string(aux[i].size());
  const bool shape_ok = bad_degrees.empty() && comp_sizes.size() == 2 && comp_sizes[0] == r && comp_sizes[1] == r;
  if (!shape_ok) {
    std::string sizes;
    for (std::size_t s : comp_sizes) sizes += (sizes.empty() ? "" : ",") + std::to_string(s);
    throw WitnessError("distance-2 graph on the set is not two disjoint " + std::to_string(r) + "-cycles: components [" +
                       sizes + "]" + (bad_degrees.empty() ? "" : ", vertices of degree != 2 (vertex:degree):" + bad_degrees));
  }

  const auto delta = static_cast<std::int64_t>(g.min_degree());
  const std::int64_t half = Rational(static_cast<std::int64_t>(r) * delta, 2).ceil();
  BoundReport report =
      make_report("witness_two_cycles", BoundDirection::lower, 2 * half, static_cast<std::int64_t>(g.order()));
  report.witness = WitnessSet{{set.begin(), set.end()}, WitnessKind::double_cycle, r};

  // Counting steps: no vertex is a common neighbour of three members of one
  // cycle, the two cycles have disjoint neighbourhood unions, and each union
  // has at least ceil(r delta / 2) vertices.
  std::vector<std::uint32_t> hits(g.order(), 0);
  std::vector<int> side(g.order(), -1);
  bool multiplicity_ok = true;
  bool sides_disjoint = true;
  for (std::size_t i = 0; i < m; ++i) {
    for (Vertex w : g.neighbors(set[i])) {
      if (++hits[w] > 2) multiplicity_ok = false;
      if (side[w] >= 0 && side[w] != comp[i]) sides_disjoint = false;
      side[w] = comp[i];
    }
  }
  std::int64_t union_sizes[2] = {0, 0};
  for (Vertex w = 0; w < g.order(); ++w)
    if (side[w] >= 0) ++union_sizes[side[w]];
  report.checks.push_back({"neighbourhood_multiplicity_at_most_two", multiplicity_ok, ""});
  report.checks.push_back({"cycle_neighbourhoods_disjoint", sides_disjoint, ""});
  report.checks.push_back({"neighbourhood_union_size", union_sizes[0] >= half && union_sizes[1] >= half,
                           std::to_string(union_sizes[0]) + "," + std::to_string(union_sizes[1]) +
                               " (need >= " + std::to_string(half) + " each)"});
  return report;
}

namespace witness_detail {

/// Dynamic bitset rows for the branch-and-bound over the compatibility graph.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}
  void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
  std::span<const std::uint64_t> row(std::size_t i) const { return {bits_.data() + i * words_, words_}; }
  std::size_t words() const { return words_; }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

using Bits = std::vector<std::uint64_t>;

inline bool any(const Bits& b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

/// Maximum clique in the compatibility graph (Tomita-style greedy colouring
/// bound), stopping after `budget` search nodes.
class CliqueSearch {
 public:
  CliqueSearch(const BitMatrix& compat, std::vector<Vertex> best, std::uint64_t budget)
      : compat_(compat), best_(std::move(best)), budget_(budget) {}

  void run() {
    Bits all(compat_.words(), 0);
    for (std::size_t v = 0; v < compat_.size(); ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    std::vector<Vertex> current;
    expand(current, all);
  }

  const std::vector<Vertex>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }
  bool exhausted() const { return nodes_ >= budget_; }

 private:
  void colour(const Bits& cand, std::vector<Vertex>& order, std::vector<std::size_t>& bound) const {
    Bits uncoloured = cand;
    std::size_t colour_id = 0;
    while (any(uncoloured)) {
      ++colour_id;
      Bits available = uncoloured;
      while (any(available)) {
        std::size_t w = 0;
        while (available[w] == 0) ++w;
        const auto v = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(available[w])));
        available[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        uncoloured[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        auto adj = compat_.row(v);
        for (std::size_t i = 0; i < available.size(); ++i) available[i] &= ~adj[i];
        order.push_back(v);
        bound.push_back(colour_id);
      }
    }
  }

  void expand(std::vector<Vertex>& current, Bits cand) {
    if (nodes_++ >= budget_) return;
    std::vector<Vertex> order;
    std::vector<std::size_t> bound;
    colour(cand, order, bound);
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (current.size() + bound[idx] <= best_.size() || nodes_ >= budget_) return;
      const Vertex v = order[idx];
      current.push_back(v);
      Bits next(cand.size());
      auto adj = compat_.row(v);
      for (std::size_t i = 0; i < cand.size(); ++i) next[i] = cand[i] & adj[i];
      if (!any(next)) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, std::move(next));
      }
      current.pop_back();
      cand[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }

  const BitMatrix& compat_;
  std::vector<Vertex> best_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

}  // namespace witness_detail

struct WitnessSearchStats {
  std::size_t greedy_size = 0;
  std::uint64_t nodes = 0;
  bool proven_optimal = false;
};

/// Largest-found set whose non-adjacent pairs are at distance >= 2k-1.
/// Greedy seeding in BFS order from the lowest-index vertex, then
/// branch-and-bound on the compatibility graph within `budget` nodes
/// (budget 0 keeps the greedy set). The result is sorted and always passes
/// check_witness_general.
inline WitnessSet find_witness(const Graph& g, std::uint32_t k, std::uint64_t budget = 1'000'000,
                               WitnessSearchStats* stats = nullptr) {
  if (k < 2) throw InputError("half-girth k must be at least 2");
  const Girth gg = girth(g);
  if (!gg.at_least(2 * k)) throw InputError("girth " + gg.str() + " is below 2k = " + std::to_string(2 * k));
  const std::size_t n = g.order();
  if (n == 0) return {{}, WitnessKind::general_2k, k};

  // conflict(v) = vertices at distance 2..2k-2 from v; bounded BFS.
  std::vector<std::vector<Vertex>> conflicts(n);
  {
    std::vector<std::uint32_t> dist(n, DistanceVector::kUnreachable);
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
      queue.assign(1, s);
      dist[s] = 0;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex u = queue[head];
        if (dist[u] + 1 > 2 * k - 2) continue;
        for (Vertex w : g.neighbors(u)) {
          if (dist[w] == DistanceVector::kUnreachable) {
            dist[w] = dist[u] + 1;
            queue.push_back(w);
          }
        }
      }
      for (Vertex w : queue) {
        if (dist[w] >= 2) conflicts[s].push_back(w);
        dist[w] = DistanceVector::kUnreachable;
      }
    }
  }

  // Greedy pass in BFS order (component by component).
  std::vector<Vertex> order;
  {
    std::vector<bool> seen(n, false);
    for (Vertex s = 0; s < n; ++s) {
      if (seen[s]) continue;
      const DistanceVector d = bfs(g, s);
      std::vector<Vertex> comp;
      for (Vertex v = 0; v < n; ++v)
        if (d.reachable(v)) comp.push_back(v);
      std::stable_sort(comp.begin(), comp.end(), [&](Vertex a, Vertex b) { return d[a] < d[b]; });
      for (Vertex v : comp) {
        seen[v] = true;
        order.push_back(v);
      }
    }
  }
  std::vector<bool> blocked(n, false);
  std::vector<Vertex> greedy;
  for (Vertex v : order) {
    if (blocked[v]) continue;
    greedy.push_back(v);
    blocked[v] = true;
    for (Vertex w : conflicts[v]) blocked[w] = true;
  }

  std::vector<Vertex> best = greedy;
  WitnessSearchStats local;
  local.greedy_size = greedy.size();
  if (budget > 0 && n <= Graph::kBitRowLimit) {
    witness_detail::BitMatrix compat(n);
    std::vector<bool> conflict_row(n, false);
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w : conflicts[v]) conflict_row[w] = true;
      for (Vertex w = 0; w < n; ++w)
        if (w != v && !conflict_row[w]) compat.set(v, w);
      for (Vertex w : conflicts[v]) conflict_row[w] = false;
    }
    witness_detail::CliqueSearch search(compat, best, budget);
    search.run();
    best = search.best();
    local.nodes = search.nodes();
    local.proven_optimal = !search.exhausted();
  }
  std::sort(best.begin(), best.end());
  if (stats) *stats = local;
  WitnessSet out{best, WitnessKind::general_2k, k};
  check_witness_general(g, out.vertices, k);
  return out;
}

}  // namespace radgirth
