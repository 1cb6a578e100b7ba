#pragma once

// Exhaustive determination of the maximum radius r(n, delta, g) over
// connected graphs on n labelled vertices with minimum degree >= delta and
// girth >= g, plus bulk checking of externally generated graph6 streams.

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "radgirth/bounds.hpp"
#include "radgirth/error.hpp"
#include "radgirth/graph.hpp"
#include "radgirth/graph_io.hpp"

namespace radgirth {

/// Adjacency of a graph on at most kMaxVertices vertices, one word per row.
struct SmallGraph {
  static constexpr std::size_t kMaxVertices = 11;  // C(11,2) = 55 code bits

  std::size_t n = 0;
  std::array<std::uint32_t, kMaxVertices> rows{};

  static SmallGraph from(const Graph& g) {
    if (g.order() > kMaxVertices) throw InputError("small graph limit exceeded");
    SmallGraph s;
    s.n = g.order();
    for (const Edge& e : g.edges()) {
      s.rows[e.u] |= 1U << e.v;
      s.rows[e.v] |= 1U << e.u;
    }
    return s;
  }

  Graph to_graph() const {
    std::vector<Edge> edges;
    for (Vertex j = 1; j < n; ++j)
      for (Vertex i = 0; i < j; ++i)
        if (rows[i] >> j & 1U) edges.push_back({i, j});
    return {n, edges};
  }

  /// Upper triangle in graph6 bit order, first pair in the most significant
  /// used bit; numeric order matches graph6 string order for equal n.
  std::uint64_t code() const {
    std::uint64_t c = 0;
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t i = 0; i < j; ++i) c = (c << 1) | (rows[i] >> j & 1U);
    return c;
  }

  std::uint32_t all() const { return n == 32 ? ~0U : (1U << n) - 1; }

  bool connected() const {
    if (n == 0) return false;
    std::uint32_t seen = 1;
    std::uint32_t frontier = 1;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= rows[static_cast<std::size_t>(std::countr_zero(f))];
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == all();
  }

  std::uint32_t eccentricity(std::size_t v) const {
    std::uint32_t seen = 1U << v;
    std::uint32_t frontier = seen;
    std::uint32_t level = 0;
    while (seen != all()) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= rows[static_cast<std::size_t>(std::countr_zero(f))];
      frontier = next & ~seen;
      if (!frontier) return DistanceVector::kUnreachable;
      seen |= frontier;
      ++level;
    }
    return level;
  }

  /// Radius of a connected graph.
  std::uint32_t radius() const {
    std::uint32_t best = DistanceVector::kUnreachable;
    for (std::size_t v = 0; v < n; ++v) best = std::min(best, eccentricity(v));
    return best;
  }
};

namespace search_detail {

/// Canonical form by individualization-refinement: the minimum code over all
/// discrete partitions reachable from the equitable refinement of the unit
/// partition. Cells are ordered by isomorphism-invariant signatures, so the
/// minimum is an isomorphism invariant.
class Canonicalizer {
 public:
  explicit Canonicalizer(const SmallGraph& g) : g_(g) {}

  std::uint64_t run() {
    std::vector<std::uint32_t> cells{g_.all()};
    search(cells);
    return best_;
  }

 private:
  static constexpr std::size_t kMaxCells = SmallGraph::kMaxVertices;

  void refine(std::vector<std::uint32_t>& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<std::uint32_t> next;
      next.reserve(g_.n);
      for (std::uint32_t cell : cells) {
        if (std::popcount(cell) == 1) {
          next.push_back(cell);
          continue;
        }
        // Signature: neighbour counts into each current cell.
        std::vector<std::pair<std::array<std::uint8_t, kMaxCells>, std::uint32_t>> sig;
        for (std::uint32_t c = cell; c; c &= c - 1) {
          const auto v = static_cast<std::size_t>(std::countr_zero(c));
          std::array<std::uint8_t, kMaxCells> s{};
          for (std::size_t i = 0; i < cells.size(); ++i)
            s[i] = static_cast<std::uint8_t>(std::popcount(g_.rows[v] & cells[i]));
          sig.push_back({s, 1U << v});
        }
        std::sort(sig.begin(), sig.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        std::uint32_t current = sig[0].second;
        for (std::size_t i = 1; i < sig.size(); ++i) {
          if (sig[i].first == sig[i - 1].first) {
            current |= sig[i].second;
          } else {
            next.push_back(current);
            current = sig[i].second;
            changed = true;
          }
        }
        next.push_back(current);
      }
      cells = std::move(next);
    }
  }

  void search(std::vector<std::uint32_t> cells) {
    refine(cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](std::uint32_t c) { return std::popcount(c) > 1; });
    if (target == cells.end()) {
      SmallGraph relabelled;
      relabelled.n = g_.n;
      std::array<std::size_t, kMaxCells> pos{};
      for (std::size_t i = 0; i < cells.size(); ++i) pos[static_cast<std::size_t>(std::countr_zero(cells[i]))] = i;
      for (std::size_t v = 0; v < g_.n; ++v)
        for (std::uint32_t w = g_.rows[v]; w; w &= w - 1)
          relabelled.rows[pos[v]] |= 1U << pos[static_cast<std::size_t>(std::countr_zero(w))];
      best_ = std::min(best_, relabelled.code());
      return;
    }
    const std::size_t at = static_cast<std::size_t>(target - cells.begin());
    for (std::uint32_t c = cells[at]; c; c &= c - 1) {
      const std::uint32_t v = c & (~c + 1);
      std::vector<std::uint32_t> split;
      split.reserve(cells.size() + 1);
      split.insert(split.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(at));
      split.push_back(v);
      split.push_back(cells[at] & ~v);
      split.insert(split.end(), cells.begin() + static_cast<std::ptrdiff_t>(at) + 1, cells.end());
      search(std::move(split));
    }
  }

  const SmallGraph& g_;
  std::uint64_t best_ = ~std::uint64_t{0};
};

}  // namespace search_detail

/// Isomorphism-invariant code of a graph on at most SmallGraph::kMaxVertices vertices.
inline std::uint64_t canonical_code(const SmallGraph& g) { return search_detail::Canonicalizer(g).run(); }
inline std::uint64_t canonical_code(const Graph& g) { return canonical_code(SmallGraph::from(g)); }

struct SearchOptions {
  static constexpr std::size_t kDefaultCap = 8;
  static constexpr std::size_t kLongRunCap = 9;

  unsigned jobs = 1;
  bool long_run = false;       ///< allow n = kLongRunCap
  bool count_classes = true;   ///< collect isomorphism classes of qualifying graphs
  std::function<void(std::size_t done, std::size_t total)> progress;  ///< called per finished task
};

struct SearchResult {
  std::size_t n = 0;
  std::size_t delta = 0;
  std::uint32_t g = 0;
  std::optional<std::uint32_t> max_radius;  ///< empty: no qualifying graph
  std::optional<Graph> extremal_witness;    ///< smallest graph6 code among maximizers
  std::uint64_t graphs_considered = 0;      ///< labelled graphs meeting the degree and girth constraints
  std::uint64_t qualifying_labelled = 0;    ///< ... that are also connected
  std::optional<std::size_t> isomorphism_classes;  ///< qualifying graphs up to isomorphism
};

namespace search_detail {

struct Pair {
  std::uint8_t i;
  std::uint8_t j;
};

struct Worker {
  Worker(std::size_t n_, std::size_t delta_, std::uint32_t g_, bool count, const std::vector<Pair>& pairs_,
         const std::vector<std::array<std::uint8_t, SmallGraph::kMaxVertices>>& remaining_)
      : n(n_), delta(delta_), g(g_), count_classes(count), pairs(pairs_), remaining(remaining_) {}

  std::size_t n;
  std::size_t delta;
  std::uint32_t g;
  bool count_classes;
  const std::vector<Pair>& pairs;
  const std::vector<std::array<std::uint8_t, SmallGraph::kMaxVertices>>& remaining;  ///< slots from pair p on

  SmallGraph cur{};
  std::array<std::uint8_t, SmallGraph::kMaxVertices> deg{};
  std::uint64_t considered = 0;
  std::uint64_t qualifying = 0;
  std::optional<std::uint32_t> best_radius;
  std::uint64_t best_code = 0;
  SmallGraph best_graph{};
  std::unordered_set<std::uint64_t> classes;

  /// No path of length <= g-2 joins i and j, so adding ij creates no cycle
  /// shorter than g.
  bool edge_allowed(std::size_t i, std::size_t j) const {
    if (g <= 3) return true;
    std::uint32_t seen = 1U << i;
    std::uint32_t frontier = seen;
    for (std::uint32_t step = 1; step + 2 <= g; ++step) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= cur.rows[static_cast<std::size_t>(std::countr_zero(f))];
      frontier = next & ~seen;
      if (frontier >> j & 1U) return false;
      if (!frontier) return true;
      seen |= frontier;
    }
    return true;
  }

  void leaf() {
    for (std::size_t v = 0; v < n; ++v)
      if (deg[v] < delta) return;
    ++considered;
    if (!cur.connected()) return;
    ++qualifying;
    const std::uint32_t r = cur.radius();
    if (!best_radius || r > *best_radius || (r == *best_radius && cur.code() < best_code)) {
      best_radius = r;
      best_code = cur.code();
      best_graph = cur;
    }
    if (count_classes) classes.insert(canonical_code(cur));
  }

  void add(std::size_t p) {
    const auto [i, j] = pairs[p];
    cur.rows[i] |= 1U << j;
    cur.rows[j] |= 1U << i;
    ++deg[i];
    ++deg[j];
  }

  void remove(std::size_t p) {
    const auto [i, j] = pairs[p];
    cur.rows[i] &= ~(1U << j);
    cur.rows[j] &= ~(1U << i);
    --deg[i];
    --deg[j];
  }

  /// Degree feasibility for pair p's endpoints once p is decided absent.
  bool can_skip(std::size_t p) const {
    const auto [i, j] = pairs[p];
    return deg[i] + remaining[p + 1][i] >= delta && deg[j] + remaining[p + 1][j] >= delta;
  }

  void recurse(std::size_t p) {
    if (p == pairs.size()) {
      leaf();
      return;
    }
    const auto [i, j] = pairs[p];
    if (edge_allowed(i, j)) {
      add(p);
      recurse(p + 1);
      remove(p);
    }
    if (can_skip(p)) recurse(p + 1);
  }

  /// Replays a prefix of decisions; false when the prefix is infeasible.
  bool apply_prefix(std::uint64_t bits, std::size_t depth) {
    for (std::size_t p = 0; p < depth; ++p) {
      if (bits >> p & 1U) {
        if (!edge_allowed(pairs[p].i, pairs[p].j)) return false;
        add(p);
      } else if (!can_skip(p)) {
        return false;
      }
    }
    return true;
  }
};

}  // namespace search_detail

/// Maximum radius over connected graphs on n labelled vertices with minimum
/// degree >= delta and girth >= g, by backtracking over the upper-triangle
/// adjacency bits in graph6 order. An absent pair is pruned when an endpoint
/// can no longer reach degree delta; a present pair is pruned when it would
/// close a cycle shorter than g.
inline SearchResult enumerate_extremal(std::size_t n, std::size_t delta, std::uint32_t g,
                                       const SearchOptions& options = {}) {
  using namespace search_detail;
  const std::size_t cap = options.long_run ? SearchOptions::kLongRunCap : SearchOptions::kDefaultCap;
  if (n == 0) throw InputError("n must be positive");
  if (n > cap) {
    throw InputError("n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cap) +
                     (options.long_run ? "" : " (n = 9 needs the long-run flag)"));
  }
  SearchResult result;
  result.n = n;
  result.delta = delta;
  result.g = g;

  std::vector<Pair> pairs;
  for (std::uint8_t j = 1; j < n; ++j)
    for (std::uint8_t i = 0; i < j; ++i) pairs.push_back({i, j});
  std::vector<std::array<std::uint8_t, SmallGraph::kMaxVertices>> remaining(pairs.size() + 1);
  for (std::size_t p = pairs.size(); p-- > 0;) {
    remaining[p] = remaining[p + 1];
    ++remaining[p][pairs[p].i];
    ++remaining[p][pairs[p].j];
  }

  // Split the backtracking forest at a fixed prefix depth.
  const std::size_t depth = std::min<std::size_t>(pairs.size(), 12);
  const std::size_t tasks = std::size_t{1} << depth;
  const unsigned jobs = std::max(1U, options.jobs);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex merge_mutex;
  std::unordered_set<std::uint64_t> classes;

  auto work = [&]() {
    Worker w(n, delta, g, options.count_classes, pairs, remaining);
    for (std::size_t task = next++; task < tasks; task = next++) {
      w.cur = SmallGraph{};
      w.cur.n = n;
      w.deg = {};
      if (w.apply_prefix(task, depth)) w.recurse(depth);
      const std::size_t finished = ++done;
      if (options.progress) {
        std::lock_guard lock(merge_mutex);
        options.progress(finished, tasks);
      }
    }
    std::lock_guard lock(merge_mutex);
    result.graphs_considered += w.considered;
    result.qualifying_labelled += w.qualifying;
    if (w.best_radius) {
      const std::uint64_t code = w.best_code;
      const bool better = !result.max_radius || *w.best_radius > *result.max_radius ||
                          (*w.best_radius == *result.max_radius && code < SmallGraph::from(*result.extremal_witness).code());
      if (better) {
        result.max_radius = w.best_radius;
        result.extremal_witness = w.best_graph.to_graph();
      }
    }
    classes.insert(w.classes.begin(), w.classes.end());
  };

  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (options.count_classes) result.isomorphism_classes = classes.size();
  return result;
}

struct ComparisonRow {
  std::size_t n = 0;
  std::size_t delta = 0;
  std::optional<std::uint32_t> enumerated;
  RadiusFormulaResult formula = RadiusFormulaResult::nonexistent();
  bool equal = false;
  std::optional<Graph> witness;
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;
  bool all_equal() const {
    return std::all_of(rows.begin(), rows.end(), [](const ComparisonRow& r) { return r.equal; });
  }
};

/// Enumerated r(n, delta, 4) against exact_radius_formula_g4 for every
/// 1 <= n <= n_max and every delta in `deltas` (each >= 2).
inline ComparisonTable verify_theorem_main_small(std::size_t n_max, const std::vector<std::size_t>& deltas,
                                                 const SearchOptions& options = {}) {
  ComparisonTable table;
  SearchOptions opts = options;
  opts.count_classes = false;
  for (std::size_t delta : deltas) {
    if (delta < 2) throw InputError("minimum degree must be at least 2");
    for (std::size_t n = 1; n <= n_max; ++n) {
      const SearchResult res = enumerate_extremal(n, delta, 4, opts);
      ComparisonRow row;
      row.n = n;
      row.delta = delta;
      row.enumerated = res.max_radius;
      row.formula = exact_radius_formula_g4(n, delta);
      row.equal = row.enumerated == row.formula.optional();
      row.witness = res.extremal_witness;
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

struct StreamClass {
  std::size_t members = 0;
  std::uint32_t max_radius = 0;
  std::string witness;  ///< graph6 of a maximizer (smallest string on ties)
};

struct StreamReport {
  std::size_t lines = 0;
  std::size_t accepted = 0;   ///< connected, min degree >= delta, girth >= g
  std::size_t filtered = 0;   ///< well formed but outside the filter
  std::size_t malformed = 0;
  std::vector<std::string> warnings;
  std::map<std::size_t, StreamClass> classes;  ///< keyed by vertex count
  std::optional<std::uint32_t> max_radius;
  std::vector<std::string> violators;  ///< accepted lines breaking the even-girth radius bound
};

/// Reads graph6 lines, keeps those that are connected with min degree >=
/// delta and girth >= g, and records per-order maximum radius. Every kept
/// graph is also checked against upper_bound_violations.
inline StreamReport stream_verify(std::istream& in, std::size_t delta, std::uint32_t g) {
  StreamReport rep;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = graph6_detail::trim(line);
    if (body.empty()) continue;
    ++rep.lines;
    Graph graph;
    try {
      graph = from_graph6(body);
    } catch (const InputError& e) {
      ++rep.malformed;
      rep.warnings.push_back("line " + std::to_string(line_no) + ": " + e.what());
      continue;
    }
    const MetricSummary ms = metric_summary(graph);
    if (!ms.connected || ms.min_degree < delta || !ms.girth.at_least(g)) {
      ++rep.filtered;
      continue;
    }
    ++rep.accepted;
    const std::string code = to_graph6(graph);
    StreamClass& cls = rep.classes[graph.order()];
    const std::uint32_t r = *ms.radius;
    if (cls.members == 0 || r > cls.max_radius || (r == cls.max_radius && code < cls.witness)) {
      cls.max_radius = r;
      cls.witness = code;
    }
    ++cls.members;
    rep.max_radius = std::max(rep.max_radius.value_or(0), r);
    if (!upper_bound_violations(graph, ms).empty()) rep.violators.emplace_back(body);
  }
  return rep;
}

}  // namespace radgirth
