#pragma once

// Index patterns that pick witness vertices off two geodesics v_0..v_r and
// v'_0..v'_{r-t} leaving a common center, and validators that instantiate a
// pattern on a concrete pair of geodesics.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "radgirth/error.hpp"
#include "radgirth/graph.hpp"
#include "radgirth/witness.hpp"

namespace radgirth {

struct IndexPattern {
  std::vector<std::uint32_t> unprimed;  ///< indices into v_0..v_r
  std::vector<std::uint32_t> primed;    ///< indices into v'_0..v'_{r-t}

  std::size_t size() const { return unprimed.size() + primed.size(); }
  friend bool operator==(const IndexPattern&, const IndexPattern&) = default;
};

namespace pattern_detail {

/// a*k + b with k = floor(r/4).
struct Affine {
  int a;
  int b;
  int at(int k) const { return a * k + b; }
};

/// Emits 4j + o for every offset o, for j from `first` to `last`.
struct Run {
  std::array<int, 2> offsets;
  int offset_count;
  Affine first;
  Affine last;
};

struct Row {
  int residue;  ///< r mod 4
  int t;
  std::vector<Run> unprimed;
  std::vector<Run> primed;
};

constexpr Affine fixed(int b) { return {0, b}; }
constexpr Affine k_plus(int b) { return {1, b}; }
constexpr Run single(int index) { return {{index, 0}, 1, fixed(0), fixed(0)}; }
constexpr Run pairs(int o1, int o2, Affine first, Affine last) { return {{o1, o2}, 2, first, last}; }

/// One row per table cell, transcribed left to right.
inline const std::vector<Row>& easycase_rows() {
  static const std::vector<Row> rows = {
      // r = 4k
      {0, 0, {pairs(3, 4, fixed(0), k_plus(-1))}, {pairs(3, 4, fixed(0), k_plus(-1))}},
      {0, 1, {single(0), pairs(3, 4, fixed(0), k_plus(-1))},
       {pairs(3, 4, fixed(0), k_plus(-2)), {{-1, 0}, 1, k_plus(0), k_plus(0)}}},
      {0, 2, {pairs(3, 4, fixed(0), k_plus(-1))}, {pairs(1, 2, fixed(0), k_plus(-1))}},
      {0, 3, {single(0), pairs(3, 4, fixed(0), k_plus(-1))}, {single(1), pairs(0, 1, fixed(1), k_plus(-1))}},
      // r = 4k+1
      {1, 0, {single(0), pairs(0, 1, fixed(1), k_plus(0))}, {pairs(0, 1, fixed(1), k_plus(0))}},
      {1, 1, {single(0), pairs(3, 4, fixed(0), k_plus(-1))}, {pairs(3, 4, fixed(0), k_plus(-1))}},
      {1, 2, {pairs(0, 1, fixed(0), fixed(0)), pairs(0, 1, fixed(1), k_plus(0))},
       {pairs(3, 4, fixed(0), k_plus(-2)), {{-1, 0}, 1, k_plus(0), k_plus(0)}}},
      // r = 4k+2
      {2, 0, {pairs(0, 1, fixed(0), fixed(0)), pairs(1, 2, fixed(1), k_plus(0))}, {pairs(1, 2, fixed(1), k_plus(0))}},
      {2, 1, {pairs(0, 1, fixed(0), fixed(0)), pairs(0, 1, fixed(1), k_plus(0))}, {pairs(0, 1, fixed(1), k_plus(0))}},
      {2, 2, {pairs(0, 1, fixed(0), fixed(0)), pairs(1, 2, fixed(1), k_plus(0))}, {pairs(3, 4, fixed(0), k_plus(-1))}},
      {2, 3, {pairs(1, 2, fixed(0), k_plus(0))}, {pairs(2, 3, fixed(0), k_plus(-1))}},
  };
  return rows;
}

inline std::vector<std::uint32_t> expand(const std::vector<Run>& runs, int k) {
  std::vector<std::uint32_t> out;
  for (const Run& run : runs)
    for (int j = run.first.at(k); j <= run.last.at(k); ++j)
      for (int o = 0; o < run.offset_count; ++o) out.push_back(static_cast<std::uint32_t>(4 * j + run.offsets[o]));
  return out;
}

}  // namespace pattern_detail

/// Witness index pattern for a triangle-free graph of radius r >= 4 with
/// shift t, for (r mod 4, t) in {0}x{0..3}, {1}x{0..2}, {2}x{0..3}.
/// Throws InputError for any other combination.
inline IndexPattern easycases_pattern(std::uint32_t r, std::uint32_t t) {
  if (r < 4) throw InputError("pattern needs r >= 4");
  const int residue = static_cast<int>(r % 4);
  const int k = static_cast<int>(r / 4);
  for (const auto& row : pattern_detail::easycase_rows()) {
    if (row.residue == residue && row.t == static_cast<int>(t))
      return {pattern_detail::expand(row.unprimed, k), pattern_detail::expand(row.primed, k)};
  }
  throw InputError("no witness pattern for r = " + std::to_string(r) + " (r mod 4 = " + std::to_string(residue) +
                   "), t = " + std::to_string(t));
}

/// The pattern for even girth 2k: v_{2ki} for 0 <= i <= q, v_{2ki+1} for
/// 0 <= i <= q-1, v'_{2ki} for 1 <= i <= q-1, v'_{2ki+1} for 1 <= i <= q-2,
/// where q = floor(r / 2k). Needs r >= 2k and t <= 2k.
inline IndexPattern upper_bound_witness_pattern(std::uint32_t r, std::uint32_t k, std::uint32_t t) {
  if (k < 2) throw InputError("half-girth k must be at least 2");
  if (r < 2 * k) throw InputError("pattern needs r >= 2k (r = " + std::to_string(r) + ", k = " + std::to_string(k) + ")");
  if (t > 2 * k) throw InputError("pattern needs t <= 2k");
  const auto q = static_cast<std::int64_t>(r / (2 * k));
  const std::int64_t step = 2 * k;
  IndexPattern p;
  for (std::int64_t i = 0; i <= q; ++i) p.unprimed.push_back(static_cast<std::uint32_t>(step * i));
  for (std::int64_t i = 0; i <= q - 1; ++i) p.unprimed.push_back(static_cast<std::uint32_t>(step * i + 1));
  for (std::int64_t i = 1; i <= q - 1; ++i) p.primed.push_back(static_cast<std::uint32_t>(step * i));
  for (std::int64_t i = 1; i <= q - 2; ++i) p.primed.push_back(static_cast<std::uint32_t>(step * i + 1));
  return p;
}

/// Maps pattern indices to vertices of the two geodesics, keeping repeats.
inline std::vector<Vertex> instantiate_pattern(const IndexPattern& p, std::span<const Vertex> path,
                                               std::span<const Vertex> vprime_path) {
  std::vector<Vertex> out;
  for (std::uint32_t i : p.unprimed) {
    if (i >= path.size()) throw ValidationError("pattern index v_" + std::to_string(i) + " is past the end of the geodesic");
    out.push_back(path[i]);
  }
  for (std::uint32_t j : p.primed) {
    if (j >= vprime_path.size())
      throw ValidationError("pattern index v'_" + std::to_string(j) + " is past the end of the second geodesic");
    out.push_back(vprime_path[j]);
  }
  return out;
}

namespace pattern_detail {

inline void require_distinct(const std::vector<Vertex>& vertices, std::size_t expected) {
  std::vector<Vertex> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() != expected || vertices.size() != expected)
    throw WitnessError("pattern instantiates to " + std::to_string(sorted.size()) + " distinct vertices (" +
                       std::to_string(vertices.size()) + " listed), expected " + std::to_string(expected));
}

}  // namespace pattern_detail

/// Instantiates easycases_pattern(r, t) on the geodesics (r = |path|-1,
/// t = r - (|vprime_path|-1)) and runs check_witness_triangle_free on it.
/// An instantiation with other than r distinct vertices is a WitnessError.
inline BoundReport validate_easycase(const Graph& g, std::span<const Vertex> path, std::span<const Vertex> vprime_path) {
  if (path.empty() || vprime_path.empty() || vprime_path.size() > path.size())
    throw InputError("need geodesics v_0..v_r and v'_0..v'_{r-t} with t >= 0");
  const auto r = static_cast<std::uint32_t>(path.size() - 1);
  const auto t = static_cast<std::uint32_t>(path.size() - vprime_path.size());
  const IndexPattern p = easycases_pattern(r, t);
  const std::vector<Vertex> vertices = instantiate_pattern(p, path, vprime_path);
  pattern_detail::require_distinct(vertices, r);
  return check_witness_triangle_free(g, vertices);
}

/// Instantiates upper_bound_witness_pattern(r, k, t) and runs
/// check_witness_general with half-girth k.
inline BoundReport validate_upper_bound_witness(const Graph& g, std::span<const Vertex> path,
                                                std::span<const Vertex> vprime_path, std::uint32_t k) {
  if (path.empty() || vprime_path.empty() || vprime_path.size() > path.size())
    throw InputError("need geodesics v_0..v_r and v'_0..v'_{r-t} with t >= 0");
  const auto r = static_cast<std::uint32_t>(path.size() - 1);
  const auto t = static_cast<std::uint32_t>(path.size() - vprime_path.size());
  const IndexPattern p = upper_bound_witness_pattern(r, k, t);
  const std::vector<Vertex> vertices = instantiate_pattern(p, path, vprime_path);
  pattern_detail::require_distinct(vertices, p.size());
  return check_witness_general(g, vertices, k);
}

}  // namespace radgirth
