#pragma once

// JSON views of the library's result types (nlohmann::json).

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>

#include "radgirth/bounds.hpp"
#include "radgirth/constructions.hpp"
#include "radgirth/graph.hpp"
#include "radgirth/graph_io.hpp"
#include "radgirth/search.hpp"
#include "radgirth/witness.hpp"

namespace radgirth::json {

using nlohmann::json;

/// Integers stay integers; other rationals become the nearest double.
inline json number(const Rational& q) {
  if (q.den() == 1) return q.num();
  return q.to_double();
}

inline json optional_radius(const std::optional<std::uint32_t>& r, const char* absent) {
  if (r) return *r;
  return absent;
}

inline json girth(const Girth& g) {
  if (g.is_infinite()) return "infinite";
  return g.value();
}

inline json metrics(const MetricSummary& ms) {
  return {
      {"order", ms.order},
      {"edges", ms.edge_count},
      {"connected", ms.connected},
      {"radius", optional_radius(ms.radius, "undefined")},
      {"diameter", optional_radius(ms.diameter, "undefined")},
      {"girth", girth(ms.girth)},
      {"min_degree", ms.min_degree},
      {"max_degree", ms.max_degree},
      {"centers", ms.centers},
  };
}

/// The stable shape {kind, claimed, measured, pass, witness}.
inline json bound_report(const BoundReport& r) {
  json out = {{"kind", r.kind}, {"claimed", number(r.claimed)}, {"measured", r.measured}, {"pass", r.pass}};
  out["witness"] = r.witness ? json(r.witness->vertices) : json::array();
  return out;
}

inline json witness_set(const WitnessSet& w) {
  return {{"kind", to_string(w.kind)}, {"parameter", w.parameter}, {"vertices", w.vertices}};
}

inline json extraction(const ExtractionResult& e) {
  return {
      {"center", e.center},
      {"geodesic", e.geodesic},
      {"chosen_index", e.chosen_index},
      {"ball", e.ball},
      {"subgraph_vertices", e.subgraph.graph.order()},
      {"subgraph_edges", e.subgraph.graph.edge_count()},
      {"subgraph", to_graph6(e.subgraph.graph)},
      {"vertex_bound", number(e.vertex_bound)},
      {"edge_bound", number(e.edge_bound)},
      {"covering_sum", e.covering_sum},
      {"meets_vertex_bound", e.meets_vertex_bound},
      {"meets_edge_bound", e.meets_edge_bound},
      {"meets_covering_bound", e.meets_covering_bound},
  };
}

inline json search_result(const SearchResult& s) {
  json out = {
      {"n", s.n},
      {"delta", s.delta},
      {"g", s.g},
      {"max_radius", optional_radius(s.max_radius, "nonexistent")},
      {"graphs_considered", s.graphs_considered},
      {"qualifying_labelled", s.qualifying_labelled},
  };
  out["extremal_witness"] = s.extremal_witness ? json(to_graph6(*s.extremal_witness)) : json(nullptr);
  if (s.isomorphism_classes) out["isomorphism_classes"] = *s.isomorphism_classes;
  return out;
}

inline json comparison_table(const ComparisonTable& t) {
  json rows = json::array();
  for (const ComparisonRow& r : t.rows) {
    rows.push_back({
        {"n", r.n},
        {"delta", r.delta},
        {"enumerated", optional_radius(r.enumerated, "nonexistent")},
        {"formula", optional_radius(r.formula.optional(), "nonexistent")},
        {"status", r.equal ? "EQUAL" : "MISMATCH"},
    });
  }
  return {{"rows", rows}, {"all_equal", t.all_equal()}};
}

inline json stream_report(const StreamReport& r) {
  json classes = json::object();
  for (const auto& [n, c] : r.classes)
    classes[std::to_string(n)] = {{"members", c.members}, {"max_radius", c.max_radius}, {"witness", c.witness}};
  json out = {
      {"lines", r.lines},
      {"accepted", r.accepted},
      {"filtered", r.filtered},
      {"malformed", r.malformed},
      {"warnings", r.warnings},
      {"classes", classes},
      {"violators", r.violators},
  };
  out["max_radius"] = r.max_radius ? json(*r.max_radius) : json(nullptr);
  return out;
}

/// Every bound applicable to (n, delta, g): the exact triangle-free value
/// (g = 4), the radius upper bound (even g >= 4) and the cage gluing lower
/// bound (g in {6, 8, 12}).
inline json bounds(std::int64_t n, std::int64_t delta, std::uint32_t g) {
  if (delta < 2) throw InputError("minimum degree must be at least 2");
  if (n < 1) throw InputError("n must be positive");
  json out = json::object();
  if (g == 4) {
    const RadiusFormulaResult exact = exact_radius_formula_g4(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(delta));
    out["exact"] = exact.exists() ? json(exact.radius()) : json("nonexistent");
    if (!exact.exists()) return out;
  }
  if (g >= 4 && g % 2 == 0) out["upper"] = number(upper_bound_radius(n, delta, g));
  if (g == 6 || g == 8 || g == 12) out["cage_lower"] = number(cage_lower_bound(n, delta, g));
  return out;
}

}  // namespace radgirth::json
