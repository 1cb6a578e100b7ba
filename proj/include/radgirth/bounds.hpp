#pragma once

// Closed-form radius values and bounds for connected graphs with given
// order n, minimum degree delta and girth g. All results are exact.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "radgirth/error.hpp"
#include "radgirth/graph.hpp"
#include "radgirth/rational.hpp"

namespace radgirth {

/// Maximum radius of a connected triangle-free graph, or nonexistent when no
/// such graph has the requested order and minimum degree.
class RadiusFormulaResult {
 public:
  static RadiusFormulaResult nonexistent() { return RadiusFormulaResult(); }
  static RadiusFormulaResult value(std::uint32_t r) {
    RadiusFormulaResult out;
    out.radius_ = r;
    return out;
  }

  bool exists() const { return radius_.has_value(); }
  std::uint32_t radius() const { return radius_.value(); }
  const std::optional<std::uint32_t>& optional() const { return radius_; }
  std::string str() const { return exists() ? std::to_string(*radius_) : std::string("nonexistent"); }

  friend bool operator==(const RadiusFormulaResult&, const RadiusFormulaResult&) = default;

 private:
  RadiusFormulaResult() = default;
  std::optional<std::uint32_t> radius_;
};

/// Exact maximum radius over connected triangle-free graphs on n vertices with
/// minimum degree delta >= 2.
inline RadiusFormulaResult exact_radius_formula_g4(std::uint64_t n, std::uint64_t delta) {
  if (delta < 2) throw InputError("minimum degree must be at least 2");
  if (n < 2 * delta) return RadiusFormulaResult::nonexistent();
  if (n <= 2 * delta + 1) return RadiusFormulaResult::value(2);
  if (n < 4 * delta) return RadiusFormulaResult::value(3);
  const std::uint64_t quotient = n / delta;
  if (delta % 2 == 1 && n % delta == 0 && quotient % 2 == 1)
    return RadiusFormulaResult::value(static_cast<std::uint32_t>(quotient - 1));
  return RadiusFormulaResult::value(static_cast<std::uint32_t>(quotient));
}

/// n k / (2 delta (delta-1)^(k-2)) + 3k for even girth g = 2k >= 4.
inline Rational upper_bound_radius(std::int64_t n, std::int64_t delta, std::uint32_t g) {
  if (delta < 2) throw InputError("minimum degree must be at least 2");
  if (g < 4 || g % 2 != 0) throw InputError("radius upper bound needs an even girth >= 4 (got " + std::to_string(g) + ")");
  const std::int64_t k = g / 2;
  const std::int64_t den = detail::checked_mul(2 * delta, detail::checked_pow(delta - 1, static_cast<int>(k - 2)));
  return Rational(detail::checked_mul(n, k), den) + Rational(3 * k);
}

/// Radius guaranteed by gluing copies of a girth-g cage with delta-1 a prime
/// power; g must be 6, 8 or 12.
inline Rational cage_lower_bound(std::int64_t n, std::int64_t delta, std::uint32_t g) {
  switch (g) {
    case 6:
      return Rational(3 * n, 2 * (delta * delta - delta + 1)) - 3;
    case 8:
      return Rational(2 * n, delta * delta * delta - 2 * delta * delta + 2 * delta) - 4;
    case 12: {
      const std::int64_t d1 = delta - 1;
      return Rational(3 * n, (d1 * d1 * d1 + 1) * (delta * delta - delta + 1)) - 6;
    }
    default:
      throw InputError("cage lower bound is only available for girth 6, 8 or 12 (got " + std::to_string(g) + ")");
  }
}

/// Order of the cage used by cage_lower_bound: 2(d^2-d+1), 2(d^3-2d^2+2d),
/// 2((d-1)^3+1)(d^2-d+1) for g = 6, 8, 12.
inline std::int64_t cage_order_bound(std::int64_t delta, std::uint32_t g) {
  switch (g) {
    case 6: return 2 * (delta * delta - delta + 1);
    case 8: return 2 * (delta * delta * delta - 2 * delta * delta + 2 * delta);
    case 12: {
      const std::int64_t d1 = delta - 1;
      return 2 * (d1 * d1 * d1 + 1) * (delta * delta - delta + 1);
    }
    default:
      throw InputError("cage order bound is only available for girth 6, 8 or 12");
  }
}

struct UpperBoundViolation {
  std::uint32_t even_girth = 0;
  Rational bound;
  std::uint32_t radius = 0;
};

/// Checks radius <= upper_bound_radius(n, delta, g') for every even
/// 4 <= g' <= girth. Graphs that are disconnected, acyclic or of minimum
/// degree < 2 are outside the bound's hypotheses and yield no violations.
inline std::vector<UpperBoundViolation> upper_bound_violations(const Graph& g, const MetricSummary& ms) {
  std::vector<UpperBoundViolation> out;
  if (!ms.connected || ms.min_degree < 2 || ms.girth.is_infinite()) return out;
  const auto n = static_cast<std::int64_t>(g.order());
  const auto delta = static_cast<std::int64_t>(ms.min_degree);
  for (std::uint32_t even = 4; even <= ms.girth.value(); even += 2) {
    const Rational bound = upper_bound_radius(n, delta, even);
    if (Rational(static_cast<std::int64_t>(*ms.radius)) > bound) out.push_back({even, bound, *ms.radius});
  }
  return out;
}

inline std::vector<UpperBoundViolation> upper_bound_violations(const Graph& g) {
  return upper_bound_violations(g, metric_summary(g));
}

}  // namespace radgirth
