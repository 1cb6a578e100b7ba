#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "radgirth/error.hpp"

namespace radgirth {

/// Element of a FiniteField, identified by its polynomial-basis coefficients
/// packed base p: index = c_0 + c_1 p + ... + c_{e-1} p^{e-1}. Elements only
/// have meaning together with the field that produced them.
struct FieldElement {
  std::uint32_t index = 0;

  friend constexpr bool operator==(FieldElement, FieldElement) = default;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

/// GF(q) for the prime powers q in supported_orders(), as GF(p)[x] modulo a
/// fixed monic irreducible polynomial. All operations go through
/// precomputed q x q tables.
class FiniteField {
 public:
  static constexpr std::array<std::uint32_t, 12> supported_orders() {
    return {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27};
  }

  static std::string supported_orders_text() {
    std::string out;
    for (std::uint32_t q : supported_orders()) out += (out.empty() ? "" : ",") + std::to_string(q);
    return "{" + out + "}";
  }

  /// Throws InputError for q outside supported_orders().
  explicit FiniteField(std::uint32_t q) : q_(q) {
    const Spec spec = lookup(q);
    p_ = spec.p;
    e_ = spec.e;
    // Monic, stored low degree first: the table lists c_0..c_{e-1}.
    reduction_.assign(spec.low.begin(), spec.low.begin() + e_);
    reduction_.push_back(1);
    if (!is_irreducible(reduction_, p_))
      throw InputError("reduction polynomial for GF(" + std::to_string(q) + ") is not irreducible");
    build_tables();
  }

  std::uint32_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return e_; }
  /// Coefficients c_0..c_e of the monic reduction polynomial.
  const std::vector<std::uint32_t>& reduction_polynomial() const { return reduction_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  FieldElement element(std::uint32_t index) const {
    if (index >= q_) throw InputError("field element index " + std::to_string(index) + " out of range");
    return {index};
  }

  std::vector<std::uint32_t> coeffs(FieldElement a) const {
    std::vector<std::uint32_t> out(e_);
    std::uint32_t x = a.index;
    for (std::uint32_t i = 0; i < e_; ++i, x /= p_) out[i] = x % p_;
    return out;
  }

  FieldElement from_coeffs(const std::vector<std::uint32_t>& c) const {
    std::uint32_t index = 0;
    for (std::size_t i = c.size(); i-- > 0;) index = index * p_ + c[i] % p_;
    return element(index);
  }

  FieldElement add(FieldElement a, FieldElement b) const { return {add_[a.index * q_ + b.index]}; }
  FieldElement mul(FieldElement a, FieldElement b) const { return {mul_[a.index * q_ + b.index]}; }
  FieldElement neg(FieldElement a) const { return {neg_[a.index]}; }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

  /// Throws InputError on zero.
  FieldElement inv(FieldElement a) const {
    if (a.index == 0) throw InputError("inverse of zero in GF(" + std::to_string(q_) + ")");
    return {inv_[a.index]};
  }
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

 private:
  struct Spec {
    std::uint32_t p;
    std::uint32_t e;
    std::array<std::uint32_t, 4> low;
  };

  static Spec lookup(std::uint32_t q) {
    switch (q) {
      case 2: case 3: case 5: case 7: case 11: case 13:
        return {q, 1, {0, 0, 0, 0}};  // x
      case 4: return {2, 2, {1, 1, 0, 0}};   // x^2 + x + 1
      case 8: return {2, 3, {1, 1, 0, 0}};   // x^3 + x + 1
      case 9: return {3, 2, {1, 0, 0, 0}};   // x^2 + 1
      case 16: return {2, 4, {1, 1, 0, 0}};  // x^4 + x + 1
      case 25: return {5, 2, {2, 1, 0, 0}};  // x^2 + x + 2
      case 27: return {3, 3, {1, 2, 0, 0}};  // x^3 + 2x + 1
      default:
        throw InputError("GF(" + std::to_string(q) + ") is not supported; supported orders are " +
                         supported_orders_text());
    }
  }

  using Poly = std::vector<std::uint32_t>;  // low degree first

  static void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  static std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    for (std::uint32_t x = 1; x < p; ++x)
      if (a * x % p == 1) return x;
    return 0;
  }

  /// Remainder of a modulo a nonzero b over GF(p).
  static Poly poly_mod(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    const std::uint32_t lead_inv = inverse_mod(b.back(), p);
    while (a.size() >= b.size()) {
      const std::uint32_t factor = a.back() * lead_inv % p;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p * p - factor * b[i] % p) % p;
      trim(a);
    }
    return a;
  }

  /// Trial division by every monic polynomial of degree 1..deg/2.
  static bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
      std::uint32_t combos = 1;
      for (std::size_t i = 0; i < d; ++i) combos *= p;
      for (std::uint32_t c = 0; c < combos; ++c) {
        Poly g(d + 1);
        std::uint32_t x = c;
        for (std::size_t i = 0; i < d; ++i, x /= p) g[i] = x % p;
        g[d] = 1;
        if (poly_mod(f, g, p).empty()) return false;
      }
    }
    return true;
  }

  void build_tables() {
    add_.resize(static_cast<std::size_t>(q_) * q_);
    mul_.resize(static_cast<std::size_t>(q_) * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
      const Poly ca = coeffs({a});
      Poly cn(e_);
      for (std::uint32_t i = 0; i < e_; ++i) cn[i] = (p_ - ca[i]) % p_;
      neg_[a] = from_coeffs(cn).index;
      for (std::uint32_t b = 0; b < q_; ++b) {
        const Poly cb = coeffs({b});
        Poly sum(e_);
        for (std::uint32_t i = 0; i < e_; ++i) sum[i] = (ca[i] + cb[i]) % p_;
        add_[a * q_ + b] = from_coeffs(sum).index;
        Poly prod(2 * e_, 0);
        for (std::uint32_t i = 0; i < e_; ++i)
          for (std::uint32_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
        Poly reduced = e_ == 1 ? Poly{prod[0]} : poly_mod(prod, reduction_, p_);
        reduced.resize(e_, 0);
        mul_[a * q_ + b] = from_coeffs(reduced).index;
      }
    }
    for (std::uint32_t a = 1; a < q_; ++a)
      for (std::uint32_t b = 1; b < q_; ++b)
        if (mul_[a * q_ + b] == 1) inv_[a] = b;
    for (std::uint32_t a = 1; a < q_; ++a)
      if (inv_[a] == 0) throw InputError("GF(" + std::to_string(q_) + ") table has a zero divisor");
  }

  std::uint32_t q_;
  std::uint32_t p_ = 0;
  std::uint32_t e_ = 0;
  Poly reduction_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> inv_;
};

/// Named constructor mirroring the field lookup by order.
inline FiniteField field_make(std::uint32_t q) { return FiniteField(q); }

}  // namespace radgirth
