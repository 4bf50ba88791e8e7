#pragma once

// Degree-d extensions of a FiniteField, represented as the tower
// F_q[Y]/(P(Y)) for a monic irreducible P of degree d over F_q.
//
// Elements of the top field are polynomials over the base reduced mod P; the
// base embeds as the constants. The order q^d may far exceed 64 bits, so
// exponents are arbitrary-precision.

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "constaclass/poly.hpp"

namespace constaclass {

using BigInt = boost::multiprecision::cpp_int;

/// Largest extension (in bits of q^d) that extend_field accepts.
inline constexpr unsigned kMaxExtensionBits = 512;

class FieldExtension {
 public:
  using Element = Poly;

  FieldExtension(FieldPtr base, unsigned degree, Poly modulus);

  const FieldPtr& base() const { return base_; }
  unsigned degree() const { return degree_; }
  /// P(Y), monic irreducible of degree `degree` over the base.
  const Poly& modulus() const { return modulus_; }
  /// q^d.
  const BigInt& order() const { return order_; }

  Element zero() const { return Poly(base_); }
  Element one() const { return Poly::constant(base_, base_->one()); }
  /// Residue class of Y.
  Element generator() const;

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return poly_mulmod(a, b, modulus_); }
  Element pow(const Element& a, const BigInt& exponent) const;
  Element pow(const Element& a, std::uint64_t exponent) const;

  /// Ring embedding of the base (constants).
  Element embed(const FieldElement& x) const;
  /// z^q == z.
  bool fixed_by_frobenius(const Element& z) const;
  /// True when z lies in the image of embed.
  bool in_base(const Element& z) const { return z.degree() <= 0; }
  /// Preimage under embed; throws CoefficientNotInBaseField.
  FieldElement restrict(const Element& z) const;

  /// Element number `index` of the canonical order: base-q digits of index
  /// are the canonical indices of the Y^i coordinates. Index 0 is zero.
  Element element_at(const BigInt& index) const;

  /// True when z has multiplicative order exactly `order`; `order_primes`
  /// are the prime divisors of `order`.
  bool has_order(const Element& z, const BigInt& order,
                 const std::vector<std::uint64_t>& order_primes) const;

  /// Generator of the full multiplicative group: first element of the
  /// canonical order with order q^d - 1. Available when q^d - 1 < 2^64.
  const std::optional<Element>& primitive_element() const { return primitive_; }

  /// A primitive n-th root of unity (n | q^d - 1). Uses
  /// primitive_element()^((q^d-1)/n) when available, else the first
  /// canonical z for which z^((q^d-1)/n) has order exactly n.
  Element root_of_unity(std::uint64_t n) const;

 private:
  FieldPtr base_;
  unsigned degree_;
  Poly modulus_;
  BigInt order_;
  std::optional<Element> primitive_;
};

/// Throws FieldTooLarge when q^d exceeds 2^kMaxExtensionBits.
FieldExtension extend_field(const FieldPtr& base, unsigned degree);

}  // namespace constaclass
