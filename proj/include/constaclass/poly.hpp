#pragma once

// Dense univariate polynomials over a FiniteField.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "constaclass/field.hpp"

namespace constaclass {

class Poly {
 public:
  /// The zero polynomial.
  explicit Poly(FieldPtr field);
  /// Coefficients ascending; trailing zeros are stripped.
  Poly(FieldPtr field, std::vector<Rep> coeffs);

  static Poly constant(FieldPtr field, const FieldElement& c);
  static Poly monomial(FieldPtr field, const FieldElement& c, std::size_t degree);
  static Poly x(FieldPtr field);
  /// X^n - c.
  static Poly binomial(FieldPtr field, std::size_t n, const FieldElement& c);
  static Poly from_elements(FieldPtr field, const std::vector<FieldElement>& coeffs);

  const FieldPtr& field_ptr() const { return field_; }
  const FiniteField& field() const { return *field_; }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  const std::vector<Rep>& reps() const { return coeffs_; }
  FieldElement coeff(std::size_t i) const;
  FieldElement leading() const;
  /// Number of nonzero coefficients (Hamming weight of the coefficient vector).
  std::size_t weight() const;

  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly operator-() const;
  Poly scaled(const FieldElement& c) const;
  Poly monic() const;
  Poly derivative() const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.coeffs_ == b.coeffs_ && (a.field_ == b.field_ || a.field_->same_as(*b.field_));
  }

 private:
  void normalize();
  void check_same_field(const Poly& other) const;

  FieldPtr field_;
  std::vector<Rep> coeffs_;
};

Poly poly_mul(const Poly& f, const Poly& g);
/// Euclidean division; deg(remainder) < deg(divisor). Throws DivisionByZeroPoly.
std::pair<Poly, Poly> poly_divrem(const Poly& f, const Poly& g);
Poly poly_rem(const Poly& f, const Poly& g);
/// Monic gcd (zero only when both inputs are zero).
Poly poly_gcd(const Poly& f, const Poly& g);
Poly poly_pow(const Poly& f, std::uint64_t exponent);
Poly poly_powmod(const Poly& f, std::uint64_t exponent, const Poly& modulus);
Poly poly_mulmod(const Poly& f, const Poly& g, const Poly& modulus);
bool divides(const Poly& divisor, const Poly& f);

/// f(aX): coefficient c_i becomes c_i * a^i. Throws ZeroScale for a = 0.
Poly substitute_scale(const Poly& f, const FieldElement& a);

FieldElement poly_eval(const Poly& f, const FieldElement& x);

/// `X^3 + xi*X^2 + xi^17*X + xi^12`: descending degree, unit coefficients
/// omitted, `0` for the zero polynomial.
std::string format_poly(const Poly& f);
/// Inverse of format_poly; coefficients accept any parse_element syntax.
Poly parse_poly(const FieldPtr& field, std::string_view text);

}  // namespace constaclass
