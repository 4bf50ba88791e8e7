#pragma once

// GF(p^m) with a fixed primitive element xi.
//
// Elements are stored in polynomial basis over GF(p): the residue class
// c_0 + c_1 w + ... + c_{m-1} w^{m-1} of GF(p)[w]/(modulus) is packed into a
// single integer sum c_i p^i (the "rep"). Fields of order up to 2^20 carry
// full exponent/logarithm/Zech tables; larger ones (up to 2^32) use digit
// arithmetic and baby-step/giant-step logarithms.

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "constaclass/errors.hpp"

namespace constaclass {

using Rep = std::uint32_t;

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const FiniteField* field, Rep rep) : field_(field), rep_(rep) {}

  const FiniteField& field() const { return *field_; }
  const FiniteField* field_ptr() const { return field_; }
  Rep rep() const { return rep_; }

  bool is_zero() const { return rep_ == 0; }
  bool is_one() const { return rep_ == 1; }

  /// Polynomial-basis coordinates c_0 .. c_{m-1}.
  std::vector<std::uint32_t> coeffs() const;

  FieldElement operator+(const FieldElement& other) const;
  FieldElement operator-(const FieldElement& other) const;
  FieldElement operator*(const FieldElement& other) const;
  FieldElement operator/(const FieldElement& other) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& other) { return *this = *this + other; }
  FieldElement& operator-=(const FieldElement& other) { return *this = *this - other; }
  FieldElement& operator*=(const FieldElement& other) { return *this = *this * other; }

  /// Negative exponents invert first; 0^0 = 1.
  FieldElement pow(std::int64_t exponent) const;
  FieldElement inverse() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.rep_ == b.rep_ && a.field_ == b.field_;
  }

 private:
  const FiniteField* field_ = nullptr;
  Rep rep_ = 0;
};

class FiniteField {
 public:
  struct Options {
    std::vector<std::uint32_t> modulus;  // ascending, monic, degree m
    Rep xi = 0;                          // packed rep of the designated generator
  };

  /// Validates that `xi` has order p^m - 1 in GF(p)[w]/(modulus), which also
  /// certifies that the modulus is irreducible.
  FiniteField(std::uint32_t p, unsigned m, Options options);

  FiniteField(const FiniteField&) = delete;
  FiniteField& operator=(const FiniteField&) = delete;

  std::uint32_t p() const { return p_; }
  unsigned m() const { return m_; }
  std::uint64_t q() const { return q_; }
  std::uint64_t group_order() const { return q_ - 1; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  bool has_tables() const { return !exp_.empty(); }

  FieldElement zero() const { return {this, 0}; }
  FieldElement one() const { return {this, 1}; }
  FieldElement xi() const { return {this, xi_}; }
  /// Residue class of the indeterminate (equals xi for Conway moduli).
  FieldElement w() const;
  FieldElement element(Rep rep) const;
  FieldElement from_int(std::int64_t value) const;
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  /// xi^k for any integer k.
  FieldElement xi_pow(std::int64_t k) const;

  // Raw arithmetic on packed reps. All inputs must be < q.
  Rep add(Rep a, Rep b) const;
  Rep sub(Rep a, Rep b) const;
  Rep neg(Rep a) const;
  Rep mul(Rep a, Rep b) const;
  Rep inv(Rep a) const;
  Rep pow(Rep a, std::uint64_t exponent) const;
  Rep from_int_rep(std::int64_t value) const;

  /// k in [0, q-1) with xi^k = x. Throws LogOfZero.
  std::uint64_t log(Rep x) const;
  /// Same contract as log(), always through the baby-step/giant-step table.
  std::uint64_t log_bsgs(Rep x) const;

  /// Unique p-th root (x^(q/p)).
  Rep pth_root(Rep x) const;

  /// Canonical element order: 0 first, then xi^0, xi^1, ... .
  std::uint64_t canonical_index(Rep x) const { return x == 0 ? 0 : log(x) + 1; }
  Rep from_canonical_index(std::uint64_t index) const;

  /// "GF(p^m)" (or "GF(p)").
  std::string name() const;
  /// Full descriptor including modulus and xi; identifies the field up to
  /// representation.
  std::string descriptor() const;

  bool same_as(const FiniteField& other) const;

 private:
  Rep mul_digits(Rep a, Rep b) const;
  Rep add_digits(Rep a, Rep b, bool subtract) const;
  void build_tables();
  void build_bsgs() const;

  std::uint32_t p_;
  unsigned m_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  Rep xi_;

  std::vector<Rep> exp_;               // exp_[k] = xi^k, size q-1
  std::vector<std::uint32_t> log_;     // log_[x], size q
  std::vector<std::uint32_t> zech_;    // log(1 + xi^k), kNoZech when zero

  mutable std::once_flag bsgs_once_;
  mutable std::unordered_map<Rep, std::uint32_t> baby_steps_;
  mutable std::uint64_t giant_stride_ = 0;
  mutable Rep giant_factor_ = 0;
};

/// Largest field make_field accepts.
inline constexpr std::uint64_t kMaxFieldOrder = 1ULL << 32;

/// GF(p^m) from the embedded Conway table when available, else from the
/// first primitive polynomial in a deterministic search.
FieldPtr make_field(std::uint64_t p, unsigned m);

/// GF(p^m) with an explicit modulus (ascending, monic) and generator xi.
FieldPtr make_field(std::uint64_t p, unsigned m, std::vector<std::uint32_t> modulus,
                    std::vector<std::uint32_t> xi_coeffs);

/// Conway polynomial from the embedded table, if present.
std::optional<std::vector<std::uint32_t>> conway_polynomial(std::uint64_t p, unsigned m);

/// Parses `GF(p^m)`, `GF(p)` or `GF(q)` with optional `;modulus=c0,...,cm`
/// and `;xi=<polynomial form>`.
FieldPtr parse_field(std::string_view text);

std::uint64_t discrete_log(const FieldElement& x);
std::uint64_t element_order(const FieldElement& x);

/// Canonical element text: `0` or `xi^k`.
std::string format_element(const FieldElement& x);

/// Accepts `0`, `xi`, `xi^k` (k any integer) and polynomial form
/// `a0 + a1*w + a2*w^2 ...` with integer coefficients reduced mod p.
FieldElement parse_element(const FiniteField& field, std::string_view text);

}  // namespace constaclass
