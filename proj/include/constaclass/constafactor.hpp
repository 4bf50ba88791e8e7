#pragma once

// Closed-form irreducible factorization of X^n - lambda for n = l^t p^s,
// l a prime different from the characteristic p.

#include <cstdint>
#include <vector>

#include "constaclass/factorizer.hpp"

namespace constaclass {

/// Longest n accepted by the closed-form and oracle factorization entry points.
inline constexpr std::uint64_t kMaxLength = 1ULL << 20;

enum class ConstaCase { kCaseI, kCaseIIa, kCaseIIb };

std::string_view to_string(ConstaCase c);

struct ConstaParams {
  std::uint64_t ell = 0;
  unsigned t = 0;
  unsigned s = 0;
  std::uint64_t n = 1;
  /// l^u || q - 1.
  unsigned u = 0;
  unsigned v = 0;  // min(t, u)
  /// xi^((q-1)/l^u), of order l^u.
  FieldElement zeta;
  /// lambda is n-isometric to zeta^(l^j).
  unsigned j = 0;
  /// s mod m.
  unsigned s_prime = 0;
  ConstaCase kase = ConstaCase::kCaseI;
};

/// Throws EllNotPrime, EllEqualsCharacteristic, LogOfZero (lambda = 0) and
/// LengthTooLarge when n exceeds kMaxLength.
ConstaParams consta_params(const FiniteField& F, std::uint64_t ell, unsigned t, unsigned s,
                           const FieldElement& lambda);

struct BlakeParams {
  unsigned t = 1;
  /// 2^e || q + 1.
  unsigned e = 2;
  unsigned b = 1;
  unsigned c = 0;
  /// H_t, ascending canonical order.
  std::vector<FieldElement> H;
};

/// The coefficient sets H_1 = {0}, H_i = {+-((h+1)/2)^((q+1)/4)} for i < e and
/// H_e = {+-((h-1)/2)^((q+1)/4)} = H_(e+1) = ..., which give
/// X^(2^t) + 1 = prod_h (X^(2^(t-b+1)) - 2h X^(2^(t-b)) + (-1)^c).
/// Throws FieldNotThreeModFour.
BlakeParams blake_h_set(const FiniteField& F, unsigned t);

/// Factorization of X^(l^t p^s) - lambda through the case split on the class
/// of lambda. Factors are monic with multiplicity p^s; the unit is 1.
Factorization factor_consta(const FieldPtr& F, std::uint64_t ell, unsigned t, unsigned s,
                            const FieldElement& lambda);

/// X^(p^s) - lambda = (X - a^-1)^(p^s) where a^(p^s) lambda = 1.
Factorization factor_prime_power_length(const FieldPtr& F, unsigned s, const FieldElement& lambda);

/// Closed form when n = l^t p^s, oracle otherwise. Throws LogOfZero for
/// lambda = 0, InvalidArgument for n = 0 and LengthTooLarge above kMaxLength.
Factorization factor_binomial(const FieldPtr& F, std::uint64_t n, const FieldElement& lambda,
                              std::uint64_t seed = 0);

}  // namespace constaclass
