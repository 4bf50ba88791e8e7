#pragma once

// q-cyclotomic cosets and the factorization of X^n - 1 through minimal
// polynomials of roots of unity.

#include <cstdint>
#include <memory>
#include <vector>

#include "constaclass/extension.hpp"
#include "constaclass/factorizer.hpp"

namespace constaclass {

struct CyclotomicCoset {
  std::uint64_t modulus = 1;
  std::uint64_t representative = 0;
  std::vector<std::uint64_t> members;  // ascending
};

/// All q-cyclotomic cosets modulo n_prime, sorted by representative.
/// Throws NotCoprimeToCharacteristic when p divides n_prime.
std::vector<CyclotomicCoset> cosets(const FiniteField& F, std::uint64_t n_prime);

/// Shared, memoized extend_field(F, d).
std::shared_ptr<const FieldExtension> cached_extension(const FieldPtr& F, unsigned degree);

/// prod_{j in coset} (X - eta^j), expanded in the extension and restricted to
/// the base. Throws CoefficientNotInBaseField if some coefficient is not fixed
/// by the q-Frobenius (wrong eta or extension).
Poly minimal_polynomial(const FieldExtension& ext, const FieldExtension::Element& eta,
                        const CyclotomicCoset& coset);

/// The monic irreducible factors of X^n' - 1, one per coset, in coset order.
/// Memoized per field and n'.
std::vector<Poly> cyclotomic_factors(const FieldPtr& F, std::uint64_t n_prime);

/// X^n - 1 = prod M_i(X)^(p^s) with n = n' p^s; unit 1.
Factorization factor_xn_minus_one(const FieldPtr& F, std::uint64_t n);

}  // namespace constaclass
