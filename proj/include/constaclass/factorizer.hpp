#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "constaclass/poly.hpp"

namespace constaclass {

/// Which route produced a factorization.
enum class Provenance {
  kOracle,
  kCyclotomicCaseI,
  kBlakeCaseIIa,
  kBinomialCaseIIb,
};

/// `oracle`, `cyclotomic_case_i`, `blake_case_iia`, `binomial_case_iib`.
std::string_view provenance_tag(Provenance p);
/// Short case label used in CLI output: `oracle`, `i`, `ii.a`, `ii.b`.
std::string_view case_label(Provenance p);

struct FactorPower {
  Poly factor;
  std::uint64_t multiplicity = 1;
};

struct Factorization {
  FieldPtr field;
  FieldElement unit;
  std::vector<FactorPower> factors;
  Provenance provenance = Provenance::kOracle;

  /// unit * prod factor^multiplicity.
  Poly expand() const;
  std::uint64_t degree() const;
};

/// Canonical factor order: by degree, then by the canonical indices of the
/// coefficients read from the top down (0 before xi^0 before xi^1 ...).
bool canonical_less(const Poly& a, const Poly& b);

/// Sorts canonically and merges repeated factors.
void canonicalize(std::vector<FactorPower>& factors);

/// Multiset equality of (factor, multiplicity) pairs, plus equal units.
bool same_factorization(const Factorization& a, const Factorization& b);

/// Complete factorization over the coefficient field: square-free
/// decomposition (with p-th roots when the derivative vanishes), distinct-degree
/// splitting and seeded Cantor-Zassenhaus equal-degree splitting.
/// Throws ZeroPolynomial for f = 0; constants yield an empty factor list.
Factorization factorize(const Poly& f, std::uint64_t seed = 0);

/// Rabin's test. False for constants.
bool is_irreducible(const Poly& f);

/// Order criterion for the irreducibility of X^n - a (n >= 1, a != 0).
bool serret_irreducible(std::uint64_t n, const FieldElement& a);

}  // namespace constaclass
