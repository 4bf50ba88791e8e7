#pragma once

// lambda-constacyclic codes of length n as ideals <g> of F_q[X]/<X^n - lambda>,
// one per divisor g of X^n - lambda.

#include <cstdint>
#include <optional>
#include <vector>

#include "constaclass/extension.hpp"
#include "constaclass/factorizer.hpp"
#include "constaclass/isometry.hpp"

namespace constaclass {

inline constexpr std::uint64_t kDefaultMaxCodes = 1'000'000;
inline constexpr std::uint64_t kDefaultMaxCodeSize = 1ULL << 20;

struct ConstacyclicCode {
  std::uint64_t n = 0;
  FieldElement lambda;
  /// e_i aligned with the factor list the code was enumerated from; empty for
  /// codes built directly from a generator.
  std::vector<std::uint64_t> exponents;
  Poly generator{nullptr};
  std::uint64_t dimension = 0;

  /// q^dimension.
  BigInt size() const;
};

struct WeightEnumerator {
  /// counts[w] = number of codewords of Hamming weight w, w = 0..n.
  std::vector<std::uint64_t> counts;

  /// Least positive weight present; empty for the zero code.
  std::optional<std::uint64_t> minimum_distance() const;
  std::uint64_t total() const;
};

/// Number of codes, prod (mult_i + 1), saturating at UINT64_MAX.
std::uint64_t code_count(const Factorization& fact);

/// The code <g> of F_q[X]/<X^n - lambda>. Throws InvalidArgument unless g is a
/// monic divisor of X^n - lambda.
ConstacyclicCode code_from_generator(std::uint64_t n, const FieldElement& lambda, const Poly& g);

/// Every code, exponent vectors in lexicographic order (last factor varies
/// fastest). Throws TooManyCodes above `max_codes`.
std::vector<ConstacyclicCode> enumerate_codes(const Factorization& fact, std::uint64_t n,
                                              const FieldElement& lambda,
                                              std::uint64_t max_codes = kDefaultMaxCodes);

/// Exhaustive enumerator over all q^k messages. Throws CodeTooLarge when the
/// code has more than `max_size` words.
WeightEnumerator weight_enumerator(const ConstacyclicCode& code,
                                   std::uint64_t max_size = kDefaultMaxCodeSize);

/// The code <monic(g(aX))> of F_q[X]/<X^n - lambda> for a code of
/// F_q[X]/<X^n - mu^k>. Throws WitnessMismatch if the code does not live there.
ConstacyclicCode image_code(const IsometryWitness& w, const ConstacyclicCode& code);

}  // namespace constaclass
