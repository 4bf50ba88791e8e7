#pragma once

// The n-isometry relation on F_q^*: lambda ~ mu iff the subgroups
// <lambda, xi^n> and <mu, xi^n> coincide, witnessed by a pair (a, k) with
// a^n lambda = mu^k, gcd(k, n) = 1 and the algebra map f(X) -> f(aX).

#include <cstdint>
#include <vector>

#include "constaclass/poly.hpp"

namespace constaclass {

struct IsometryWitness {
  std::uint64_t n = 1;
  FieldElement lambda;
  FieldElement mu;
  FieldElement a;
  std::uint64_t k = 1;
};

struct IsometryClass {
  std::uint64_t n = 1;
  FieldElement representative;
  std::vector<FieldElement> members;  // ascending discrete log
  /// d' with gcd(dlog(x), gcd(n, q-1)) = d' for every member.
  std::uint64_t subgroup_index = 1;
};

/// gcd(dlog lambda, d) == gcd(dlog mu, d) with d = gcd(n, q-1).
bool isometric(const FiniteField& F, std::uint64_t n, const FieldElement& lambda, const FieldElement& mu);

/// Number of divisors of gcd(n, q-1).
std::uint64_t class_count(const FiniteField& F, std::uint64_t n);

/// d' = gcd(dlog lambda, gcd(n, q-1)).
std::uint64_t subgroup_index(const FiniteField& F, std::uint64_t n, const FieldElement& lambda);

/// Class representative for index d'. The class of 1 is represented by 1.
/// When n = l^t p^s the others are powers zeta^(l^j) of
/// zeta = xi^((q-1)/l^u), l^u || q-1; otherwise xi^(d').
FieldElement class_representative(const FiniteField& F, std::uint64_t n, std::uint64_t d_prime);

/// All classes: the class of 1 first, then ascending subgroup index.
/// Throws FieldTooLarge above q = 2^20.
std::vector<IsometryClass> classes(const FieldPtr& F, std::uint64_t n);

/// Deterministic witness: the least k in [1, n) coprime to n that admits a
/// solution, then the solution a of least discrete log. Throws NotIsometric.
IsometryWitness witness(const FiniteField& F, std::uint64_t n, const FieldElement& lambda,
                        const FieldElement& mu);

/// Checks a != 0, gcd(k, n) = 1, 1 <= k < n (k = 1 for n = 1) and
/// a^n lambda = mu^k.
bool witness_valid(const IsometryWitness& w);

/// f(aX). Throws DegreeTooLarge when deg f >= n.
Poly apply_phi(const IsometryWitness& w, const Poly& f);

}  // namespace constaclass
