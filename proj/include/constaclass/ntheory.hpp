#pragma once

// Integer helpers for 64-bit arithmetic: primality, factoring, orders.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace constaclass::nt {

using u64 = std::uint64_t;

u64 gcd(u64 a, u64 b);
u64 mulmod(u64 a, u64 b, u64 mod);
u64 powmod(u64 base, u64 exp, u64 mod);

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(u64 n);

/// Prime factorization as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<u64, unsigned>> factor(u64 n);

/// Distinct prime divisors, ascending.
std::vector<u64> prime_divisors(u64 n);

/// All positive divisors, ascending.
std::vector<u64> divisors(u64 n);

u64 euler_phi(u64 n);

/// Exponent e with prime^e || n (n > 0).
unsigned valuation(u64 n, u64 prime);

/// Multiplicative order of a modulo n; requires gcd(a, n) = 1 and n >= 1.
u64 multiplicative_order(u64 a, u64 n);

/// Inverse of a modulo n; requires gcd(a, n) = 1.
u64 inverse_mod(u64 a, u64 n);

/// base^exp as an exact integer; returns false on overflow past `limit`.
bool checked_pow(u64 base, unsigned exp, u64 limit, u64& out);

/// Decomposes n = n_prime * p^s with p not dividing n_prime.
struct LengthDecomposition {
  u64 n = 0;
  u64 n_prime = 0;
  unsigned s = 0;
};
LengthDecomposition decompose_length(u64 n, u64 p);

/// n = ell^t * p^s with ell a prime other than p. For n' = 1, t = 0 and
/// ell = 0.
struct EllPowerShape {
  u64 ell = 0;
  unsigned t = 0;
  unsigned s = 0;
};
std::optional<EllPowerShape> ell_power_shape(u64 n, u64 p);

}  // namespace constaclass::nt
