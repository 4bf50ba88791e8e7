#include "constaclass/ntheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace constaclass::nt {

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    u64 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

u64 mulmod(u64 a, u64 b, u64 mod) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % mod);
}

u64 powmod(u64 base, u64 exp, u64 mod) {
  if (mod == 1) return 0;
  u64 result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, mod);
    base = mulmod(base, base, mod);
    exp >>= 1U;
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  unsigned r = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++r;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

// Pollard-Brent; n is odd, composite, and has no factor below 64.
u64 find_divisor(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    u64 r = 1;
    constexpr u64 kBatch = 128;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = gcd(q, n);
        k += kBatch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(u64 n, std::vector<u64>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  u64 d = find_divisor(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

}  // namespace

std::vector<std::pair<u64, unsigned>> factor(u64 n) {
  if (n == 0) throw std::invalid_argument("factor(0)");
  std::vector<u64> primes;
  for (u64 small = 2; small < 64 && small * small <= n; ++small) {
    while (n % small == 0) {
      primes.push_back(small);
      n /= small;
    }
  }
  if (n > 1) factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 prime : primes) {
    if (!out.empty() && out.back().first == prime) {
      ++out.back().second;
    } else {
      out.emplace_back(prime, 1U);
    }
  }
  return out;
}

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (const auto& [prime, exponent] : factor(n)) out.push_back(prime);
  return out;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  for (const auto& [prime, exponent] : factor(n)) {
    const std::size_t existing = out.size();
    u64 power = 1;
    for (unsigned e = 1; e <= exponent; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < existing; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 euler_phi(u64 n) {
  u64 result = n;
  for (u64 prime : prime_divisors(n)) result = result / prime * (prime - 1);
  return result;
}

unsigned valuation(u64 n, u64 prime) {
  unsigned e = 0;
  while (n % prime == 0) {
    n /= prime;
    ++e;
  }
  return e;
}

u64 multiplicative_order(u64 a, u64 n) {
  if (n == 1) return 1;
  if (gcd(a % n, n) != 1) throw std::invalid_argument("multiplicative_order: not a unit");
  u64 order = euler_phi(n);
  for (u64 prime : prime_divisors(order)) {
    while (order % prime == 0 && powmod(a, order / prime, n) == 1) order /= prime;
  }
  return order;
}

u64 inverse_mod(u64 a, u64 n) {
  if (n == 1) return 0;
  __int128 old_r = static_cast<__int128>(a % n), r = n;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    __int128 quotient = old_r / r;
    __int128 tmp = old_r - quotient * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quotient * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw std::invalid_argument("inverse_mod: not a unit");
  __int128 result = old_s % static_cast<__int128>(n);
  if (result < 0) result += n;
  return static_cast<u64>(result);
}

bool checked_pow(u64 base, unsigned exp, u64 limit, u64& out) {
  u64 result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > limit / base) return false;
    result *= base;
  }
  if (result > limit) return false;
  out = result;
  return true;
}

LengthDecomposition decompose_length(u64 n, u64 p) {
  LengthDecomposition out{n, n, 0};
  while (out.n_prime % p == 0) {
    out.n_prime /= p;
    ++out.s;
  }
  return out;
}

std::optional<EllPowerShape> ell_power_shape(u64 n, u64 p) {
  if (n == 0) return std::nullopt;
  const auto dec = decompose_length(n, p);
  if (dec.n_prime == 1) return EllPowerShape{0, 0, dec.s};
  const auto parts = factor(dec.n_prime);
  if (parts.size() != 1) return std::nullopt;
  return EllPowerShape{parts.front().first, parts.front().second, dec.s};
}

}  // namespace constaclass::nt
