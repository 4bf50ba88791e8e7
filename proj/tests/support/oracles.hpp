#pragma once

// Brute-force reference implementations. They use only FieldElement
// arithmetic and exhaustive search, never the algorithms under test.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <vector>

#include "constaclass/codes.hpp"
#include "constaclass/poly.hpp"

namespace constaclass {

// Readable test diagnostics.
inline void PrintTo(const Poly& f, std::ostream* os) { *os << format_poly(f); }
inline void PrintTo(const FieldElement& x, std::ostream* os) { *os << format_element(x); }

}  // namespace constaclass

namespace oracle {

using constaclass::FieldElement;
using constaclass::FieldPtr;
using constaclass::FiniteField;
using constaclass::Poly;

/// Every element of F: 0 first, then xi^0, xi^1, ... by repeated multiplication.
inline std::vector<FieldElement> elements(const FiniteField& F) {
  std::vector<FieldElement> out{F.zero()};
  FieldElement x = F.one();
  for (std::uint64_t k = 0; k + 1 < F.q(); ++k) {
    out.push_back(x);
    x = x * F.xi();
  }
  return out;
}

/// k with xi^k = x, by walking powers of xi.
inline std::uint64_t dlog(const FieldElement& x) {
  const auto& F = x.field();
  FieldElement y = F.one();
  for (std::uint64_t k = 0; k + 1 < F.q(); ++k) {
    if (y == x) return k;
    y = y * F.xi();
  }
  throw std::logic_error("oracle::dlog of zero");
}

inline std::uint64_t order(const FieldElement& x) {
  FieldElement y = x;
  std::uint64_t k = 1;
  while (!y.is_one()) {
    y = y * x;
    ++k;
  }
  return k;
}

inline FieldElement power(const FieldElement& x, std::uint64_t e) {
  FieldElement out = x.field().one();
  for (std::uint64_t i = 0; i < e; ++i) out = out * x;
  return out;
}

/// Coefficient vectors as FieldElement lists, ascending.
using Coeffs = std::vector<FieldElement>;

inline Coeffs coeffs_of(const Poly& f) {
  Coeffs out;
  for (std::size_t i = 0; i < f.reps().size(); ++i) out.push_back(f.coeff(i));
  return out;
}

inline void trim(Coeffs& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

inline Coeffs mul(const Coeffs& a, const Coeffs& b, const FiniteField& F) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  }
  trim(out);
  return out;
}

/// Remainder of a modulo monic-or-not b, schoolbook.
inline Coeffs rem(Coeffs a, const Coeffs& b) {
  const FieldElement lead_inv = b.back().inverse();
  trim(a);
  while (a.size() >= b.size()) {
    const FieldElement c = a.back() * lead_inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - c * b[i];
    trim(a);
  }
  return a;
}

inline FieldElement eval(const Coeffs& f, const FieldElement& x) {
  FieldElement acc = x.field().zero();
  FieldElement xp = x.field().one();
  for (const auto& c : f) {
    acc = acc + c * xp;
    xp = xp * x;
  }
  return acc;
}

/// Monic polynomials of exactly degree d, coefficient digits enumerated
/// over `elements(F)`.
inline std::vector<Coeffs> monic_polys(const FiniteField& F, std::size_t d) {
  const auto all = elements(F);
  std::vector<Coeffs> out;
  std::vector<std::size_t> digit(d, 0);
  while (true) {
    Coeffs c;
    for (std::size_t i = 0; i < d; ++i) c.push_back(all[digit[i]]);
    c.push_back(F.one());
    out.push_back(std::move(c));
    std::size_t i = 0;
    while (i < d && ++digit[i] == all.size()) digit[i++] = 0;
    if (i == d) break;
  }
  return out;
}

/// Irreducible iff no monic divisor of degree 1..deg/2 exists.
inline bool irreducible(const Coeffs& f) {
  const auto& F = f.front().field();
  const std::size_t n = f.size() - 1;
  if (n == 0) return false;
  for (std::size_t d = 1; 2 * d <= n; ++d) {
    for (const auto& g : monic_polys(F, d)) {
      if (rem(f, g).empty()) return false;
    }
  }
  return true;
}

/// Full factorization by trial division, as sorted (monic factor, multiplicity)
/// pairs where each factor is a coefficient vector. Intended for small q and
/// degrees whose irreducible factors have degree <= max_factor_degree.
struct Factor {
  Coeffs factor;
  std::uint64_t multiplicity;
};

inline std::optional<std::vector<Factor>> factor(Coeffs f, std::size_t max_factor_degree) {
  const auto& F = f.front().field();
  trim(f);
  const FieldElement lead_inv = f.back().inverse();
  for (auto& c : f) c = c * lead_inv;
  std::vector<Factor> out;
  for (std::size_t d = 1; f.size() > 1 && d <= max_factor_degree; ++d) {
    for (const auto& g : monic_polys(F, d)) {
      std::uint64_t mult = 0;
      while (f.size() >= g.size() && rem(f, g).empty()) {
        // Exact quotient by long division.
        Coeffs q(f.size() - g.size() + 1, F.zero());
        Coeffs r = f;
        for (std::size_t k = q.size(); k-- > 0;) {
          q[k] = r[k + g.size() - 1];
          for (std::size_t i = 0; i < g.size(); ++i) r[k + i] = r[k + i] - q[k] * g[i];
        }
        f = q;
        ++mult;
      }
      if (mult > 0) out.push_back({g, mult});
    }
  }
  if (f.size() > 1) return std::nullopt;
  return out;
}

/// True when some pair (a, k), a != 0 and k in [1, n) coprime to n (k = 1 for
/// n = 1), satisfies a^n lambda = mu^k.
inline bool isometric_by_search(std::uint64_t n, const FieldElement& lambda, const FieldElement& mu) {
  const auto& F = lambda.field();
  const std::uint64_t k_end = n == 1 ? 2 : n;
  for (const auto& a : elements(F)) {
    if (a.is_zero()) continue;
    const FieldElement lhs = power(a, n) * lambda;
    for (std::uint64_t k = 1; k < k_end; ++k) {
      if (std::gcd(k, n) == 1 && lhs == power(mu, k)) return true;
    }
  }
  return false;
}

/// A_w counts by expanding every codeword m(X) g(X) explicitly.
inline std::vector<std::uint64_t> weight_counts(const constaclass::ConstacyclicCode& code) {
  const auto& F = code.generator.field();
  const auto all = elements(F);
  const Coeffs g = coeffs_of(code.generator);
  std::vector<std::uint64_t> counts(code.n + 1, 0);
  std::vector<std::size_t> digit(code.dimension, 0);
  while (true) {
    Coeffs m;
    for (auto d : digit) m.push_back(all[d]);
    trim(m);
    const Coeffs c = mul(m, g, F);
    std::size_t w = 0;
    for (const auto& x : c) w += x.is_zero() ? 0 : 1;
    ++counts[w];
    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] == all.size()) digit[i++] = 0;
    if (i == digit.size()) break;
  }
  return counts;
}

inline Poly random_poly(const FieldPtr& F, std::size_t max_degree, std::mt19937_64& rng) {
  std::vector<constaclass::Rep> c(max_degree + 1);
  for (auto& x : c) x = static_cast<constaclass::Rep>(rng() % F->q());
  return Poly(F, std::move(c));
}

inline FieldElement random_nonzero(const FiniteField& F, std::mt19937_64& rng) {
  return F.xi_pow(static_cast<std::int64_t>(rng() % F.group_order()));
}

}  // namespace oracle
