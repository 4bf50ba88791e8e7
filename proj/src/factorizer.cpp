#include "constaclass/factorizer.hpp"

#include <algorithm>
#include <random>

#include "constaclass/ntheory.hpp"

namespace constaclass {

std::string_view provenance_tag(Provenance p) {
  switch (p) {
    case Provenance::kOracle: return "oracle";
    case Provenance::kCyclotomicCaseI: return "cyclotomic_case_i";
    case Provenance::kBlakeCaseIIa: return "blake_case_iia";
    case Provenance::kBinomialCaseIIb: return "binomial_case_iib";
  }
  return "unknown";
}

std::string_view case_label(Provenance p) {
  switch (p) {
    case Provenance::kOracle: return "oracle";
    case Provenance::kCyclotomicCaseI: return "i";
    case Provenance::kBlakeCaseIIa: return "ii.a";
    case Provenance::kBinomialCaseIIb: return "ii.b";
  }
  return "unknown";
}

Poly Factorization::expand() const {
  Poly out = Poly::constant(field, unit);
  for (const auto& [factor, mult] : factors) out = poly_mul(out, poly_pow(factor, mult));
  return out;
}

std::uint64_t Factorization::degree() const {
  std::uint64_t total = 0;
  for (const auto& [factor, mult] : factors) total += static_cast<std::uint64_t>(factor.degree()) * mult;
  return total;
}

bool canonical_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& F = a.field();
  for (std::size_t i = a.reps().size(); i-- > 0;) {
    const auto ka = F.canonical_index(a.reps()[i]);
    const auto kb = F.canonical_index(b.reps()[i]);
    if (ka != kb) return ka < kb;
  }
  return false;
}

void canonicalize(std::vector<FactorPower>& factors) {
  std::sort(factors.begin(), factors.end(),
            [](const FactorPower& x, const FactorPower& y) { return canonical_less(x.factor, y.factor); });
  std::vector<FactorPower> merged;
  for (auto& fp : factors) {
    if (!merged.empty() && merged.back().factor == fp.factor) {
      merged.back().multiplicity += fp.multiplicity;
    } else {
      merged.push_back(std::move(fp));
    }
  }
  factors = std::move(merged);
}

bool same_factorization(const Factorization& a, const Factorization& b) {
  if (!(a.unit == b.unit) || a.factors.size() != b.factors.size()) return false;
  auto fa = a.factors;
  auto fb = b.factors;
  canonicalize(fa);
  canonicalize(fb);
  for (std::size_t i = 0; i < fa.size(); ++i) {
    if (!(fa[i].factor == fb[i].factor) || fa[i].multiplicity != fb[i].multiplicity) return false;
  }
  return true;
}

namespace {

// h -> h^q mod f as a linear map: row i holds X^(i q) mod f.
class FrobeniusMap {
 public:
  explicit FrobeniusMap(const Poly& modulus) : modulus_(modulus) {
    const auto n = static_cast<std::size_t>(modulus.degree());
    const Poly x = Poly::x(modulus.field_ptr());
    const Poly xq = poly_powmod(x, modulus.field().q(), modulus);
    rows_.reserve(n);
    Poly row = poly_rem(Poly::constant(modulus.field_ptr(), modulus.field().one()), modulus);
    for (std::size_t i = 0; i < n; ++i) {
      rows_.push_back(row);
      if (i + 1 < n) row = poly_mulmod(row, xq, modulus);
    }
  }

  Poly apply(const Poly& h) const {
    const auto& F = modulus_.field();
    const std::size_t n = rows_.size();
    std::vector<Rep> acc(n, 0);
    for (std::size_t i = 0; i < h.reps().size(); ++i) {
      const Rep c = h.reps()[i];
      if (c == 0) continue;
      const auto& row = rows_[i].reps();
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] != 0) acc[j] = F.add(acc[j], F.mul(c, row[j]));
      }
    }
    return Poly(modulus_.field_ptr(), std::move(acc));
  }

 private:
  Poly modulus_;
  std::vector<Poly> rows_;
};

Poly pth_root_poly(const Poly& f) {
  const auto& F = f.field();
  const std::size_t p = F.p();
  std::vector<Rep> out(f.reps().size() / p + 1, 0);
  for (std::size_t i = 0; i < f.reps().size(); i += p) out[i / p] = F.pth_root(f.reps()[i]);
  return Poly(f.field_ptr(), std::move(out));
}

// Square-free decomposition of a monic polynomial.
void square_free(const Poly& f, std::uint64_t scale, std::vector<FactorPower>& out) {
  if (f.degree() < 1) return;
  Poly c = poly_gcd(f, f.derivative());
  Poly w = poly_divrem(f, c).first;
  std::uint64_t i = 1;
  while (!w.is_one()) {
    Poly y = poly_gcd(w, c);
    Poly fac = poly_divrem(w, y).first;
    if (fac.degree() > 0) out.push_back({fac.monic(), i * scale});
    w = std::move(y);
    c = poly_divrem(c, w).first;
    ++i;
  }
  if (c.degree() > 0) square_free(pth_root_poly(c).monic(), scale * f.field().p(), out);
}

// Distinct-degree split of a square-free monic polynomial.
std::vector<std::pair<Poly, std::size_t>> distinct_degree(const Poly& f) {
  std::vector<std::pair<Poly, std::size_t>> out;
  const FrobeniusMap frob(f);
  const Poly x = Poly::x(f.field_ptr());
  Poly remaining = f;
  Poly h = poly_rem(x, f);
  for (std::size_t d = 1; remaining.degree() >= static_cast<int>(2 * d); ++d) {
    h = frob.apply(h);
    Poly g = poly_gcd(remaining, h - x);
    if (g.degree() > 0) {
      remaining = poly_divrem(remaining, g).first;
      out.emplace_back(std::move(g), d);
    }
  }
  if (remaining.degree() > 0) {
    const auto d = static_cast<std::size_t>(remaining.degree());
    out.emplace_back(remaining.monic(), d);
  }
  return out;
}

Poly random_poly(const FieldPtr& field, std::size_t below_degree, std::mt19937_64& rng) {
  std::vector<Rep> coeffs(below_degree);
  for (auto& c : coeffs) c = static_cast<Rep>(rng() % field->q());
  return Poly(field, std::move(coeffs));
}

// A candidate splitting polynomial for a product of degree-d irreducibles.
Poly split_candidate(const Poly& g, std::size_t d, const FrobeniusMap& frob, std::mt19937_64& rng) {
  const auto& F = g.field();
  Poly r = random_poly(g.field_ptr(), static_cast<std::size_t>(g.degree()), rng);
  if (F.p() == 2) {
    // Absolute trace: r + r^2 + ... + r^(2^(m d - 1)).
    Poly acc = r;
    Poly term = r;
    for (std::size_t i = 1; i < F.m() * d; ++i) {
      term = poly_mulmod(term, term, g);
      acc = acc + term;
    }
    return acc;
  }
  // r^((q^d - 1)/2) = (r * r^q * ... * r^(q^(d-1)))^((q-1)/2).
  Poly norm = r;
  Poly conj = r;
  for (std::size_t i = 1; i < d; ++i) {
    conj = frob.apply(conj);
    norm = poly_mulmod(norm, conj, g);
  }
  Poly s = poly_powmod(norm, (F.q() - 1) / 2, g);
  return s - Poly::constant(g.field_ptr(), F.one());
}

void equal_degree(const Poly& g, std::size_t d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (static_cast<std::size_t>(g.degree()) == d) {
    out.push_back(g);
    return;
  }
  const FrobeniusMap frob(g);
  while (true) {
    Poly candidate = poly_gcd(g, split_candidate(g, d, frob, rng));
    if (candidate.degree() > 0 && candidate.degree() < g.degree()) {
      Poly other = poly_divrem(g, candidate).first.monic();
      equal_degree(candidate, d, rng, out);
      equal_degree(other, d, rng, out);
      return;
    }
  }
}

}  // namespace

Factorization factorize(const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "factorize(0)");
  Factorization out;
  out.field = f.field_ptr();
  out.unit = f.leading();
  out.provenance = Provenance::kOracle;
  if (f.degree() == 0) return out;
  std::vector<FactorPower> square_free_parts;
  square_free(f.monic(), 1, square_free_parts);
  std::mt19937_64 rng(seed);
  for (const auto& [part, mult] : square_free_parts) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<Poly> irreducibles;
      equal_degree(block, d, rng, irreducibles);
      for (auto& g : irreducibles) out.factors.push_back({std::move(g), mult});
    }
  }
  canonicalize(out.factors);
  return out;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  const Poly g = f.monic();
  const auto n = static_cast<std::uint64_t>(g.degree());
  const FrobeniusMap frob(g);
  const Poly x = Poly::x(g.field_ptr());
  const auto primes = nt::prime_divisors(n);
  Poly h = poly_rem(x, g);
  for (std::uint64_t k = 1; k <= n; ++k) {
    h = frob.apply(h);
    if (k < n && std::any_of(primes.begin(), primes.end(), [&](std::uint64_t r) { return k == n / r; })) {
      if (poly_gcd(g, h - x).degree() != 0) return false;
    }
  }
  return (h - x).is_zero();
}

bool serret_irreducible(std::uint64_t n, const FieldElement& a) {
  if (a.is_zero()) throw Error(ErrorCode::kInvalidArgument, "serret_irreducible with a = 0");
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "serret_irreducible with n = 0");
  if (n == 1) return true;
  const std::uint64_t q_minus_one = a.field().group_order();
  const std::uint64_t k = element_order(a);
  for (std::uint64_t r : nt::prime_divisors(n)) {
    if (k % r != 0 || (q_minus_one / k) % r == 0) return false;
  }
  if (n % 4 == 0 && q_minus_one % 4 != 0) return false;
  return true;
}

}  // namespace constaclass
