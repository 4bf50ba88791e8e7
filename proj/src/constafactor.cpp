#include "constaclass/constafactor.hpp"

#include <algorithm>

#include "constaclass/cyclotomic.hpp"
#include "constaclass/isometry.hpp"
#include "constaclass/ntheory.hpp"

namespace constaclass {

namespace {

std::uint64_t length_of(std::uint64_t ell, unsigned t, std::uint64_t p, unsigned s) {
  std::uint64_t lt = 0;
  std::uint64_t ps = 0;
  std::uint64_t n = 0;
  if (!nt::checked_pow(ell, t, kMaxLength, lt) || !nt::checked_pow(p, s, kMaxLength, ps) ||
      lt > kMaxLength / ps) {
    throw Error(ErrorCode::kLengthTooLarge, "length exceeds the cap of 2^20");
  }
  n = lt * ps;
  return n;
}

std::uint64_t ipow(std::uint64_t base, unsigned exponent) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

void require_nonzero(const FieldElement& lambda) {
  if (lambda.is_zero()) throw Error(ErrorCode::kLogOfZero, "lambda must be nonzero");
}

Factorization make_result(const FieldPtr& F, Provenance provenance, std::vector<Poly> factors,
                          std::uint64_t multiplicity) {
  Factorization out;
  out.field = F;
  out.unit = F->one();
  out.provenance = provenance;
  for (auto& f : factors) out.factors.push_back({std::move(f), multiplicity});
  canonicalize(out.factors);
  return out;
}

}  // namespace

std::string_view to_string(ConstaCase c) {
  switch (c) {
    case ConstaCase::kCaseI: return "i";
    case ConstaCase::kCaseIIa: return "ii.a";
    case ConstaCase::kCaseIIb: return "ii.b";
  }
  return "unknown";
}

ConstaParams consta_params(const FiniteField& F, std::uint64_t ell, unsigned t, unsigned s,
                           const FieldElement& lambda) {
  if (!nt::is_prime(ell)) throw Error(ErrorCode::kEllNotPrime, std::to_string(ell) + " is not prime");
  if (ell == F.p()) {
    throw Error(ErrorCode::kEllEqualsCharacteristic, "l must differ from the characteristic");
  }
  require_nonzero(lambda);
  ConstaParams P;
  P.ell = ell;
  P.t = t;
  P.s = s;
  P.n = length_of(ell, t, F.p(), s);
  const std::uint64_t N = F.group_order();
  P.u = nt::valuation(N, ell);
  P.v = std::min(t, P.u);
  P.zeta = F.xi_pow(static_cast<std::int64_t>(N / ipow(ell, P.u)));
  P.s_prime = s % F.m();
  bool found = false;
  for (unsigned j = 0; j <= P.v; ++j) {
    if (isometric(F, P.n, lambda, P.zeta.pow(static_cast<std::int64_t>(ipow(ell, j))))) {
      P.j = j;
      found = true;
      break;
    }
  }
  if (!found) throw Error(ErrorCode::kInternal, "lambda matches no class representative");
  if (P.j == P.v) {
    P.kase = ConstaCase::kCaseI;
  } else if (ell == 2 && t >= 2 && P.u == 1) {
    P.kase = ConstaCase::kCaseIIa;
  } else {
    P.kase = ConstaCase::kCaseIIb;
  }
  return P;
}

BlakeParams blake_h_set(const FiniteField& F, unsigned t) {
  if (t == 0) throw Error(ErrorCode::kInvalidArgument, "t must be positive");
  if (F.q() % 4 != 3) throw Error(ErrorCode::kFieldNotThreeModFour, F.name() + " is not 3 mod 4");
  BlakeParams B;
  B.t = t;
  B.e = nt::valuation(F.q() + 1, 2);
  if (t < B.e) {
    B.b = t;
    B.c = 0;
  } else {
    B.b = B.e;
    B.c = 1;
  }
  const auto half = F.from_int(2).inverse();
  const auto exponent = static_cast<std::int64_t>((F.q() + 1) / 4);
  std::vector<FieldElement> H{F.zero()};
  const unsigned top = std::min(t, B.e);
  for (unsigned i = 2; i <= top; ++i) {
    const FieldElement shift = i < B.e ? F.one() : -F.one();
    std::vector<FieldElement> next;
    for (const auto& h : H) {
      const FieldElement r = ((h + shift) * half).pow(exponent);
      next.push_back(r);
      next.push_back(-r);
    }
    std::sort(next.begin(), next.end(), [&](const FieldElement& x, const FieldElement& y) {
      return F.canonical_index(x.rep()) < F.canonical_index(y.rep());
    });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next.size() != 2 * H.size()) {
      throw Error(ErrorCode::kInternal, "H set failed to double at level " + std::to_string(i));
    }
    H = std::move(next);
  }
  B.H = std::move(H);
  return B;
}

Factorization factor_prime_power_length(const FieldPtr& F, unsigned s, const FieldElement& lambda) {
  require_nonzero(lambda);
  const std::uint64_t n = length_of(F->p(), s, 1, 0);
  const auto w = witness(*F, n, lambda, F->one());
  std::vector<Poly> factors{Poly::binomial(F, 1, w.a.inverse())};
  return make_result(F, Provenance::kCyclotomicCaseI, std::move(factors), n);
}

Factorization factor_consta(const FieldPtr& F, std::uint64_t ell, unsigned t, unsigned s,
                            const FieldElement& lambda) {
  const ConstaParams P = consta_params(*F, ell, t, s, lambda);
  if (t == 0) return factor_prime_power_length(F, s, lambda);
  const std::uint64_t ps = ipow(F->p(), s);
  const std::uint64_t lt = ipow(ell, t);
  const std::uint64_t lu = ipow(ell, P.u);
  std::vector<Poly> factors;

  switch (P.kase) {
    case ConstaCase::kCaseI: {
      const auto w = witness(*F, P.n, lambda, F->one());
      if (P.j == t) {
        // X^(l^t) - 1 splits into linear factors over F_q.
        const FieldElement a_inv = w.a.inverse();
        const FieldElement step = P.zeta.pow(static_cast<std::int64_t>(lu / lt));
        FieldElement root = a_inv;
        for (std::uint64_t i = 0; i < lt; ++i) {
          factors.push_back(Poly::binomial(F, 1, root));
          root *= step;
        }
      } else {
        for (const auto& f : cyclotomic_factors(F, lt)) factors.push_back(substitute_scale(f, w.a).monic());
      }
      return make_result(F, Provenance::kCyclotomicCaseI, std::move(factors), ps);
    }
    case ConstaCase::kCaseIIa: {
      const auto w = witness(*F, P.n, lambda, -F->one());
      const BlakeParams B = blake_h_set(*F, t);
      const std::size_t low = std::size_t{1} << (t - B.b);
      const std::size_t high = low * 2;
      const FieldElement a_low = w.a.pow(static_cast<std::int64_t>(low));
      const FieldElement a_high = a_low * a_low;
      const FieldElement two = F->from_int(2);
      const FieldElement constant = B.c == 0 ? F->one() : -F->one();
      for (const auto& h : B.H) {
        std::vector<Rep> coeffs(high + 1, 0);
        coeffs[high] = a_high.rep();
        coeffs[low] = (-(two * a_low * h)).rep();
        coeffs[0] = constant.rep();
        factors.push_back(Poly(F, std::move(coeffs)).monic());
      }
      return make_result(F, Provenance::kBlakeCaseIIa, std::move(factors), ps);
    }
    case ConstaCase::kCaseIIb: {
      const std::uint64_t lj = ipow(ell, P.j);
      const auto w = witness(*F, P.n, lambda, P.zeta.pow(static_cast<std::int64_t>(lj)));
      const std::uint64_t degree = lt / lj;
      const FieldElement scale = w.a.pow(-static_cast<std::int64_t>(degree % F->group_order()));
      const std::uint64_t p_shift = ipow(F->p(), F->m() - P.s_prime);
      const std::uint64_t offset = nt::mulmod(w.k % lu, p_shift % lu, lu);
      const std::uint64_t stride = lu / lj;
      for (std::uint64_t i = 0; i < lj; ++i) {
        const std::uint64_t exponent = (nt::mulmod(i, stride, lu) + offset) % lu;
        factors.push_back(Poly::binomial(F, degree, scale * P.zeta.pow(static_cast<std::int64_t>(exponent))));
      }
      return make_result(F, Provenance::kBinomialCaseIIb, std::move(factors), ps);
    }
  }
  throw Error(ErrorCode::kInternal, "unreachable case");
}

Factorization factor_binomial(const FieldPtr& F, std::uint64_t n, const FieldElement& lambda,
                              std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "length must be positive");
  if (n > kMaxLength) throw Error(ErrorCode::kLengthTooLarge, "length exceeds the cap of 2^20");
  require_nonzero(lambda);
  const auto shape = nt::ell_power_shape(n, F->p());
  if (!shape) return factorize(Poly::binomial(F, n, lambda), seed);
  if (shape->t == 0) return factor_prime_power_length(F, shape->s, lambda);
  return factor_consta(F, shape->ell, shape->t, shape->s, lambda);
}

}  // namespace constaclass
