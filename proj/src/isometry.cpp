#include "constaclass/isometry.hpp"

#include <map>

#include "constaclass/ntheory.hpp"

namespace constaclass {

namespace {

constexpr std::uint64_t kMaxClassFieldOrder = 1ULL << 20;

std::uint64_t ipow(std::uint64_t base, unsigned exponent) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace

std::uint64_t subgroup_index(const FiniteField& F, std::uint64_t n, const FieldElement& lambda) {
  const std::uint64_t d = nt::gcd(n, F.group_order());
  return nt::gcd(discrete_log(lambda), d);
}

bool isometric(const FiniteField& F, std::uint64_t n, const FieldElement& lambda, const FieldElement& mu) {
  return subgroup_index(F, n, lambda) == subgroup_index(F, n, mu);
}

std::uint64_t class_count(const FiniteField& F, std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "length must be positive");
  return nt::divisors(nt::gcd(n, F.group_order())).size();
}

FieldElement class_representative(const FiniteField& F, std::uint64_t n, std::uint64_t d_prime) {
  const std::uint64_t N = F.group_order();
  const std::uint64_t d = nt::gcd(n, N);
  if (d_prime == 0 || d % d_prime != 0) {
    throw Error(ErrorCode::kInvalidArgument, "subgroup index must divide gcd(n, q-1)");
  }
  if (d_prime == d) return F.one();
  const auto shape = nt::ell_power_shape(n, F.p());
  if (shape && shape->t > 0) {
    const unsigned u = nt::valuation(N, shape->ell);
    const FieldElement zeta = F.xi_pow(static_cast<std::int64_t>(N / ipow(shape->ell, u)));
    const unsigned j = nt::valuation(d_prime, shape->ell);
    return zeta.pow(static_cast<std::int64_t>(ipow(shape->ell, j)));
  }
  return F.xi_pow(static_cast<std::int64_t>(d_prime));
}

std::vector<IsometryClass> classes(const FieldPtr& F, std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "length must be positive");
  if (F->q() > kMaxClassFieldOrder) {
    throw Error(ErrorCode::kFieldTooLarge, "class enumeration is limited to q <= 2^20");
  }
  const std::uint64_t N = F->group_order();
  const std::uint64_t d = nt::gcd(n, N);
  std::map<std::uint64_t, IsometryClass> by_index;
  for (std::uint64_t dp : nt::divisors(d)) {
    IsometryClass c;
    c.n = n;
    c.subgroup_index = dp;
    c.representative = class_representative(*F, n, dp);
    by_index.emplace(dp, std::move(c));
  }
  for (std::uint64_t x = 0; x < N; ++x) {
    by_index.at(nt::gcd(x, d)).members.push_back(F->xi_pow(static_cast<std::int64_t>(x)));
  }
  std::vector<IsometryClass> out;
  out.push_back(std::move(by_index.at(d)));
  for (auto& [dp, c] : by_index) {
    if (dp != d) out.push_back(std::move(c));
  }
  return out;
}

IsometryWitness witness(const FiniteField& F, std::uint64_t n, const FieldElement& lambda,
                        const FieldElement& mu) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "length must be positive");
  const std::uint64_t N = F.group_order();
  const std::uint64_t d = nt::gcd(n, N);
  const std::uint64_t x = discrete_log(lambda);
  const std::uint64_t y = discrete_log(mu);
  if (nt::gcd(x, d) != nt::gcd(y, d)) {
    throw Error(ErrorCode::kNotIsometric, format_element(lambda) + " and " + format_element(mu) +
                                              " are not " + std::to_string(n) + "-isometric");
  }
  // k y = x (mod d) with gcd(k, n) = 1; the residue of k mod d is a unit mod d
  // and every unit mod d lifts to a unit mod n.
  std::uint64_t k = 0;
  const std::uint64_t k_end = n == 1 ? 2 : n;
  for (std::uint64_t c = 1; c < k_end; ++c) {
    if (nt::gcd(c, n) == 1 && (nt::mulmod(c % d, y % d, d) + d - x % d) % d == 0) {
      k = c;
      break;
    }
  }
  if (k == 0) throw Error(ErrorCode::kInternal, "no admissible k found");
  // n A = k y - x (mod N).
  const std::uint64_t rhs = (nt::mulmod(k % N, y, N) + N - x % N) % N;
  const std::uint64_t modulus = N / d;
  std::uint64_t A = 0;
  if (modulus > 1) {
    A = nt::mulmod((rhs / d) % modulus, nt::inverse_mod((n / d) % modulus, modulus), modulus);
  }
  return IsometryWitness{n, lambda, mu, F.xi_pow(static_cast<std::int64_t>(A)), k};
}

bool witness_valid(const IsometryWitness& w) {
  if (w.a.field_ptr() == nullptr || w.a.is_zero() || w.k == 0) return false;
  if (nt::gcd(w.k, w.n) != 1) return false;
  if (w.n > 1 ? w.k >= w.n : w.k != 1) return false;
  const auto& F = w.a.field();
  const std::uint64_t N = F.group_order();
  const FieldElement an = w.a.pow(static_cast<std::int64_t>(w.n % N));
  const FieldElement muk = w.mu.pow(static_cast<std::int64_t>(w.k % N));
  return an * w.lambda == muk;
}

Poly apply_phi(const IsometryWitness& w, const Poly& f) {
  if (f.degree() >= 0 && static_cast<std::uint64_t>(f.degree()) >= w.n) {
    throw Error(ErrorCode::kDegreeTooLarge, "deg f must be below the code length");
  }
  return substitute_scale(f, w.a);
}

}  // namespace constaclass
