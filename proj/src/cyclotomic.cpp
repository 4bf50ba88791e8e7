#include "constaclass/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "constaclass/ntheory.hpp"

namespace constaclass {

std::vector<CyclotomicCoset> cosets(const FiniteField& F, std::uint64_t n_prime) {
  if (n_prime == 0) throw Error(ErrorCode::kInvalidArgument, "coset modulus must be positive");
  if (n_prime % F.p() == 0) {
    throw Error(ErrorCode::kNotCoprimeToCharacteristic,
                "n' = " + std::to_string(n_prime) + " is divisible by the characteristic");
  }
  const std::uint64_t q = F.q() % n_prime;
  std::vector<bool> seen(n_prime, false);
  std::vector<CyclotomicCoset> out;
  for (std::uint64_t r = 0; r < n_prime; ++r) {
    if (seen[r]) continue;
    CyclotomicCoset c;
    c.modulus = n_prime;
    c.representative = r;
    std::uint64_t x = r;
    do {
      seen[x] = true;
      c.members.push_back(x);
      x = nt::mulmod(x, q, n_prime);
    } while (x != r);
    std::sort(c.members.begin(), c.members.end());
    out.push_back(std::move(c));
  }
  return out;
}

std::shared_ptr<const FieldExtension> cached_extension(const FieldPtr& F, unsigned degree) {
  static std::mutex mutex;
  static std::map<std::pair<std::string, unsigned>, std::shared_ptr<const FieldExtension>> cache;
  const auto key = std::make_pair(F->descriptor(), degree);
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto ext = std::make_shared<const FieldExtension>(extend_field(F, degree));
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(ext)).first->second;
}

Poly minimal_polynomial(const FieldExtension& ext, const FieldExtension::Element& eta,
                        const CyclotomicCoset& coset) {
  // Coefficients of the running product, ascending, as extension elements.
  std::vector<FieldExtension::Element> coeffs{ext.one()};
  for (std::uint64_t j : coset.members) {
    const auto root = ext.pow(eta, j);
    std::vector<FieldExtension::Element> next(coeffs.size() + 1, ext.zero());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] = ext.add(next[i + 1], coeffs[i]);
      next[i] = ext.sub(next[i], ext.mul(coeffs[i], root));
    }
    coeffs = std::move(next);
  }
  std::vector<FieldElement> base;
  base.reserve(coeffs.size());
  for (const auto& c : coeffs) base.push_back(ext.restrict(c));
  return Poly::from_elements(ext.base(), base);
}

std::vector<Poly> cyclotomic_factors(const FieldPtr& F, std::uint64_t n_prime) {
  static std::mutex mutex;
  static std::map<std::pair<std::string, std::uint64_t>, std::vector<Poly>> cache;
  const auto key = std::make_pair(F->descriptor(), n_prime);
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const auto all = cosets(*F, n_prime);
  const auto d = static_cast<unsigned>(nt::multiplicative_order(F->q() % n_prime, n_prime));
  const auto ext = cached_extension(F, d);
  const auto eta = ext->root_of_unity(n_prime);
  std::vector<Poly> out;
  out.reserve(all.size());
  for (const auto& c : all) out.push_back(minimal_polynomial(*ext, eta, c));
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(out)).first->second;
}

Factorization factor_xn_minus_one(const FieldPtr& F, std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "length must be positive");
  const auto dec = nt::decompose_length(n, F->p());
  std::uint64_t ps = 1;
  for (unsigned i = 0; i < dec.s; ++i) ps *= F->p();
  Factorization out;
  out.field = F;
  out.unit = F->one();
  out.provenance = Provenance::kCyclotomicCaseI;
  for (auto& f : cyclotomic_factors(F, dec.n_prime)) out.factors.push_back({std::move(f), ps});
  canonicalize(out.factors);
  return out;
}

}  // namespace constaclass
