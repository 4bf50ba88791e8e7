#include "constaclass/codes.hpp"

#include <limits>

namespace constaclass {

BigInt ConstacyclicCode::size() const {
  BigInt out = 1;
  const std::uint64_t q = generator.field().q();
  for (std::uint64_t i = 0; i < dimension; ++i) out *= q;
  return out;
}

std::optional<std::uint64_t> WeightEnumerator::minimum_distance() const {
  for (std::size_t w = 1; w < counts.size(); ++w) {
    if (counts[w] > 0) return w;
  }
  return std::nullopt;
}

std::uint64_t WeightEnumerator::total() const {
  std::uint64_t out = 0;
  for (auto c : counts) out += c;
  return out;
}

std::uint64_t code_count(const Factorization& fact) {
  std::uint64_t out = 1;
  for (const auto& fp : fact.factors) {
    const std::uint64_t m = fp.multiplicity + 1;
    if (out > std::numeric_limits<std::uint64_t>::max() / m) return std::numeric_limits<std::uint64_t>::max();
    out *= m;
  }
  return out;
}

ConstacyclicCode code_from_generator(std::uint64_t n, const FieldElement& lambda, const Poly& g) {
  if (!g.is_monic()) throw Error(ErrorCode::kInvalidArgument, "generator must be monic");
  const Poly modulus = Poly::binomial(g.field_ptr(), n, lambda);
  if (!divides(g, modulus)) throw Error(ErrorCode::kInvalidArgument, "generator does not divide X^n - lambda");
  ConstacyclicCode code;
  code.n = n;
  code.lambda = lambda;
  code.generator = g;
  code.dimension = n - static_cast<std::uint64_t>(g.degree());
  return code;
}

std::vector<ConstacyclicCode> enumerate_codes(const Factorization& fact, std::uint64_t n,
                                              const FieldElement& lambda, std::uint64_t max_codes) {
  if (fact.degree() != n) throw Error(ErrorCode::kInvalidArgument, "factorization degree differs from n");
  const std::uint64_t count = code_count(fact);
  if (count > max_codes) {
    throw Error(ErrorCode::kTooManyCodes,
                std::to_string(count) + " codes exceed the cap of " + std::to_string(max_codes));
  }
  const std::size_t r = fact.factors.size();
  const Poly one = Poly::constant(fact.field, fact.field->one());

  // powers[i][e] = f_i^e.
  std::vector<std::vector<Poly>> powers(r);
  for (std::size_t i = 0; i < r; ++i) {
    powers[i].push_back(one);
    for (std::uint64_t e = 1; e <= fact.factors[i].multiplicity; ++e) {
      powers[i].push_back(poly_mul(powers[i].back(), fact.factors[i].factor));
    }
  }

  std::vector<ConstacyclicCode> out;
  out.reserve(count);
  std::vector<std::uint64_t> e(r, 0);
  // prefix[i] = prod_{j < i} f_j^(e_j).
  std::vector<Poly> prefix(r + 1, one);
  std::size_t dirty = 0;
  while (true) {
    for (std::size_t i = dirty; i < r; ++i) prefix[i + 1] = poly_mul(prefix[i], powers[i][e[i]]);
    ConstacyclicCode code;
    code.n = n;
    code.lambda = lambda;
    code.exponents = e;
    code.generator = prefix[r];
    code.dimension = n - static_cast<std::uint64_t>(prefix[r].degree());
    out.push_back(std::move(code));

    std::size_t i = r;
    while (i > 0 && e[i - 1] == fact.factors[i - 1].multiplicity) {
      e[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
    ++e[i - 1];
    dirty = i - 1;
  }
  return out;
}

WeightEnumerator weight_enumerator(const ConstacyclicCode& code, std::uint64_t max_size) {
  const auto& F = code.generator.field();
  const std::uint64_t q = F.q();
  const std::uint64_t k = code.dimension;
  std::uint64_t words = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (words > max_size / q) {
      throw Error(ErrorCode::kCodeTooLarge, "code size exceeds the cap of " + std::to_string(max_size));
    }
    words *= q;
  }
  WeightEnumerator out;
  out.counts.assign(code.n + 1, 0);
  // Codewords are m(X) g(X) with deg m < k; the product never wraps.
  const auto& g = code.generator.reps();
  std::vector<Rep> word(code.n, 0);
  std::vector<std::uint64_t> digits(k, 0);
  std::uint64_t weight = 0;
  out.counts[0] = 1;
  for (std::uint64_t step = 1; step < words; ++step) {
    std::size_t i = 0;
    while (digits[i] == q - 1) {
      // Digit i wraps from xi^(q-2) back to 0.
      const Rep delta = F.neg(F.from_canonical_index(q - 1));
      for (std::size_t j = 0; j < g.size(); ++j) {
        Rep& c = word[i + j];
        const bool was = c != 0;
        c = F.add(c, F.mul(delta, g[j]));
        weight = weight - (was ? 1 : 0) + (c != 0 ? 1 : 0);
      }
      digits[i] = 0;
      ++i;
    }
    const Rep delta = F.sub(F.from_canonical_index(digits[i] + 1), F.from_canonical_index(digits[i]));
    for (std::size_t j = 0; j < g.size(); ++j) {
      Rep& c = word[i + j];
      const bool was = c != 0;
      c = F.add(c, F.mul(delta, g[j]));
      weight = weight - (was ? 1 : 0) + (c != 0 ? 1 : 0);
    }
    ++digits[i];
    ++out.counts[weight];
  }
  return out;
}

ConstacyclicCode image_code(const IsometryWitness& w, const ConstacyclicCode& code) {
  if (code.n != w.n) throw Error(ErrorCode::kWitnessMismatch, "code length differs from the witness length");
  const auto& F = w.mu.field();
  const FieldElement muk = w.mu.pow(static_cast<std::int64_t>(w.k % F.group_order()));
  if (!(code.lambda == muk)) {
    throw Error(ErrorCode::kWitnessMismatch, "code is not a " + format_element(muk) + "-constacyclic code");
  }
  ConstacyclicCode out;
  out.n = code.n;
  out.lambda = w.lambda;
  out.generator = substitute_scale(code.generator, w.a).monic();
  out.dimension = code.dimension;
  return out;
}

}  // namespace constaclass
