#include "constaclass/extension.hpp"

#include <limits>

#include "constaclass/factorizer.hpp"
#include "constaclass/ntheory.hpp"

namespace constaclass {

namespace {

BigInt big_pow(std::uint64_t base, unsigned exponent) {
  BigInt out = 1;
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

// Monic degree-d polynomial whose lower coefficients are the base-q digits of
// `index` read as canonical element indices.
Poly monic_at(const FieldPtr& F, unsigned d, BigInt index) {
  std::vector<Rep> coeffs(d + 1, 0);
  for (unsigned i = 0; i < d; ++i) {
    const auto digit = static_cast<std::uint64_t>(index % F->q());
    index /= F->q();
    coeffs[i] = F->from_canonical_index(digit);
  }
  coeffs[d] = 1;
  return Poly(F, std::move(coeffs));
}

}  // namespace

FieldExtension::FieldExtension(FieldPtr base, unsigned degree, Poly modulus)
    : base_(std::move(base)), degree_(degree), modulus_(std::move(modulus)) {
  if (degree_ == 0 || modulus_.degree() != static_cast<int>(degree_) || !modulus_.is_monic()) {
    throw Error(ErrorCode::kInvalidArgument, "extension modulus must be monic of the given degree");
  }
  order_ = big_pow(base_->q(), degree_);
  const BigInt group = order_ - 1;
  if (group <= BigInt(std::numeric_limits<std::uint64_t>::max())) {
    const auto g = static_cast<std::uint64_t>(group);
    const auto primes = nt::prime_divisors(g);
    for (BigInt index = 1;; ++index) {
      Element z = element_at(index);
      if (has_order(z, group, primes)) {
        primitive_ = std::move(z);
        break;
      }
    }
  }
}

FieldExtension::Element FieldExtension::generator() const {
  return poly_rem(Poly::x(base_), modulus_);
}

FieldExtension::Element FieldExtension::pow(const Element& a, const BigInt& exponent) const {
  if (exponent < 0) throw Error(ErrorCode::kInvalidArgument, "negative exponent in extension");
  Element result = one();
  Element base = poly_rem(a, modulus_);
  const unsigned bits = exponent == 0 ? 0 : static_cast<unsigned>(boost::multiprecision::msb(exponent)) + 1;
  for (unsigned i = bits; i-- > 0;) {
    result = mul(result, result);
    if (boost::multiprecision::bit_test(exponent, i)) result = mul(result, base);
  }
  return result;
}

FieldExtension::Element FieldExtension::pow(const Element& a, std::uint64_t exponent) const {
  return poly_powmod(a, exponent, modulus_);
}

FieldExtension::Element FieldExtension::embed(const FieldElement& x) const {
  return Poly::constant(base_, x);
}

bool FieldExtension::fixed_by_frobenius(const Element& z) const {
  return pow(z, base_->q()) == poly_rem(z, modulus_);
}

FieldElement FieldExtension::restrict(const Element& z) const {
  if (!in_base(z)) {
    throw Error(ErrorCode::kCoefficientNotInBaseField, "element is not in the base field");
  }
  return z.coeff(0);
}

FieldExtension::Element FieldExtension::element_at(const BigInt& index) const {
  if (index < 0 || index >= order_) throw Error(ErrorCode::kInvalidArgument, "element index out of range");
  BigInt rest = index;
  std::vector<Rep> coeffs(degree_, 0);
  for (unsigned i = 0; i < degree_; ++i) {
    coeffs[i] = base_->from_canonical_index(static_cast<std::uint64_t>(rest % base_->q()));
    rest /= base_->q();
  }
  return Poly(base_, std::move(coeffs));
}

bool FieldExtension::has_order(const Element& z, const BigInt& order,
                               const std::vector<std::uint64_t>& order_primes) const {
  if (z.is_zero()) return false;
  if (!pow(z, order).is_one()) return false;
  for (std::uint64_t r : order_primes) {
    if (pow(z, BigInt(order / r)).is_one()) return false;
  }
  return true;
}

FieldExtension::Element FieldExtension::root_of_unity(std::uint64_t n) const {
  const BigInt group = order_ - 1;
  if (n == 0 || group % n != 0) {
    throw Error(ErrorCode::kInvalidArgument, "n does not divide the extension group order");
  }
  const BigInt cofactor = group / n;
  if (primitive_) return pow(*primitive_, cofactor);
  const auto primes = nt::prime_divisors(n);
  for (BigInt index = 1; index < order_; ++index) {
    Element w = pow(element_at(index), cofactor);
    if (has_order(w, BigInt(n), primes)) return w;
  }
  throw Error(ErrorCode::kInternal, "no root of unity found");
}

FieldExtension extend_field(const FieldPtr& base, unsigned degree) {
  if (degree == 0) throw Error(ErrorCode::kInvalidArgument, "extension degree must be positive");
  const BigInt order = big_pow(base->q(), degree);
  if (boost::multiprecision::msb(order) >= kMaxExtensionBits) {
    throw Error(ErrorCode::kFieldTooLarge, "extension of " + base->name() + " of degree " +
                                               std::to_string(degree) + " exceeds the size cap");
  }
  for (BigInt index = 0;; ++index) {
    Poly candidate = monic_at(base, degree, index);
    if (is_irreducible(candidate)) return FieldExtension(base, degree, std::move(candidate));
  }
}

}  // namespace constaclass
