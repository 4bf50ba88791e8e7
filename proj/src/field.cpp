#include "constaclass/field.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <utility>

#include "constaclass/ntheory.hpp"

namespace constaclass {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kFieldTooLarge: return "FieldTooLarge";
    case ErrorCode::kLogOfZero: return "LogOfZero";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kDivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorCode::kZeroScale: return "ZeroScale";
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kNotCoprimeToCharacteristic: return "NotCoprimeToCharacteristic";
    case ErrorCode::kCoefficientNotInBaseField: return "CoefficientNotInBaseField";
    case ErrorCode::kNotIsometric: return "NotIsometric";
    case ErrorCode::kDegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::kEllEqualsCharacteristic: return "EllEqualsCharacteristic";
    case ErrorCode::kEllNotPrime: return "EllNotPrime";
    case ErrorCode::kFieldNotThreeModFour: return "FieldNotThreeModFour";
    case ErrorCode::kTooManyCodes: return "TooManyCodes";
    case ErrorCode::kCodeTooLarge: return "CodeTooLarge";
    case ErrorCode::kLengthTooLarge: return "LengthTooLarge";
    case ErrorCode::kWitnessMismatch: return "WitnessMismatch";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

namespace {

constexpr std::uint64_t kTableLimit = 1ULL << 20;
constexpr std::uint32_t kNoZech = 0xFFFFFFFFU;

struct ConwayEntry {
  std::uint32_t p;
  unsigned m;
  std::vector<std::uint32_t> coeffs;
};

const std::vector<ConwayEntry>& conway_table() {
  static const std::vector<ConwayEntry> table = {
#include "conway_table.inc"
  };
  return table;
}

using Digits = std::array<std::uint64_t, 64>;

void to_digits(Rep x, std::uint32_t p, unsigned m, Digits& out) {
  for (unsigned i = 0; i < m; ++i) {
    out[i] = x % p;
    x /= p;
  }
}

Rep from_digits(const Digits& d, std::uint32_t p, unsigned m) {
  std::uint64_t x = 0;
  for (unsigned i = m; i-- > 0;) x = x * p + d[i];
  return static_cast<Rep>(x);
}

// Multiplication in GF(p)[w]/(modulus) on packed reps, no tables.
Rep ring_mul(std::uint32_t p, unsigned m, const std::vector<std::uint32_t>& modulus, Rep a,
             Rep b) {
  if (m == 1) return static_cast<Rep>(static_cast<std::uint64_t>(a) * b % p);
  if (p == 2) {
    std::uint64_t product = 0;
    for (unsigned i = 0; i < m; ++i) {
      if ((b >> i) & 1U) product ^= static_cast<std::uint64_t>(a) << i;
    }
    std::uint64_t reducer = 0;
    for (unsigned i = 0; i <= m; ++i) reducer |= static_cast<std::uint64_t>(modulus[i]) << i;
    for (unsigned deg = 2 * m - 2; deg >= m; --deg) {
      if ((product >> deg) & 1U) product ^= reducer << (deg - m);
    }
    return static_cast<Rep>(product);
  }
  Digits da{}, db{};
  to_digits(a, p, m, da);
  to_digits(b, p, m, db);
  std::array<std::uint64_t, 128> product{};
  for (unsigned i = 0; i < m; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < m; ++j) product[i + j] = (product[i + j] + da[i] * db[j]) % p;
  }
  for (unsigned deg = 2 * m - 2; deg >= m; --deg) {
    const std::uint64_t c = product[deg];
    if (c == 0) continue;
    product[deg] = 0;
    for (unsigned i = 0; i < m; ++i) {
      product[deg - m + i] = (product[deg - m + i] + (p - c) * modulus[i]) % p;
    }
  }
  Digits out{};
  for (unsigned i = 0; i < m; ++i) out[i] = product[i];
  return from_digits(out, p, m);
}

Rep ring_pow(std::uint32_t p, unsigned m, const std::vector<std::uint32_t>& modulus, Rep a,
             std::uint64_t e) {
  Rep result = 1;
  while (e > 0) {
    if (e & 1U) result = ring_mul(p, m, modulus, result, a);
    a = ring_mul(p, m, modulus, a, a);
    e >>= 1U;
  }
  return result;
}

bool has_full_order(std::uint32_t p, unsigned m, const std::vector<std::uint32_t>& modulus,
                    Rep x, std::uint64_t group_order,
                    const std::vector<std::uint64_t>& primes) {
  if (x == 0) return false;
  if (ring_pow(p, m, modulus, x, group_order) != 1) return false;
  return std::none_of(primes.begin(), primes.end(), [&](std::uint64_t r) {
    return ring_pow(p, m, modulus, x, group_order / r) == 1;
  });
}

std::uint32_t smallest_primitive_root(std::uint32_t p) {
  if (p == 2) return 1;
  const auto primes = nt::prime_divisors(p - 1);
  for (std::uint32_t g = 2;; ++g) {
    if (std::none_of(primes.begin(), primes.end(),
                     [&](std::uint64_t r) { return nt::powmod(g, (p - 1) / r, p) == 1; })) {
      return g;
    }
  }
}

Rep w_rep(std::uint32_t p, unsigned m, const std::vector<std::uint32_t>& modulus) {
  if (m == 1) return (p - modulus[0]) % p;
  return p;
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

std::int64_t parse_int(std::string_view s, std::string_view context) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorCode::kParseError,
                "bad integer '" + std::string(s) + "' in " + std::string(context));
  }
  return value;
}

// Polynomial form `a0 + a1*w + a2*w^2 ...` into m coordinates mod p.
std::vector<std::uint32_t> parse_poly_form(std::uint32_t p, unsigned m, std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw Error(ErrorCode::kParseError, "empty element");
  std::vector<std::int64_t> acc(m, 0);
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t end = s.find_first_of("+-", pos);
    // '-' directly after '^' belongs to an exponent.
    while (end != std::string::npos && end > 0 && s[end - 1] == '^') {
      end = s.find_first_of("+-", end + 1);
    }
    const std::string_view term(s.data() + pos, (end == std::string::npos ? s.size() : end) - pos);
    if (term.empty()) throw Error(ErrorCode::kParseError, "empty term in '" + s + "'");
    std::int64_t coeff = 1;
    std::int64_t degree = 0;
    const auto wpos = term.find('w');
    if (wpos == std::string_view::npos) {
      coeff = parse_int(term, text);
    } else {
      std::string_view head = term.substr(0, wpos);
      if (!head.empty()) {
        if (head.back() != '*') throw Error(ErrorCode::kParseError, "expected '*' before w");
        head.remove_suffix(1);
        coeff = parse_int(head, text);
      }
      std::string_view tail = term.substr(wpos + 1);
      degree = 1;
      if (!tail.empty()) {
        if (tail.front() != '^') throw Error(ErrorCode::kParseError, "expected '^' after w");
        degree = parse_int(tail.substr(1), text);
      }
    }
    if (degree < 0 || degree >= static_cast<std::int64_t>(m)) {
      // Reduce higher powers of w later; only the basis range is accepted directly.
      throw Error(ErrorCode::kParseError, "power of w outside [0, m) in '" + s + "'");
    }
    acc[static_cast<std::size_t>(degree)] += sign * coeff;
    pos = end == std::string::npos ? s.size() : end;
  }
  std::vector<std::uint32_t> out(m);
  for (unsigned i = 0; i < m; ++i) {
    const auto pp = static_cast<std::int64_t>(p);
    out[i] = static_cast<std::uint32_t>(((acc[i] % pp) + pp) % pp);
  }
  return out;
}

Rep pack(std::uint32_t p, std::span<const std::uint32_t> coeffs) {
  std::uint64_t x = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) x = x * p + coeffs[i];
  return static_cast<Rep>(x);
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldElement

std::vector<std::uint32_t> FieldElement::coeffs() const {
  std::vector<std::uint32_t> out(field_->m());
  Rep x = rep_;
  for (auto& c : out) {
    c = x % field_->p();
    x /= field_->p();
  }
  return out;
}

namespace {
void check_same(const FieldElement& a, const FieldElement& b) {
  if (a.field_ptr() != b.field_ptr() &&
      (a.field_ptr() == nullptr || b.field_ptr() == nullptr ||
       !a.field().same_as(b.field()))) {
    throw Error(ErrorCode::kFieldMismatch, "elements from different fields");
  }
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& other) const {
  check_same(*this, other);
  return {field_, field_->add(rep_, other.rep_)};
}

FieldElement FieldElement::operator-(const FieldElement& other) const {
  check_same(*this, other);
  return {field_, field_->sub(rep_, other.rep_)};
}

FieldElement FieldElement::operator*(const FieldElement& other) const {
  check_same(*this, other);
  return {field_, field_->mul(rep_, other.rep_)};
}

FieldElement FieldElement::operator/(const FieldElement& other) const {
  check_same(*this, other);
  return {field_, field_->mul(rep_, field_->inv(other.rep_))};
}

FieldElement FieldElement::operator-() const { return {field_, field_->neg(rep_)}; }

FieldElement FieldElement::pow(std::int64_t exponent) const {
  if (exponent >= 0) return {field_, field_->pow(rep_, static_cast<std::uint64_t>(exponent))};
  return {field_, field_->pow(field_->inv(rep_), static_cast<std::uint64_t>(-exponent))};
}

FieldElement FieldElement::inverse() const { return {field_, field_->inv(rep_)}; }

// ---------------------------------------------------------------------------
// FiniteField

FiniteField::FiniteField(std::uint32_t p, unsigned m, Options options)
    : p_(p), m_(m), q_(0), modulus_(std::move(options.modulus)), xi_(options.xi) {
  if (!nt::is_prime(p)) throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  if (m == 0) throw Error(ErrorCode::kInvalidArgument, "extension degree must be >= 1");
  if (!nt::checked_pow(p, m, kMaxFieldOrder, q_)) {
    throw Error(ErrorCode::kFieldTooLarge, "p^m exceeds 2^32");
  }
  if (modulus_.size() != m + 1 || modulus_.back() != 1) {
    throw Error(ErrorCode::kInvalidArgument, "modulus must be monic of degree m");
  }
  if (std::any_of(modulus_.begin(), modulus_.end(), [&](std::uint32_t c) { return c >= p; })) {
    throw Error(ErrorCode::kInvalidArgument, "modulus coefficient out of range");
  }
  if (xi_ >= q_) throw Error(ErrorCode::kInvalidArgument, "xi out of range");
  const auto primes = nt::prime_divisors(q_ - 1 == 0 ? 1 : q_ - 1);
  if (q_ == 2) {
    if (xi_ != 1) throw Error(ErrorCode::kInvalidArgument, "xi must be 1 in GF(2)");
  } else if (!has_full_order(p_, m_, modulus_, xi_, q_ - 1, primes)) {
    throw Error(ErrorCode::kInvalidArgument,
                "xi does not have order q-1 (or the modulus is reducible)");
  }
  if (q_ <= kTableLimit) build_tables();
}

void FiniteField::build_tables() {
  const std::uint64_t order = q_ - 1;
  exp_.resize(order);
  log_.assign(q_, 0);
  Rep x = 1;
  for (std::uint64_t k = 0; k < order; ++k) {
    exp_[k] = x;
    log_[x] = static_cast<std::uint32_t>(k);
    x = ring_mul(p_, m_, modulus_, x, xi_);
  }
  zech_.resize(order);
  for (std::uint64_t k = 0; k < order; ++k) {
    const Rep s = add_digits(1, exp_[k], false);
    zech_[k] = s == 0 ? kNoZech : log_[s];
  }
}

FieldElement FiniteField::w() const { return {this, w_rep(p_, m_, modulus_)}; }

FieldElement FiniteField::element(Rep rep) const {
  if (rep >= q_) throw Error(ErrorCode::kInvalidArgument, "element rep out of range");
  return {this, rep};
}

Rep FiniteField::from_int_rep(std::int64_t value) const {
  const auto pp = static_cast<std::int64_t>(p_);
  return static_cast<Rep>(((value % pp) + pp) % pp);
}

FieldElement FiniteField::from_int(std::int64_t value) const { return {this, from_int_rep(value)}; }

FieldElement FiniteField::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != m_) throw Error(ErrorCode::kInvalidArgument, "expected m coefficients");
  for (auto c : coeffs) {
    if (c >= p_) throw Error(ErrorCode::kInvalidArgument, "coefficient out of range");
  }
  return {this, pack(p_, coeffs)};
}

FieldElement FiniteField::xi_pow(std::int64_t k) const {
  const auto order = static_cast<std::int64_t>(q_ - 1);
  const auto e = static_cast<std::uint64_t>(((k % order) + order) % order);
  return {this, pow(xi_, e)};
}

Rep FiniteField::add_digits(Rep a, Rep b, bool subtract) const {
  if (p_ == 2) return a ^ b;
  if (m_ == 1) {
    return static_cast<Rep>(subtract ? (static_cast<std::uint64_t>(a) + p_ - b) % p_
                                     : (static_cast<std::uint64_t>(a) + b) % p_);
  }
  std::uint64_t result = 0, place = 1;
  for (unsigned i = 0; i < m_; ++i) {
    const std::uint64_t da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    result += (subtract ? (da + p_ - db) % p_ : (da + db) % p_) * place;
    place *= p_;
  }
  return static_cast<Rep>(result);
}

Rep FiniteField::add(Rep a, Rep b) const {
  if (p_ == 2) return a ^ b;
  if (exp_.empty()) return add_digits(a, b, false);
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint64_t order = q_ - 1;
  const std::uint64_t la = log_[a], lb = log_[b];
  const std::uint32_t z = zech_[(lb + order - la) % order];
  if (z == kNoZech) return 0;
  return exp_[(la + z) % order];
}

Rep FiniteField::neg(Rep a) const {
  if (p_ == 2 || a == 0) return a;
  if (exp_.empty()) return add_digits(0, a, true);
  const std::uint64_t order = q_ - 1;
  return exp_[(log_[a] + order / 2) % order];
}

Rep FiniteField::sub(Rep a, Rep b) const { return add(a, neg(b)); }

Rep FiniteField::mul_digits(Rep a, Rep b) const { return ring_mul(p_, m_, modulus_, a, b); }

Rep FiniteField::mul(Rep a, Rep b) const {
  if (a == 0 || b == 0) return 0;
  if (exp_.empty()) return mul_digits(a, b);
  const std::uint64_t order = q_ - 1;
  const std::uint64_t s = static_cast<std::uint64_t>(log_[a]) + log_[b];
  return exp_[s >= order ? s - order : s];
}

Rep FiniteField::inv(Rep a) const {
  if (a == 0) throw Error(ErrorCode::kInvalidArgument, "inverse of zero");
  if (exp_.empty()) return pow(a, q_ - 2);
  const std::uint64_t order = q_ - 1;
  return exp_[(order - log_[a]) % order];
}

Rep FiniteField::pow(Rep a, std::uint64_t exponent) const {
  if (exponent == 0) return 1;
  if (a == 0) return 0;
  if (!exp_.empty()) {
    const std::uint64_t order = q_ - 1;
    return exp_[nt::mulmod(log_[a], exponent % order, order)];
  }
  Rep result = 1;
  Rep base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = mul_digits(result, base);
    base = mul_digits(base, base);
    exponent >>= 1U;
  }
  return result;
}

std::uint64_t FiniteField::log(Rep x) const {
  if (x == 0) throw Error(ErrorCode::kLogOfZero, "discrete log of zero");
  if (!exp_.empty()) return log_[x];
  return log_bsgs(x);
}

void FiniteField::build_bsgs() const {
  const std::uint64_t order = q_ - 1;
  giant_stride_ = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(order))));
  if (giant_stride_ == 0) giant_stride_ = 1;
  baby_steps_.reserve(giant_stride_);
  Rep x = 1;
  for (std::uint64_t j = 0; j < giant_stride_; ++j) {
    baby_steps_.emplace(x, static_cast<std::uint32_t>(j));
    x = mul(x, xi_);
  }
  giant_factor_ = inv(pow(xi_, giant_stride_));
}

std::uint64_t FiniteField::log_bsgs(Rep x) const {
  if (x == 0) throw Error(ErrorCode::kLogOfZero, "discrete log of zero");
  std::call_once(bsgs_once_, [this] { build_bsgs(); });
  const std::uint64_t order = q_ - 1;
  Rep gamma = x;
  for (std::uint64_t i = 0; i <= giant_stride_; ++i) {
    auto it = baby_steps_.find(gamma);
    if (it != baby_steps_.end()) return (i * giant_stride_ + it->second) % order;
    gamma = mul(gamma, giant_factor_);
  }
  throw Error(ErrorCode::kInternal, "baby-step/giant-step failed");
}

Rep FiniteField::pth_root(Rep x) const { return pow(x, q_ / p_); }

Rep FiniteField::from_canonical_index(std::uint64_t index) const {
  if (index >= q_) throw Error(ErrorCode::kInvalidArgument, "canonical index out of range");
  return index == 0 ? 0 : pow(xi_, index - 1);
}

std::string FiniteField::name() const {
  std::ostringstream out;
  out << "GF(" << p_;
  if (m_ > 1) out << '^' << m_;
  out << ')';
  return out.str();
}

std::string FiniteField::descriptor() const {
  std::ostringstream out;
  out << name() << ";modulus=";
  for (std::size_t i = 0; i < modulus_.size(); ++i) out << (i ? "," : "") << modulus_[i];
  out << ";xi=";
  const auto c = FieldElement(this, xi_).coeffs();
  bool first = true;
  for (unsigned i = 0; i < m_; ++i) {
    if (c[i] == 0) continue;
    if (!first) out << '+';
    first = false;
    out << c[i];
    if (i >= 1) out << "*w";
    if (i >= 2) out << '^' << i;
  }
  if (first) out << 0;
  return out.str();
}

bool FiniteField::same_as(const FiniteField& other) const {
  return this == &other ||
         (p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_ && xi_ == other.xi_);
}

// ---------------------------------------------------------------------------
// Construction

std::optional<std::vector<std::uint32_t>> conway_polynomial(std::uint64_t p, unsigned m) {
  if (m == 1 && nt::is_prime(p) && p < kMaxFieldOrder) {
    const auto g = smallest_primitive_root(static_cast<std::uint32_t>(p));
    return std::vector<std::uint32_t>{static_cast<std::uint32_t>((p - g) % p), 1U};
  }
  for (const auto& entry : conway_table()) {
    if (entry.p == p && entry.m == m) return entry.coeffs;
  }
  return std::nullopt;
}

namespace {

void check_field_size(std::uint64_t p, unsigned m) {
  if (!nt::is_prime(p)) throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  if (m == 0) throw Error(ErrorCode::kInvalidArgument, "extension degree must be >= 1");
  std::uint64_t q = 0;
  if (!nt::checked_pow(p, m, kMaxFieldOrder, q)) {
    throw Error(ErrorCode::kFieldTooLarge,
                "GF(" + std::to_string(p) + "^" + std::to_string(m) + ") exceeds 2^32");
  }
}

std::vector<std::uint32_t> search_primitive_modulus(std::uint32_t p, unsigned m) {
  std::uint64_t q = 0;
  nt::checked_pow(p, m, kMaxFieldOrder, q);
  const auto primes = nt::prime_divisors(q - 1);
  std::vector<std::uint32_t> modulus(m + 1, 0);
  modulus[m] = 1;
  for (std::uint64_t n = 1; n < q; ++n) {
    std::uint64_t x = n;
    for (unsigned i = 0; i < m; ++i) {
      modulus[i] = static_cast<std::uint32_t>(x % p);
      x /= p;
    }
    if (modulus[0] == 0) continue;
    if (has_full_order(p, m, modulus, w_rep(p, m, modulus), q - 1, primes)) return modulus;
  }
  throw Error(ErrorCode::kInternal, "no primitive polynomial found");
}

Rep search_generator(std::uint32_t p, unsigned m, const std::vector<std::uint32_t>& modulus) {
  std::uint64_t q = 0;
  nt::checked_pow(p, m, kMaxFieldOrder, q);
  if (q == 2) return 1;
  const auto primes = nt::prime_divisors(q - 1);
  const Rep w = w_rep(p, m, modulus);
  if (has_full_order(p, m, modulus, w, q - 1, primes)) return w;
  for (std::uint64_t x = 2; x < q; ++x) {
    if (has_full_order(p, m, modulus, static_cast<Rep>(x), q - 1, primes)) {
      return static_cast<Rep>(x);
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "modulus is not irreducible");
}

}  // namespace

FieldPtr make_field(std::uint64_t p, unsigned m) {
  check_field_size(p, m);
  static std::mutex cache_mutex;
  static std::map<std::pair<std::uint64_t, unsigned>, FieldPtr> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({p, m});
    if (it != cache.end()) return it->second;
  }
  const auto p32 = static_cast<std::uint32_t>(p);
  FiniteField::Options options;
  if (auto conway = conway_polynomial(p, m)) {
    options.modulus = std::move(*conway);
  } else {
    options.modulus = search_primitive_modulus(p32, m);
  }
  options.xi = w_rep(p32, m, options.modulus);
  if (p == 2 && m == 1) options.xi = 1;
  auto field = std::make_shared<const FiniteField>(p32, m, std::move(options));
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.emplace(std::make_pair(p, m), field).first->second;
}

FieldPtr make_field(std::uint64_t p, unsigned m, std::vector<std::uint32_t> modulus,
                    std::vector<std::uint32_t> xi_coeffs) {
  check_field_size(p, m);
  const auto p32 = static_cast<std::uint32_t>(p);
  if (xi_coeffs.size() != m) throw Error(ErrorCode::kInvalidArgument, "xi needs m coordinates");
  for (auto c : xi_coeffs) {
    if (c >= p) throw Error(ErrorCode::kInvalidArgument, "xi coordinate out of range");
  }
  FiniteField::Options options{std::move(modulus), pack(p32, xi_coeffs)};
  return std::make_shared<const FiniteField>(p32, m, std::move(options));
}

FieldPtr parse_field(std::string_view text) {
  const std::string s = strip_spaces(text);
  std::vector<std::string_view> parts;
  {
    std::string_view rest(s);
    while (true) {
      const auto semi = rest.find(';');
      parts.push_back(rest.substr(0, semi));
      if (semi == std::string_view::npos) break;
      rest.remove_prefix(semi + 1);
    }
  }
  const std::string_view head = parts.front();
  if (head.size() < 5 || head.substr(0, 3) != "GF(" || head.back() != ')') {
    throw Error(ErrorCode::kParseError, "field descriptor must look like GF(p^m): '" + s + "'");
  }
  const std::string_view inner = head.substr(3, head.size() - 4);
  std::uint64_t p = 0;
  unsigned m = 1;
  if (const auto caret = inner.find('^'); caret != std::string_view::npos) {
    p = static_cast<std::uint64_t>(parse_int(inner.substr(0, caret), s));
    m = static_cast<unsigned>(parse_int(inner.substr(caret + 1), s));
  } else {
    const auto q = parse_int(inner, s);
    if (q < 2) throw Error(ErrorCode::kNotPrime, "field order must be a prime power");
    const auto factors = nt::factor(static_cast<std::uint64_t>(q));
    if (factors.size() != 1) throw Error(ErrorCode::kNotPrime, "field order is not a prime power");
    p = factors.front().first;
    m = factors.front().second;
  }
  check_field_size(p, m);
  std::optional<std::vector<std::uint32_t>> modulus;
  std::optional<std::string_view> xi_text;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const auto eq = parts[i].find('=');
    if (eq == std::string_view::npos) throw Error(ErrorCode::kParseError, "expected key=value");
    const auto key = parts[i].substr(0, eq);
    const auto value = parts[i].substr(eq + 1);
    if (key == "modulus") {
      std::vector<std::uint32_t> coeffs;
      std::string_view rest = value;
      while (true) {
        const auto comma = rest.find(',');
        const auto c = parse_int(rest.substr(0, comma), s);
        if (c < 0 || static_cast<std::uint64_t>(c) >= p) {
          throw Error(ErrorCode::kParseError, "modulus coefficient out of range");
        }
        coeffs.push_back(static_cast<std::uint32_t>(c));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
      }
      modulus = std::move(coeffs);
    } else if (key == "xi") {
      xi_text = value;
    } else {
      throw Error(ErrorCode::kParseError, "unknown field option '" + std::string(key) + "'");
    }
  }
  if (!modulus && !xi_text) return make_field(p, m);
  const auto p32 = static_cast<std::uint32_t>(p);
  if (!modulus) modulus = make_field(p, m)->modulus();
  if (modulus->size() != m + 1 || modulus->back() != 1) {
    throw Error(ErrorCode::kParseError, "modulus must list m+1 coefficients ending in 1");
  }
  std::vector<std::uint32_t> xi_coeffs;
  if (xi_text) {
    xi_coeffs = parse_poly_form(p32, m, *xi_text);
  } else {
    const Rep xi = search_generator(p32, m, *modulus);
    for (unsigned i = 0, x = xi; i < m; ++i, x /= p32) xi_coeffs.push_back(x % p32);
  }
  return make_field(p, m, std::move(*modulus), std::move(xi_coeffs));
}

std::uint64_t discrete_log(const FieldElement& x) { return x.field().log(x.rep()); }

std::uint64_t element_order(const FieldElement& x) {
  const auto order = x.field().group_order();
  return order / nt::gcd(discrete_log(x), order);
}

std::string format_element(const FieldElement& x) {
  if (x.is_zero()) return "0";
  return "xi^" + std::to_string(discrete_log(x));
}

FieldElement parse_element(const FiniteField& field, std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw Error(ErrorCode::kParseError, "empty element");
  if (s.rfind("xi", 0) == 0) {
    if (s == "xi") return field.xi();
    if (s.size() > 3 && s[2] == '^') return field.xi_pow(parse_int(std::string_view(s).substr(3), s));
    throw Error(ErrorCode::kParseError, "bad element '" + s + "'");
  }
  const auto coeffs = parse_poly_form(field.p(), field.m(), s);
  return field.from_coeffs(coeffs);
}

}  // namespace constaclass
