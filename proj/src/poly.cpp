#include "constaclass/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace constaclass {

Poly::Poly(FieldPtr field) : field_(std::move(field)) {}

Poly::Poly(FieldPtr field, std::vector<Rep> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  normalize();
}

Poly Poly::constant(FieldPtr field, const FieldElement& c) {
  return Poly(std::move(field), {c.rep()});
}

Poly Poly::monomial(FieldPtr field, const FieldElement& c, std::size_t degree) {
  std::vector<Rep> coeffs(degree + 1, 0);
  coeffs[degree] = c.rep();
  return Poly(std::move(field), std::move(coeffs));
}

Poly Poly::x(FieldPtr field) { return Poly(std::move(field), {0, 1}); }

Poly Poly::binomial(FieldPtr field, std::size_t n, const FieldElement& c) {
  std::vector<Rep> coeffs(n + 1, 0);
  coeffs[n] = 1;
  coeffs[0] = field->add(coeffs[0], field->neg(c.rep()));
  return Poly(std::move(field), std::move(coeffs));
}

Poly Poly::from_elements(FieldPtr field, const std::vector<FieldElement>& coeffs) {
  std::vector<Rep> reps;
  reps.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    if (c.field_ptr() != field.get() && !c.field().same_as(*field)) {
      throw Error(ErrorCode::kFieldMismatch, "coefficient from another field");
    }
    reps.push_back(c.rep());
  }
  return Poly(std::move(field), std::move(reps));
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Poly::check_same_field(const Poly& other) const {
  if (field_ != other.field_ && !field_->same_as(*other.field_)) {
    throw Error(ErrorCode::kFieldMismatch, "polynomials over different fields");
  }
}

FieldElement Poly::coeff(std::size_t i) const {
  return {field_.get(), i < coeffs_.size() ? coeffs_[i] : 0};
}

FieldElement Poly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::kZeroPolynomial, "zero polynomial has no leading term");
  return {field_.get(), coeffs_.back()};
}

std::size_t Poly::weight() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](Rep c) { return c != 0; }));
}

Poly Poly::operator+(const Poly& other) const {
  check_same_field(other);
  std::vector<Rep> out(std::max(coeffs_.size(), other.coeffs_.size()), 0);
  const auto& F = *field_;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Rep a = i < coeffs_.size() ? coeffs_[i] : 0;
    const Rep b = i < other.coeffs_.size() ? other.coeffs_[i] : 0;
    out[i] = F.add(a, b);
  }
  return Poly(field_, std::move(out));
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly Poly::operator-() const {
  std::vector<Rep> out(coeffs_.size());
  std::transform(coeffs_.begin(), coeffs_.end(), out.begin(),
                 [this](Rep c) { return field_->neg(c); });
  return Poly(field_, std::move(out));
}

Poly Poly::operator*(const Poly& other) const { return poly_mul(*this, other); }

Poly Poly::scaled(const FieldElement& c) const {
  std::vector<Rep> out(coeffs_.size());
  std::transform(coeffs_.begin(), coeffs_.end(), out.begin(),
                 [&](Rep x) { return field_->mul(x, c.rep()); });
  return Poly(field_, std::move(out));
}

Poly Poly::monic() const {
  if (coeffs_.empty() || coeffs_.back() == 1) return *this;
  return scaled(leading().inverse());
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly(field_);
  std::vector<Rep> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = field_->mul(coeffs_[i], field_->from_int_rep(static_cast<std::int64_t>(i % field_->p())));
  }
  return Poly(field_, std::move(out));
}

Poly poly_mul(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) {
    if (f.field_ptr() != g.field_ptr() && !f.field().same_as(g.field())) {
      throw Error(ErrorCode::kFieldMismatch, "polynomials over different fields");
    }
    return Poly(f.field_ptr());
  }
  if (f.field_ptr() != g.field_ptr() && !f.field().same_as(g.field())) {
    throw Error(ErrorCode::kFieldMismatch, "polynomials over different fields");
  }
  const auto& F = f.field();
  const auto& a = f.reps();
  const auto& b = g.reps();
  std::vector<Rep> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    }
  }
  return Poly(f.field_ptr(), std::move(out));
}

std::pair<Poly, Poly> poly_divrem(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw Error(ErrorCode::kDivisionByZeroPoly, "division by the zero polynomial");
  if (f.field_ptr() != g.field_ptr() && !f.field().same_as(g.field())) {
    throw Error(ErrorCode::kFieldMismatch, "polynomials over different fields");
  }
  const auto& F = f.field();
  if (f.degree() < g.degree()) return {Poly(f.field_ptr()), f};
  std::vector<Rep> rem = f.reps();
  const auto& d = g.reps();
  const std::size_t dg = d.size() - 1;
  const Rep lead_inv = F.inv(d.back());
  std::vector<Rep> quot(rem.size() - dg, 0);
  for (std::size_t k = rem.size(); k-- > dg;) {
    const Rep c = rem[k];
    if (c == 0) continue;
    const Rep factor = F.mul(c, lead_inv);
    quot[k - dg] = factor;
    const Rep neg_factor = F.neg(factor);
    for (std::size_t i = 0; i <= dg; ++i) {
      if (d[i] == 0) continue;
      rem[k - dg + i] = F.add(rem[k - dg + i], F.mul(neg_factor, d[i]));
    }
  }
  rem.resize(dg);
  return {Poly(f.field_ptr(), std::move(quot)), Poly(f.field_ptr(), std::move(rem))};
}

Poly poly_rem(const Poly& f, const Poly& g) { return poly_divrem(f, g).second; }

Poly poly_gcd(const Poly& f, const Poly& g) {
  Poly a = f;
  Poly b = g;
  while (!b.is_zero()) {
    Poly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly poly_pow(const Poly& f, std::uint64_t exponent) {
  Poly result = Poly::constant(f.field_ptr(), f.field().one());
  Poly base = f;
  while (exponent > 0) {
    if (exponent & 1U) result = poly_mul(result, base);
    exponent >>= 1U;
    if (exponent > 0) base = poly_mul(base, base);
  }
  return result;
}

Poly poly_mulmod(const Poly& f, const Poly& g, const Poly& modulus) {
  return poly_rem(poly_mul(f, g), modulus);
}

Poly poly_powmod(const Poly& f, std::uint64_t exponent, const Poly& modulus) {
  Poly result = poly_rem(Poly::constant(f.field_ptr(), f.field().one()), modulus);
  Poly base = poly_rem(f, modulus);
  while (exponent > 0) {
    if (exponent & 1U) result = poly_mulmod(result, base, modulus);
    exponent >>= 1U;
    if (exponent > 0) base = poly_mulmod(base, base, modulus);
  }
  return result;
}

bool divides(const Poly& divisor, const Poly& f) { return poly_rem(f, divisor).is_zero(); }

Poly substitute_scale(const Poly& f, const FieldElement& a) {
  if (a.is_zero()) throw Error(ErrorCode::kZeroScale, "substitute_scale with a = 0");
  const auto& F = f.field();
  std::vector<Rep> out(f.reps().size());
  Rep power = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = F.mul(f.reps()[i], power);
    power = F.mul(power, a.rep());
  }
  return Poly(f.field_ptr(), std::move(out));
}

FieldElement poly_eval(const Poly& f, const FieldElement& x) {
  const auto& F = f.field();
  Rep acc = 0;
  for (std::size_t i = f.reps().size(); i-- > 0;) acc = F.add(F.mul(acc, x.rep()), f.reps()[i]);
  return {f.field_ptr().get(), acc};
}

namespace {

std::string coefficient_text(const FieldElement& c, bool constant_term) {
  const auto k = discrete_log(c);
  if (k == 0) return constant_term ? "1" : "";
  if (k == 1) return "xi";
  return "xi^" + std::to_string(k);
}

}  // namespace

std::string format_poly(const Poly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = f.reps().size(); i-- > 0;) {
    if (f.reps()[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    const std::string c = coefficient_text(f.coeff(i), i == 0);
    out << c;
    if (i == 0) continue;
    if (!c.empty()) out << '*';
    out << 'X';
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

Poly parse_poly(const FieldPtr& field, std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw Error(ErrorCode::kParseError, "empty polynomial");
  std::vector<Rep> coeffs;
  const auto& F = *field;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && !((s[end] == '+' || s[end] == '-') && end > pos && s[end - 1] != '^')) {
      ++end;
    }
    const std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw Error(ErrorCode::kParseError, "empty term in '" + s + "'");
    FieldElement c = F.one();
    std::size_t degree = 0;
    const auto xpos = term.find('X');
    if (xpos == std::string::npos) {
      c = parse_element(F, term);
    } else {
      if (xpos > 0) {
        if (term[xpos - 1] != '*') throw Error(ErrorCode::kParseError, "expected '*' before X");
        c = parse_element(F, term.substr(0, xpos - 1));
      }
      degree = 1;
      if (xpos + 1 < term.size()) {
        if (term[xpos + 1] != '^') throw Error(ErrorCode::kParseError, "expected '^' after X");
        try {
          degree = std::stoul(term.substr(xpos + 2));
        } catch (const std::exception&) {
          throw Error(ErrorCode::kParseError, "bad exponent in '" + term + "'");
        }
      }
    }
    if (negative) c = -c;
    if (coeffs.size() <= degree) coeffs.resize(degree + 1, 0);
    coeffs[degree] = F.add(coeffs[degree], c.rep());
    pos = end;
  }
  return Poly(field, std::move(coeffs));
}

}  // namespace constaclass
