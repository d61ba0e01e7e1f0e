#include "superbw/fields.hpp"

#include <charconv>
#include <stdexcept>

namespace superbw {

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::int64_t reduce_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

}  // namespace

FieldDescriptor FieldDescriptor::finite_prime(std::int64_t p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw std::invalid_argument("finite field characteristic must be an odd prime >= 3, got " +
                                std::to_string(p));
  }
  return FieldDescriptor(p);
}

std::int64_t FieldDescriptor::prime() const {
  if (!is_finite()) throw std::logic_error("prime() called on R");
  return p_;
}

std::string FieldDescriptor::str() const {
  return is_real() ? "R" : "Fp:" + std::to_string(p_);
}

FieldDescriptor FieldDescriptor::parse(std::string_view text) {
  if (text == "R") return real();
  constexpr std::string_view prefix = "Fp:";
  if (text.substr(0, prefix.size()) == prefix) {
    std::int64_t p = 0;
    const char* first = text.data() + prefix.size();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec == std::errc() && ptr == last) return finite_prime(p);
  }
  throw std::invalid_argument("bad field '" + std::string(text) + "' (expected R or Fp:<prime>)");
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  std::int64_t result = 1 % mod;
  std::int64_t b = reduce_mod(base, mod);
  while (exp > 0) {
    if (exp & 1) result = (result * b) % mod;
    b = (b * b) % mod;
    exp >>= 1;
  }
  return result;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  const std::int64_t r = reduce_mod(a, p);
  if (r == 0) throw std::domain_error("no inverse of 0 mod " + std::to_string(p));
  return mod_pow(r, p - 2, p);
}

namespace {

// Least positive quadratic nonresidue mod p; deterministic canonical rep.
std::int64_t least_nonresidue(std::int64_t p) {
  for (std::int64_t r = 2; r < p; ++r) {
    if (mod_pow(r, (p - 1) / 2, p) == p - 1) return r;
  }
  throw std::logic_error("no quadratic nonresidue mod " + std::to_string(p));
}

}  // namespace

SquareClass SquareClass::nonsquare(const FieldDescriptor& field) {
  return SquareClass(field, field.is_real() ? -1 : least_nonresidue(field.prime()));
}

SquareClass SquareClass::operator*(const SquareClass& other) const {
  if (field_ != other.field_) throw std::invalid_argument("square class field mismatch");
  if (is_zero() || other.is_zero()) return zero(field_);
  // Both classes square to the identity, so equal reps multiply to 1.
  return rep_ == other.rep_ ? one(field_) : nonsquare(field_);
}

SquareClass SquareClass::negated() const {
  if (is_zero()) return *this;
  return square_class(field_, -1) * *this;
}

SquareClass square_class(const FieldDescriptor& field, std::int64_t a) {
  if (field.is_real()) {
    return SquareClass(field, a > 0 ? 1 : (a < 0 ? -1 : 0));
  }
  const std::int64_t p = field.prime();
  const std::int64_t r = ((a % p) + p) % p;
  if (r == 0) return SquareClass::zero(field);
  return mod_pow(r, (p - 1) / 2, p) == 1 ? SquareClass::one(field) : SquareClass::nonsquare(field);
}

BrauerClass BrauerClass::from_rep(const FieldDescriptor& field, int rep) {
  if (rep == 1) return trivial(field);
  if (rep == -1 && field.is_real()) return BrauerClass(field, -1);
  throw std::invalid_argument("no Brauer class with representative " + std::to_string(rep) +
                              " over " + field.str());
}

BrauerClass hilbert_symbol(const SquareClass& a, const SquareClass& b) {
  if (a.field() != b.field()) throw std::invalid_argument("hilbert symbol field mismatch");
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("hilbert symbol of a zero class");
  const FieldDescriptor& field = a.field();
  if (field.is_finite()) return BrauerClass::trivial(field);
  // (a, b) = [H] over R exactly when both arguments are negative.
  const bool both_negative = a.rep() == -1 && b.rep() == -1;
  return BrauerClass::from_rep(field, both_negative ? -1 : 1);
}

BrauerClass brauer_mul(const BrauerClass& x, const BrauerClass& y) {
  if (x.field() != y.field()) throw std::invalid_argument("Brauer class field mismatch");
  return BrauerClass::from_rep(x.field(), x.rep() * y.rep());
}

FieldElement::FieldElement(const FieldDescriptor& field, std::int64_t value)
    : field_(field), value_(value) {
  canonicalize();
}

FieldElement::FieldElement(const FieldDescriptor& field, const Rational& value)
    : field_(field), value_(value) {
  canonicalize();
}

void FieldElement::canonicalize() {
  if (field_.is_real()) return;
  const std::int64_t p = field_.prime();
  std::int64_t num = reduce_mod(value_.num(), p);
  if (value_.den() != 1) num = (num * mod_inverse(value_.den(), p)) % p;
  value_ = Rational(num);
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  if (field_ != o.field_) throw std::invalid_argument("field element mismatch");
  return FieldElement(field_, value_ + o.value_);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  if (field_ != o.field_) throw std::invalid_argument("field element mismatch");
  return FieldElement(field_, value_ - o.value_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  if (field_ != o.field_) throw std::invalid_argument("field element mismatch");
  return FieldElement(field_, value_ * o.value_);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  if (field_ != o.field_) throw std::invalid_argument("field element mismatch");
  if (o.is_zero()) throw std::domain_error("field element division by zero");
  if (field_.is_real()) return FieldElement(field_, value_ / o.value_);
  const std::int64_t p = field_.prime();
  return FieldElement(field_, (value_.num() * mod_inverse(o.value_.num(), p)) % p);
}

FieldElement FieldElement::operator-() const { return FieldElement(field_, -value_); }

SquareClass FieldElement::square_class() const {
  if (field_.is_real()) {
    return superbw::square_class(field_, value_.sign());
  }
  return superbw::square_class(field_, value_.num());
}

std::int64_t FieldElement::residue() const {
  if (!field_.is_finite()) throw std::logic_error("residue() called on a real element");
  return value_.num();
}

}  // namespace superbw
