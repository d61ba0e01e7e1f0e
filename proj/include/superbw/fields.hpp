#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "superbw/rational.hpp"

namespace superbw {

// Base field descriptor: R or F_p with p an odd prime (characteristic two is
// excluded throughout).
class FieldDescriptor {
 public:
  static FieldDescriptor real() { return FieldDescriptor(0); }
  // Throws std::invalid_argument unless p is prime and p >= 3.
  static FieldDescriptor finite_prime(std::int64_t p);

  bool is_real() const { return p_ == 0; }
  bool is_finite() const { return p_ != 0; }
  std::int64_t prime() const;

  // "R" or "Fp:<prime>"; parse accepts exactly these.
  std::string str() const;
  static FieldDescriptor parse(std::string_view text);

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;

 private:
  explicit FieldDescriptor(std::int64_t p) : p_(p) {}
  std::int64_t p_ = 0;  // 0 encodes R
};

// An element of F^x/(F^x)^2 together with a distinguished Zero used for
// vanishing signed discriminants. Canonical representatives: over R the class
// is +1 or -1, over F_p it is 1 or the least positive quadratic nonresidue.
class SquareClass {
 public:
  static SquareClass zero(const FieldDescriptor& field) { return SquareClass(field, 0); }
  static SquareClass one(const FieldDescriptor& field) { return SquareClass(field, 1); }
  static SquareClass nonsquare(const FieldDescriptor& field);

  bool is_zero() const { return rep_ == 0; }
  bool is_square() const { return rep_ == 1; }
  std::int64_t rep() const { return rep_; }
  const FieldDescriptor& field() const { return field_; }

  // Class multiplication; Zero absorbs.
  SquareClass operator*(const SquareClass& other) const;
  SquareClass negated() const;  // class of (-1) * this

  friend bool operator==(const SquareClass&, const SquareClass&) = default;
  std::string str() const { return std::to_string(rep_); }

 private:
  friend SquareClass square_class(const FieldDescriptor&, std::int64_t);
  SquareClass(const FieldDescriptor& field, std::int64_t rep) : field_(field), rep_(rep) {}

  FieldDescriptor field_;
  std::int64_t rep_;  // 0 = Zero; otherwise the canonical representative
};

// Canonical square class of an integer (interpreted mod p over F_p).
SquareClass square_class(const FieldDescriptor& field, std::int64_t a);

// Br(F) restricted to the supported fields: {[R],[H]} ~ {+1,-1} over R, the
// trivial group over F_p. Every element is 2-torsion.
class BrauerClass {
 public:
  static BrauerClass trivial(const FieldDescriptor& field) { return BrauerClass(field, 1); }
  // +1 or -1; -1 is rejected over finite fields.
  static BrauerClass from_rep(const FieldDescriptor& field, int rep);

  int rep() const { return rep_; }
  bool is_trivial() const { return rep_ == 1; }
  const FieldDescriptor& field() const { return field_; }
  BrauerClass inverse() const { return *this; }  // 2-torsion

  friend bool operator==(const BrauerClass&, const BrauerClass&) = default;
  std::string str() const { return std::to_string(rep_); }

 private:
  BrauerClass(const FieldDescriptor& field, int rep) : field_(field), rep_(rep) {}

  FieldDescriptor field_;
  int rep_;
};

// Brauer class of the quaternion algebra (a, b). Zero classes are rejected.
BrauerClass hilbert_symbol(const SquareClass& a, const SquareClass& b);

BrauerClass brauer_mul(const BrauerClass& x, const BrauerClass& y);

// Exact field element: a rational over R, a residue in [0, p) over F_p.
class FieldElement {
 public:
  FieldElement(const FieldDescriptor& field, std::int64_t value);
  FieldElement(const FieldDescriptor& field, const Rational& value);

  const FieldDescriptor& field() const { return field_; }
  bool is_zero() const { return value_.is_zero(); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;

  SquareClass square_class() const;
  const Rational& value() const { return value_; }
  std::int64_t residue() const;  // F_p only

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  std::string str() const { return value_.str(); }

 private:
  void canonicalize();

  FieldDescriptor field_;
  Rational value_;
};

// a^((p-1)/2) style residue helpers, shared with tests.
std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod);
std::int64_t mod_inverse(std::int64_t a, std::int64_t p);

}  // namespace superbw
