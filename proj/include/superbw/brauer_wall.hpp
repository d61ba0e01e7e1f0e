#pragma once

#include <string>
#include <vector>

#include "superbw/fields.hpp"

namespace superbw {

enum class Sign { plus, minus };

inline Sign sign_mul(Sign x, Sign y) { return x == y ? Sign::plus : Sign::minus; }
inline Sign sign_pow_minus(std::int64_t n) {
  // -^n: + for n even, - for n odd
  return (n % 2 == 0) ? Sign::plus : Sign::minus;
}
inline const char* sign_str(Sign s) { return s == Sign::plus ? "+" : "-"; }

// A Brauer-Wall class in (epsilon, a, D) coordinates. All three components
// live over the same field; the identity is (+, 1, trivial).
struct BWClass {
  Sign epsilon;
  SquareClass a;
  BrauerClass d;

  const FieldDescriptor& field() const { return a.field(); }
  friend bool operator==(const BWClass&, const BWClass&) = default;
  std::string str() const;  // "(+, 1, -1)"
};

BWClass make_bw(Sign epsilon, const SquareClass& a, const BrauerClass& d);
BWClass bw_identity(const FieldDescriptor& field);

// Wall's twisted group law:
//   (+,a,D)(+,a',D') = (+, aa', DD'(a,a'))
//   (+,a,D)(-,a',D') = (-, aa', DD'(a,-a'))
//   (-,a,D)(-,a',D') = (+,-aa', DD'(a,a'))
// The (-)•(+) case is evaluated by commutativity.
BWClass bw_mul(const BWClass& x, const BWClass& y);

// (+,a,D)^-1 = (+, a, D^-1 (a,-1));  (-,a,D)^-1 = (-, -a, D^-1).
BWClass bw_inv(const BWClass& x);

// True exactly for the classes (+, 1, D): the division superalgebra in the
// class is purely even.
bool odd_part_vanishes(const BWClass& x);

// Name of the representing real division superalgebra; rejects other fields.
std::string real_division_superalgebra_name(const BWClass& x);

// Powers (-,1,[R])^k for k = 0..7; this generator walks the whole of BW(R) in
// the order R, R(+)Re, C(+)Ce, H(+)Hd, H, H(+)He, C(+)Cd, R(+)Rd.
std::vector<BWClass> bw_real_generator_powers();

// All classes over the field: 8 over R, 4 over F_p.
std::vector<BWClass> bw_all_classes(const FieldDescriptor& field);

}  // namespace superbw
