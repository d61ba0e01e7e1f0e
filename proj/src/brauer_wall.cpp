#include "superbw/brauer_wall.hpp"

#include <stdexcept>

namespace superbw {

std::string BWClass::str() const {
  return std::string("(") + sign_str(epsilon) + ", " + a.str() + ", " + d.str() + ")";
}

BWClass make_bw(Sign epsilon, const SquareClass& a, const BrauerClass& d) {
  if (a.field() != d.field()) throw std::invalid_argument("BW component field mismatch");
  if (a.is_zero()) throw std::invalid_argument("BW class with zero square-class component");
  return BWClass{epsilon, a, d};
}

BWClass bw_identity(const FieldDescriptor& field) {
  return BWClass{Sign::plus, SquareClass::one(field), BrauerClass::trivial(field)};
}

BWClass bw_mul(const BWClass& x, const BWClass& y) {
  if (x.field() != y.field()) throw std::invalid_argument("BW class field mismatch");
  if (x.epsilon == Sign::minus && y.epsilon == Sign::plus) return bw_mul(y, x);

  const BrauerClass dd = brauer_mul(x.d, y.d);
  if (x.epsilon == Sign::plus && y.epsilon == Sign::plus) {
    return BWClass{Sign::plus, x.a * y.a, brauer_mul(dd, hilbert_symbol(x.a, y.a))};
  }
  if (x.epsilon == Sign::plus && y.epsilon == Sign::minus) {
    return BWClass{Sign::minus, x.a * y.a, brauer_mul(dd, hilbert_symbol(x.a, y.a.negated()))};
  }
  return BWClass{Sign::plus, (x.a * y.a).negated(), brauer_mul(dd, hilbert_symbol(x.a, y.a))};
}

BWClass bw_inv(const BWClass& x) {
  if (x.epsilon == Sign::plus) {
    const SquareClass minus_one = square_class(x.field(), -1);
    return BWClass{Sign::plus, x.a, brauer_mul(x.d.inverse(), hilbert_symbol(x.a, minus_one))};
  }
  return BWClass{Sign::minus, x.a.negated(), x.d.inverse()};
}

bool odd_part_vanishes(const BWClass& x) {
  return x.epsilon == Sign::plus && x.a.is_square();
}

std::string real_division_superalgebra_name(const BWClass& x) {
  if (!x.field().is_real()) {
    throw std::invalid_argument("division superalgebra names are tabulated only over R");
  }
  const bool plus = x.epsilon == Sign::plus;
  const std::int64_t a = x.a.rep();
  const int d = x.d.rep();
  if (plus && a == 1 && d == 1) return "R";
  if (!plus && a == 1 && d == 1) return "R⊕Rε";
  if (plus && a == -1 && d == 1) return "C⊕Cε";
  if (!plus && a == -1 && d == -1) return "H⊕Hδ";
  if (plus && a == 1 && d == -1) return "H";
  if (!plus && a == 1 && d == -1) return "H⊕Hε";
  if (plus && a == -1 && d == -1) return "C⊕Cδ";
  return "R⊕Rδ";  // (-, -1, 1)
}

std::vector<BWClass> bw_real_generator_powers() {
  const FieldDescriptor field = FieldDescriptor::real();
  const BWClass generator{Sign::minus, SquareClass::one(field), BrauerClass::trivial(field)};
  std::vector<BWClass> powers{bw_identity(field)};
  for (int k = 1; k < 8; ++k) powers.push_back(bw_mul(powers.back(), generator));
  return powers;
}

std::vector<BWClass> bw_all_classes(const FieldDescriptor& field) {
  std::vector<BWClass> all;
  const SquareClass squares[] = {SquareClass::one(field), SquareClass::nonsquare(field)};
  std::vector<BrauerClass> brauer{BrauerClass::trivial(field)};
  if (field.is_real()) brauer.push_back(BrauerClass::from_rep(field, -1));
  for (Sign eps : {Sign::plus, Sign::minus}) {
    for (const SquareClass& a : squares) {
      for (const BrauerClass& d : brauer) all.push_back(BWClass{eps, a, d});
    }
  }
  return all;
}

}  // namespace superbw
