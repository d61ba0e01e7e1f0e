#include "superbw/clifford.hpp"

#include <stdexcept>

namespace superbw {

BWClass wall_class(const DiagonalQuadraticForm& q) {
  if (!q.is_nondegenerate()) {
    throw std::invalid_argument(
        "wall_class needs a nondegenerate form; pass degenerate forms to semisimple_wall_class");
  }
  const FieldDescriptor& field = q.field;
  const std::int64_t n = static_cast<std::int64_t>(q.coeffs.size());

  std::vector<SquareClass> classes;
  classes.reserve(q.coeffs.size());
  for (const FieldElement& c : q.coeffs) classes.push_back(c.square_class());

  const Sign epsilon = sign_pow_minus(n);

  SquareClass a = SquareClass::one(field);
  for (const SquareClass& c : classes) a = a * c;
  if (binomial_parity(n, 2)) a = a.negated();

  const SquareClass minus_one = square_class(field, -1);
  BrauerClass d = BrauerClass::trivial(field);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      d = brauer_mul(d, hilbert_symbol(classes[i], classes[j]));
    }
  }
  if (n >= 1 && binomial_parity(n - 1, 2)) {
    for (const SquareClass& c : classes) d = brauer_mul(d, hilbert_symbol(minus_one, c));
  }
  if (binomial_parity(n + 1, 4)) {
    d = brauer_mul(d, hilbert_symbol(minus_one, minus_one));
  }

  return BWClass{epsilon, a, d};
}

BWClass semisimple_wall_class(const DiagonalQuadraticForm& q) {
  return wall_class(split_radical(q).nondegenerate);
}

}  // namespace superbw
