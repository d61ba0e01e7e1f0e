#pragma once

#include <vector>

#include "superbw/brauer_wall.hpp"
#include "superbw/quadratic_forms.hpp"

namespace superbw::oracle {

// Explicit 2^n-dimensional Clifford superalgebra from structure constants:
// basis e_S indexed by subsets S of {1..n}, e_i e_j = -e_j e_i for i != j,
// e_i^2 = a_i. Ground truth for the (epsilon, a) Wall components, independent
// of the formula route. Desk scale: rank <= 4.
class StructureAlgebra {
 public:
  using Element = std::vector<FieldElement>;  // coefficients indexed by subset mask

  explicit StructureAlgebra(const DiagonalQuadraticForm& q);

  int generators() const { return n_; }
  std::size_t dim() const { return std::size_t(1) << n_; }
  int parity(unsigned mask) const { return __builtin_popcount(mask) % 2; }
  const FieldDescriptor& field() const { return field_; }

  Element zero_element() const;
  Element basis_element(unsigned mask) const;
  Element mul(const Element& x, const Element& y) const;
  Element sub(const Element& x, const Element& y) const;
  bool is_zero(const Element& x) const;

 private:
  void check_associativity() const;

  FieldDescriptor field_;
  int n_;
  std::vector<FieldElement> coeffs_;
  // mult_table_[S][T] = (c, U) with e_S e_T = c e_U
  std::vector<std::vector<std::pair<FieldElement, unsigned>>> table_;
};

// + iff the ungraded center of C(q) is one dimensional.
Sign brute_epsilon(const DiagonalQuadraticForm& q);

// Square class of u^2 for the canonical trace-zero u: u spans the odd
// centralizer of the even part when epsilon = -, and the non-scalar part of
// the center of the even part when epsilon = +.
SquareClass brute_a(const DiagonalQuadraticForm& q);

}  // namespace superbw::oracle
