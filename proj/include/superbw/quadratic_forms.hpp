#pragma once

#include <cstddef>
#include <vector>

#include "superbw/fields.hpp"

namespace superbw {

// Parity of the binomial coefficient C(n, k), n, k >= 0, with C(n, k) = 0 when
// n < k. Exponents in the Wall formulas and sign powers only consume this bit.
int binomial_parity(std::int64_t n, std::int64_t k);

// A diagonal quadratic form sum a_i x_i^2 (zeros allowed). Coefficients are
// canonical field representatives: exact rationals over R, residues in [0, p)
// over F_p.
struct DiagonalQuadraticForm {
  FieldDescriptor field;
  std::vector<FieldElement> coeffs;

  static DiagonalQuadraticForm from_integers(const FieldDescriptor& field,
                                             const std::vector<std::int64_t>& values);
  std::size_t rank_upper_bound() const { return coeffs.size(); }
  std::size_t size() const { return coeffs.size(); }
  bool is_nondegenerate() const;

  friend bool operator==(const DiagonalQuadraticForm&, const DiagonalQuadraticForm&) = default;
  std::string str() const;
};

DiagonalQuadraticForm negate(const DiagonalQuadraticForm& q);
DiagonalQuadraticForm orthogonal_sum(const DiagonalQuadraticForm& q,
                                     const DiagonalQuadraticForm& r);

using GramMatrix = std::vector<std::vector<FieldElement>>;
GramMatrix gram_from_integers(const FieldDescriptor& field,
                              const std::vector<std::vector<std::int64_t>>& entries);

// Symmetric Gauss reduction of a symmetric Gram matrix to a congruent diagonal
// form, with the usual char != 2 basis trick when no diagonal pivot survives.
// Each output coefficient is well defined only up to squares.
DiagonalQuadraticForm diagonalize_gram(const FieldDescriptor& field, const GramMatrix& gram);

struct RadicalSplit {
  DiagonalQuadraticForm nondegenerate;  // nonzero coefficients, original order
  std::size_t radical_dim = 0;
};

RadicalSplit split_radical(const DiagonalQuadraticForm& q);

// Zero if any coefficient vanishes, otherwise the class of
// (-1)^C(n,2) * prod a_i.
SquareClass signed_discriminant(const DiagonalQuadraticForm& q);

}  // namespace superbw
