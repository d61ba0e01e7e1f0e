#include "superbw/quadratic_forms.hpp"

#include <stdexcept>

namespace superbw {

int binomial_parity(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) throw std::invalid_argument("binomial_parity expects nonnegative arguments");
  if (n < k) return 0;
  // Kummer: C(n, k) is odd iff adding k and n-k in base 2 carries nowhere.
  return ((k & (n - k)) == 0) ? 1 : 0;
}

DiagonalQuadraticForm DiagonalQuadraticForm::from_integers(
    const FieldDescriptor& field, const std::vector<std::int64_t>& values) {
  DiagonalQuadraticForm q{field, {}};
  q.coeffs.reserve(values.size());
  for (std::int64_t v : values) q.coeffs.emplace_back(field, v);
  return q;
}

bool DiagonalQuadraticForm::is_nondegenerate() const {
  for (const FieldElement& c : coeffs) {
    if (c.is_zero()) return false;
  }
  return true;
}

std::string DiagonalQuadraticForm::str() const {
  std::string out = "diag(";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ",";
    out += coeffs[i].str();
  }
  return out + ")";
}

DiagonalQuadraticForm negate(const DiagonalQuadraticForm& q) {
  DiagonalQuadraticForm out{q.field, {}};
  out.coeffs.reserve(q.coeffs.size());
  for (const FieldElement& c : q.coeffs) out.coeffs.push_back(-c);
  return out;
}

DiagonalQuadraticForm orthogonal_sum(const DiagonalQuadraticForm& q,
                                     const DiagonalQuadraticForm& r) {
  if (q.field != r.field) throw std::invalid_argument("orthogonal sum field mismatch");
  DiagonalQuadraticForm out = q;
  out.coeffs.insert(out.coeffs.end(), r.coeffs.begin(), r.coeffs.end());
  return out;
}

GramMatrix gram_from_integers(const FieldDescriptor& field,
                              const std::vector<std::vector<std::int64_t>>& entries) {
  GramMatrix gram;
  gram.reserve(entries.size());
  for (const auto& row : entries) {
    std::vector<FieldElement> out;
    out.reserve(row.size());
    for (std::int64_t v : row) out.emplace_back(field, v);
    gram.push_back(std::move(out));
  }
  return gram;
}

DiagonalQuadraticForm diagonalize_gram(const FieldDescriptor& field, const GramMatrix& gram) {
  const std::size_t n = gram.size();
  for (const auto& row : gram) {
    if (row.size() != n) throw std::invalid_argument("gram matrix is not square");
  }
  GramMatrix g = gram;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(g[i][j] == g[j][i])) throw std::invalid_argument("gram matrix is not symmetric");
    }
  }

  const FieldElement zero(field, 0);
  std::vector<FieldElement> diag;
  diag.reserve(n);

  // Row-then-column congruence steps; the column pass reuses the updated row,
  // which is exactly what keeps the matrix symmetric.
  for (std::size_t k = 0; k < n; ++k) {
    // Find a pivot on the diagonal at or below k.
    std::size_t pivot = k;
    while (pivot < n && g[pivot][pivot].is_zero()) ++pivot;
    if (pivot < n) {
      std::swap(g[pivot], g[k]);
      for (std::size_t r = 0; r < n; ++r) std::swap(g[r][pivot], g[r][k]);
    } else {
      // No diagonal pivot; look for an off-diagonal entry g[i][j] != 0 with
      // i, j >= k and merge: b_i <- b_i + b_j makes the (i,i) entry 2 g[i][j].
      std::size_t fi = n, fj = n;
      for (std::size_t i = k; i < n && fi == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (!g[i][j].is_zero()) {
            fi = i;
            fj = j;
            break;
          }
        }
      }
      if (fi == n) {
        // Everything remaining is zero: the rest of the radical.
        for (std::size_t r = k; r < n; ++r) diag.push_back(zero);
        break;
      }
      for (std::size_t c = 0; c < n; ++c) g[fi][c] = g[fi][c] + g[fj][c];
      for (std::size_t r = 0; r < n; ++r) g[r][fi] = g[r][fi] + g[r][fj];
      std::swap(g[fi], g[k]);
      for (std::size_t r = 0; r < n; ++r) std::swap(g[r][fi], g[r][k]);
    }

    const FieldElement d = g[k][k];
    if (d.is_zero()) {
      diag.push_back(zero);
      continue;
    }
    // Clear row/column k below the pivot: b_j <- b_j - (g[j][k]/d) b_k.
    for (std::size_t j = k + 1; j < n; ++j) {
      if (g[j][k].is_zero()) continue;
      const FieldElement c = g[j][k] / d;
      for (std::size_t col = 0; col < n; ++col) g[j][col] = g[j][col] - c * g[k][col];
      for (std::size_t row = 0; row < n; ++row) g[row][j] = g[row][j] - c * g[row][k];
    }
    diag.push_back(d);
  }

  while (diag.size() < n) diag.push_back(zero);
  return DiagonalQuadraticForm{field, std::move(diag)};
}

RadicalSplit split_radical(const DiagonalQuadraticForm& q) {
  RadicalSplit out{DiagonalQuadraticForm{q.field, {}}, 0};
  for (const FieldElement& c : q.coeffs) {
    if (c.is_zero()) {
      ++out.radical_dim;
    } else {
      out.nondegenerate.coeffs.push_back(c);
    }
  }
  return out;
}

SquareClass signed_discriminant(const DiagonalQuadraticForm& q) {
  SquareClass acc = SquareClass::one(q.field);
  for (const FieldElement& c : q.coeffs) {
    if (c.is_zero()) return SquareClass::zero(q.field);
    acc = acc * c.square_class();
  }
  const std::int64_t n = static_cast<std::int64_t>(q.coeffs.size());
  if (binomial_parity(n, 2)) acc = acc.negated();
  return acc;
}

}  // namespace superbw
