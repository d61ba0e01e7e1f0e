#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "superbw/quadratic_forms.hpp"

using namespace superbw;

namespace {

const FieldDescriptor kReal = FieldDescriptor::real();

std::vector<std::int64_t> class_multiset(const DiagonalQuadraticForm& q) {
  std::vector<std::int64_t> reps;
  for (const auto& c : q.coeffs) reps.push_back(c.square_class().rep());
  std::sort(reps.begin(), reps.end());
  return reps;
}

GramMatrix multiply(const GramMatrix& a, const GramMatrix& b, const FieldDescriptor& f) {
  const std::size_t n = a.size();
  GramMatrix out(n, std::vector<FieldElement>(n, FieldElement(f, 0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out[i][j] = out[i][j] + a[i][k] * b[k][j];
  return out;
}

GramMatrix transpose(const GramMatrix& a, const FieldDescriptor& f) {
  const std::size_t n = a.size();
  GramMatrix out(n, std::vector<FieldElement>(n, FieldElement(f, 0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[j][i];
  return out;
}

// Random invertible matrix over F_p built from row operations on the identity.
GramMatrix random_invertible(std::mt19937& rng, const FieldDescriptor& f, std::size_t n) {
  const std::int64_t p = f.prime();
  GramMatrix m(n, std::vector<FieldElement>(n, FieldElement(f, 0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = FieldElement(f, 1);
  std::uniform_int_distribution<std::size_t> row(0, n - 1);
  std::uniform_int_distribution<std::int64_t> scalar(0, p - 1);
  for (int step = 0; step < 12; ++step) {
    const std::size_t i = row(rng), j = row(rng);
    if (i == j) {
      std::int64_t c = scalar(rng);
      if (c == 0) c = 1;
      for (std::size_t k = 0; k < n; ++k) m[i][k] = m[i][k] * FieldElement(f, c);
    } else {
      const FieldElement c(f, scalar(rng));
      for (std::size_t k = 0; k < n; ++k) m[i][k] = m[i][k] + c * m[j][k];
    }
  }
  return m;
}

}  // namespace

TEST_CASE("binomial parity") {
  CHECK(binomial_parity(0, 2) == 0);
  CHECK(binomial_parity(2, 2) == 1);
  CHECK(binomial_parity(3, 2) == 1);
  CHECK(binomial_parity(4, 2) == 0);
  CHECK(binomial_parity(4, 4) == 1);
  CHECK(binomial_parity(2, 4) == 0);
  CHECK(binomial_parity(5, 4) == 1);
  // against a direct Pascal triangle
  std::vector<std::vector<std::int64_t>> pascal(12, std::vector<std::int64_t>(12, 0));
  for (int n = 0; n < 12; ++n) {
    pascal[n][0] = 1;
    for (int k = 1; k <= n; ++k)
      pascal[n][k] = pascal[n - 1][k - 1] + (k <= n - 1 ? pascal[n - 1][k] : 0);
  }
  for (int n = 0; n < 12; ++n)
    for (int k = 0; k < 12; ++k) CHECK(binomial_parity(n, k) == pascal[n][k] % 2);
}

TEST_CASE("diagonalize_gram basics") {
  const auto id3 = gram_from_integers(kReal, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(class_multiset(diagonalize_gram(kReal, id3)) == std::vector<std::int64_t>{1, 1, 1});

  // hyperbolic plane: xy has classes {+1, -1}
  const auto hyp = gram_from_integers(kReal, {{0, 1}, {1, 0}});
  CHECK(class_multiset(diagonalize_gram(kReal, hyp)) == std::vector<std::int64_t>{-1, 1});

  const auto zero3 = gram_from_integers(kReal, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  const auto dz = diagonalize_gram(kReal, zero3);
  CHECK(dz.size() == 3);
  CHECK(split_radical(dz).radical_dim == 3);

  CHECK_THROWS_AS(diagonalize_gram(kReal, gram_from_integers(kReal, {{0, 1}, {2, 0}})),
                  std::invalid_argument);
}

TEST_CASE("split_radical") {
  const auto q = DiagonalQuadraticForm::from_integers(kReal, {3, 0, -1, 0});
  const auto s = split_radical(q);
  CHECK(s.radical_dim == 2);
  CHECK(s.nondegenerate == DiagonalQuadraticForm::from_integers(kReal, {3, -1}));

  const auto f5 = FieldDescriptor::finite_prime(5);
  const auto qf = DiagonalQuadraticForm::from_integers(f5, {5, 10});
  const auto sf = split_radical(qf);
  CHECK(sf.radical_dim == 2);
  CHECK(sf.nondegenerate.size() == 0);

  const auto empty = DiagonalQuadraticForm::from_integers(kReal, {});
  CHECK(split_radical(empty).radical_dim == 0);
  CHECK(split_radical(empty).nondegenerate.size() == 0);
}

TEST_CASE("signed discriminant") {
  CHECK(signed_discriminant(DiagonalQuadraticForm::from_integers(kReal, {-1})).rep() == -1);
  CHECK(signed_discriminant(DiagonalQuadraticForm::from_integers(kReal, {1, 1})).rep() == -1);
  CHECK(signed_discriminant(DiagonalQuadraticForm::from_integers(kReal, {2, 0, 1})).is_zero());
  CHECK(signed_discriminant(DiagonalQuadraticForm::from_integers(kReal, {})).is_square());
}

TEST_CASE("split_radical is idempotent and rank-accounting") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::int64_t> coeff(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::int64_t> values(trial % 6);
    for (auto& v : values) v = coeff(rng);
    const auto q = DiagonalQuadraticForm::from_integers(kReal, values);
    const auto s = split_radical(q);
    CHECK(s.radical_dim + s.nondegenerate.size() == q.size());
    const auto again = split_radical(s.nondegenerate);
    CHECK(again.radical_dim == 0);
    CHECK(again.nondegenerate == s.nondegenerate);
  }
}

TEST_CASE("signed discriminant of an orthogonal sum") {
  // delta(q (+) q') = (-1)^{n n'} delta(q) delta(q'), nondegenerate pieces.
  for (const auto& field : {kReal, FieldDescriptor::finite_prime(3)}) {
    const std::int64_t units[] = {1, 2, -1, -2};
    std::vector<DiagonalQuadraticForm> forms;
    for (int n = 0; n <= 2; ++n) {
      std::vector<std::int64_t> values(n, 1);
      // all unit patterns of length n
      const int patterns = n == 0 ? 1 : (n == 1 ? 4 : 16);
      for (int pat = 0; pat < patterns; ++pat) {
        int x = pat;
        for (int i = 0; i < n; ++i) {
          values[i] = units[x % 4];
          x /= 4;
        }
        auto q = DiagonalQuadraticForm::from_integers(field, values);
        if (q.is_nondegenerate()) forms.push_back(q);
      }
    }
    for (const auto& q : forms) {
      for (const auto& r : forms) {
        SquareClass expected = signed_discriminant(q) * signed_discriminant(r);
        if ((q.size() * r.size()) % 2 == 1) expected = expected.negated();
        CHECK(signed_discriminant(orthogonal_sum(q, r)) == expected);
      }
    }
  }
}

TEST_CASE("congruence invariance of rank and signed discriminant over F_p") {
  std::mt19937 rng(11);
  for (std::int64_t p : {3, 5}) {
    const auto f = FieldDescriptor::finite_prime(p);
    std::uniform_int_distribution<std::int64_t> entry(0, p - 1);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 1 + trial % 4;
      std::vector<std::vector<std::int64_t>> sym(n, std::vector<std::int64_t>(n, 0));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) sym[i][j] = sym[j][i] = entry(rng);
      const GramMatrix g = gram_from_integers(f, sym);
      const GramMatrix pmat = random_invertible(rng, f, n);
      const GramMatrix twisted = multiply(multiply(transpose(pmat, f), g, f), pmat, f);

      const auto d1 = split_radical(diagonalize_gram(f, g));
      const auto d2 = split_radical(diagonalize_gram(f, twisted));
      CHECK(d1.nondegenerate.size() == d2.nondegenerate.size());
      CHECK(signed_discriminant(d1.nondegenerate) == signed_discriminant(d2.nondegenerate));
    }
  }
}

namespace {

// Independent rank by plain row elimination, no congruence steps.
std::size_t row_rank(GramMatrix m) {
  const std::size_t n = m.size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      const FieldElement c = m[r][col] / m[rank][col];
      for (std::size_t k = 0; k < n; ++k) m[r][k] = m[r][k] - c * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("diagonalization preserves the matrix rank") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<std::int64_t> entry(-3, 3);
  for (const auto& field : {kReal, FieldDescriptor::finite_prime(3),
                            FieldDescriptor::finite_prime(5)}) {
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t n = 1 + trial % 5;
      std::vector<std::vector<std::int64_t>> sym(n, std::vector<std::int64_t>(n, 0));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) sym[i][j] = sym[j][i] = entry(rng);
      const GramMatrix g = gram_from_integers(field, sym);
      const auto diag = diagonalize_gram(field, g);
      CHECK(split_radical(diag).nondegenerate.size() == row_rank(g));
    }
  }
}

TEST_CASE("diagonal input is a fixed point at class level") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::int64_t> coeff(-5, 5);
  for (const auto& field : {kReal, FieldDescriptor::finite_prime(7)}) {
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = trial % 5;
      std::vector<std::vector<std::int64_t>> entries(n, std::vector<std::int64_t>(n, 0));
      std::vector<std::int64_t> diag(n);
      for (std::size_t i = 0; i < n; ++i) {
        diag[i] = coeff(rng);
        entries[i][i] = diag[i];
      }
      const auto direct = DiagonalQuadraticForm::from_integers(field, diag);
      const auto reduced = diagonalize_gram(field, gram_from_integers(field, entries));
      CHECK(class_multiset(reduced) == class_multiset(direct));
    }
  }
}
