#include <gtest/gtest.h>

#include <random>

#include "invform/error.hpp"
#include "invform/matrix.hpp"
#include "test_support.hpp"

using namespace invform;
using namespace invform::testing;

namespace {

const Field kQ = Field::rationals();

Scalar q(long a, long b = 1) { return Scalar(kQ, mpq_class(a, b)); }

// Faddeev-LeVerrier: c_{n-k} = -tr(A M_k) / k with M_1 = I,
// M_{k+1} = A M_k + c_{n-k} I. Needs char 0 or char > n.
Poly faddeev_leverrier(const Matrix& a) {
  const std::size_t n = a.rows();
  const Field& f = a.field();
  std::vector<Scalar> c(n + 1, Scalar::zero(f));
  c[n] = Scalar::one(f);
  Matrix m = Matrix::identity(f, n);
  for (std::size_t k = 1; k <= n; ++k) {
    const Matrix am = a * m;
    Scalar tr = Scalar::zero(f);
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Scalar(f, static_cast<long>(k));
    m = am + Matrix::identity(f, n) * c[n - k];
  }
  return Poly(f, c);
}

}  // namespace

TEST(Matrix, DetExamples) {
  EXPECT_EQ(det(Matrix::identity(kQ, 3)), q(1));
  EXPECT_EQ(det(Matrix::from_ints(kQ, {{0, 1}, {1, 0}})), q(-1));
  const Matrix b = Matrix::from_rows(kQ, {{q(0), q(1, 2), q(1)}, {q(1, 2), q(-1), q(0)}, {q(1), q(0), q(0)}});
  EXPECT_EQ(det(b), q(1));
  EXPECT_EQ(cofactor_det(b), q(1));
  try {
    (void)det(Matrix(kQ, 2, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSquare);
  }
}

TEST(Matrix, DetMatchesCofactorAndIsMultiplicative) {
  std::mt19937_64 rng(31);
  for (const Field& f : {kQ, Field::prime(101), Field::prime(3)}) {
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 1 + trial % 4;
      const Matrix a = random_matrix(f, n, n, rng);
      const Matrix b = random_matrix(f, n, n, rng);
      EXPECT_EQ(det(a), cofactor_det(a));
      EXPECT_EQ(det(a * b), det(a) * det(b));
    }
  }
}

TEST(Matrix, InverseRoundTrip) {
  std::mt19937_64 rng(37);
  for (const Field& f : {kQ, Field::prime(257)}) {
    for (int trial = 0; trial < 40; ++trial) {
      const Matrix g = random_invertible(f, 1 + trial % 6, rng);
      EXPECT_TRUE((g * inverse(g)).is_identity());
    }
  }
  try {
    (void)inverse(Matrix::from_ints(kQ, {{1, 1}, {2, 2}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Singular);
  }
}

TEST(Matrix, SolveLinearExamples) {
  const auto r1 = solve_linear(Matrix::identity(kQ, 2), {q(1), q(2)});
  ASSERT_TRUE(r1.particular.has_value());
  EXPECT_EQ(*r1.particular, (Vector{q(1), q(2)}));
  EXPECT_TRUE(r1.kernel_basis.empty());

  const Matrix a = Matrix::from_ints(kQ, {{1, 1}, {2, 2}});
  const auto r2 = solve_linear(a, {q(0), q(0)});
  ASSERT_EQ(r2.kernel_basis.size(), 1u);
  EXPECT_EQ(r2.kernel_basis[0], (Vector{q(1), q(-1)}));

  EXPECT_FALSE(solve_linear(a, {q(1), q(0)}).particular.has_value());
  EXPECT_THROW((void)solve_linear(a, {Scalar(Field::prime(5), 1L), Scalar(Field::prime(5), 1L)}), Error);
}

TEST(Matrix, SolveLinearRandom) {
  std::mt19937_64 rng(41);
  for (const Field& f : {kQ, Field::prime(101)}) {
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t r = 1 + trial % 5, c = 1 + (trial / 5) % 5;
      Matrix a = random_matrix(f, r, c, rng, 2);
      if (trial % 3 == 0 && r > 1) {
        for (std::size_t j = 0; j < c; ++j) a(r - 1, j) = a(0, j) + a(0, j);
      }
      const Vector x0 = random_matrix(f, c, 1, rng).col(0);
      const Vector b = a * x0;
      const auto res = solve_linear(a, b);
      ASSERT_TRUE(res.particular.has_value());
      EXPECT_EQ(a * *res.particular, b);
      EXPECT_EQ(res.kernel_basis.size(), c - rank(a));
      for (const auto& v : res.kernel_basis) {
        for (const auto& x : a * v) EXPECT_TRUE(x.is_zero());
      }
      if (!res.kernel_basis.empty()) {
        const Matrix k = Matrix::from_rows(f, res.kernel_basis);
        EXPECT_EQ(rref(k).reduced, k);
      }
    }
  }
}

TEST(Matrix, CharPolyExamples) {
  EXPECT_EQ(char_poly(Matrix::identity(kQ, 3)), Poly::from_ints(kQ, {-1, 1}).pow(3));
  const Poly p = Poly::from_ints(kQ, {1, -3, 1});
  EXPECT_EQ(char_poly(companion(p)), p);
  EXPECT_EQ(char_poly(Matrix::from_ints(kQ, {{1, 1}, {0, 1}})), Poly::from_ints(kQ, {-1, 1}).pow(2));
  EXPECT_EQ(char_poly(Matrix::from_ints(kQ, {{0, 0}, {0, 0}})), Poly::monomial(q(1), 2));
}

TEST(Matrix, CharPolyAgreesWithFaddeevLeVerrier) {
  std::mt19937_64 rng(43);
  for (const Field& f : {kQ, Field::prime(101)}) {
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 1 + trial % 5;
      Matrix a = random_matrix(f, n, n, rng);
      if (trial % 4 == 0) a = Matrix(f, n, n);
      EXPECT_EQ(char_poly(a), faddeev_leverrier(a)) << a;
    }
  }
}

TEST(Matrix, CayleyHamilton) {
  std::mt19937_64 rng(47);
  for (const Field& f : {kQ, Field::prime(101), Field::prime(2)}) {
    for (int trial = 0; trial < 100; ++trial) {
      const Matrix a = random_matrix(f, 1 + trial % 6, 1 + trial % 6, rng);
      EXPECT_TRUE(eval_poly(char_poly(a), a).is_zero());
    }
  }
}

TEST(Matrix, CompanionConvention) {
  const Poly p = Poly::from_ints(kQ, {5, -2, 3, 1});
  const Matrix c = companion(p);
  EXPECT_EQ(c(1, 0), q(1));
  EXPECT_EQ(c(2, 1), q(1));
  EXPECT_EQ(c(0, 2), q(-5));
  EXPECT_EQ(c(2, 2), q(-3));
}
