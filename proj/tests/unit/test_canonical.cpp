#include <gtest/gtest.h>

#include <random>

#include "invform/canonical.hpp"
#include "invform/error.hpp"
#include "test_support.hpp"

using namespace invform;
using namespace invform::testing;

namespace {

const Field kQ = Field::rationals();

Scalar q(long a, long b = 1) { return Scalar(kQ, mpq_class(a, b)); }
Poly P(const Field& f, std::initializer_list<long> c) { return Poly::from_ints(f, c); }

// Block-diagonal matrix from Jordan/companion data with known divisors.
Matrix structured(const Field& f, std::mt19937_64& rng, std::size_t max_n) {
  std::vector<Matrix> blocks;
  std::size_t n = 0;
  std::uniform_int_distribution<int> kind(0, 3);
  while (n < max_n) {
    Matrix b;
    switch (kind(rng)) {
      case 0: b = jordan_block(f, 1 + rng() % 3, 1); break;
      case 1: b = jordan_block(f, 1 + rng() % 2, -1); break;
      case 2: b = companion(P(f, {1, -3, 1})); break;
      default: b = jordan_block(f, 1 + rng() % 2, 2); break;
    }
    if (n + b.rows() > max_n) b = jordan_block(f, max_n - n, 3);
    n += b.rows();
    blocks.push_back(b);
  }
  return block_diagonal(f, blocks);
}

// All monic divisors of prod p_i^e_i.
std::vector<Poly> divisors_of(const Factorization& fac) {
  const Field& f = fac.unit.field();
  std::vector<Poly> out{Poly::constant(Scalar::one(f))};
  for (const auto& [p, e] : fac.factors) {
    std::vector<Poly> next;
    for (const auto& d : out) {
      Poly acc = d;
      for (unsigned i = 0; i <= e; ++i) {
        next.push_back(acc);
        acc *= p;
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST(Smith, Examples) {
  const auto a = smith_normal_form_xI_minus_T(Matrix::from_ints(kQ, {{1, 1}, {0, 1}}));
  ASSERT_EQ(a.size(), 2u);
  EXPECT_TRUE(a[0].is_one());
  EXPECT_EQ(a[1], P(kQ, {-1, 1}).pow(2));

  const auto b = smith_normal_form_xI_minus_T(Matrix::identity(kQ, 2));
  EXPECT_EQ(b[0], P(kQ, {-1, 1}));
  EXPECT_EQ(b[1], P(kQ, {-1, 1}));

  const Field f7 = Field::prime(7);
  const auto c = smith_normal_form_xI_minus_T(Matrix::from_ints(f7, {{2, 0}, {0, 3}}));
  EXPECT_TRUE(c[0].is_one());
  EXPECT_EQ(c[1], P(f7, {-2, 1}) * P(f7, {-3, 1}));
}

TEST(Smith, InvariantFactorsDivideAndMultiplyToChi) {
  std::mt19937_64 rng(53);
  for (const Field& f : {kQ, Field::prime(101)}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 1 + trial % 6;
      const Matrix t = trial % 2 ? random_matrix(f, n, n, rng) : conjugate(random_invertible(f, n, rng), structured(f, rng, n));
      const auto d = smith_normal_form_xI_minus_T(t);
      Poly prod = Poly::constant(Scalar::one(f));
      for (std::size_t i = 0; i < d.size(); ++i) {
        EXPECT_TRUE(d[i].is_monic());
        if (i + 1 < d.size()) EXPECT_TRUE(divides(d[i], d[i + 1]));
        prod *= d[i];
      }
      EXPECT_EQ(prod, char_poly(t));
    }
  }
}

TEST(MinPoly, IsMinimal) {
  std::mt19937_64 rng(59);
  for (const Field& f : {kQ, Field::prime(101)}) {
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = 1 + trial % 6;
      const Matrix t = conjugate(random_invertible(f, n, rng), structured(f, rng, n));
      const Poly m = min_poly(t);
      EXPECT_TRUE(divides(m, char_poly(t)));
      EXPECT_TRUE(eval_poly(m, t).is_zero());
      for (const Poly& d : divisors_of(factor(m))) {
        if (d.degree() < m.degree()) EXPECT_FALSE(eval_poly(d, t).is_zero()) << d;
      }
    }
  }
  EXPECT_EQ(min_poly(Matrix::identity(kQ, 3)), P(kQ, {-1, 1}));
}

TEST(ElementaryDivisors, Examples) {
  const auto a = elementary_divisors(Matrix::identity(kQ, 3));
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0], (ElementaryDivisor{P(kQ, {-1, 1}), 1, 3}));

  const auto b = elementary_divisors(Matrix::from_ints(kQ, {{1, 1}, {0, 1}}));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0], (ElementaryDivisor{P(kQ, {-1, 1}), 2, 1}));

  const Matrix c = companion(P(kQ, {1, -3, 1}));
  const auto d = elementary_divisors(block_diagonal(kQ, {c, c}));
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0], (ElementaryDivisor{P(kQ, {1, -3, 1}), 1, 2}));
}

TEST(ElementaryDivisors, ConjugationInvariantAndReconstructChi) {
  std::mt19937_64 rng(61);
  for (const Field& f : {kQ, Field::prime(101)}) {
    const Matrix t = structured(f, rng, 6);
    const auto base = elementary_divisors(t);
    Poly prod = Poly::constant(Scalar::one(f));
    std::size_t dim = 0;
    for (const auto& e : base) {
      prod *= e.p.pow(e.k * e.multiplicity);
      dim += e.dimension() * e.multiplicity;
    }
    EXPECT_EQ(prod, char_poly(t));
    EXPECT_EQ(dim, t.rows());
    for (int i = 0; i < 50; ++i) {
      EXPECT_EQ(elementary_divisors(conjugate(random_invertible(f, t.rows(), rng), t)), base);
    }
  }
}

TEST(PrimaryDecomposition, Examples) {
  const Matrix t = Matrix::diagonal(kQ, {q(1), q(-1), q(2), q(1, 2)});
  const PrimaryDecomposition a = primary_decomposition(t);
  EXPECT_EQ(a.e, 1u);
  EXPECT_EQ(a.f, 1u);
  EXPECT_EQ(a.chi_o, Poly::linear(q(2)) * Poly::linear(q(1, 2)));
  EXPECT_EQ(a.t_o.rows(), 2u);

  const PrimaryDecomposition b = primary_decomposition(jordan_block(kQ, 3, 1));
  EXPECT_EQ(b.e, 3u);
  EXPECT_EQ(b.basis_o.cols(), 0u);
  EXPECT_TRUE(b.chi_o.is_one());

  const PrimaryDecomposition c = primary_decomposition(companion(P(kQ, {1, -3, 1})));
  EXPECT_EQ(c.e + c.f, 0u);
  EXPECT_EQ(c.basis_o.cols(), 2u);
  EXPECT_EQ(char_poly(c.t_o), P(kQ, {1, -3, 1}));

  try {
    (void)primary_decomposition(Matrix::from_ints(kQ, {{0, 1}, {0, 0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Singular);
  }
  EXPECT_THROW((void)primary_decomposition(Matrix::identity(Field::prime(2), 2)), Error);
}

TEST(PrimaryDecomposition, RandomConjugates) {
  std::mt19937_64 rng(67);
  for (const Field& f : {kQ, Field::prime(257)}) {
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix t = conjugate(random_invertible(f, 6, rng), structured(f, rng, 6));
      const PrimaryDecomposition d = primary_decomposition(t);
      const Matrix id = Matrix::identity(f, 6);
      EXPECT_TRUE(((t - id).pow(d.e) * d.basis_plus).is_zero());
      EXPECT_TRUE(((t + id).pow(d.f) * d.basis_minus).is_zero());
      EXPECT_EQ(t * d.basis_o, d.basis_o * d.t_o);
      EXPECT_FALSE(d.chi_o.eval(Scalar::one(f)).is_zero());
      EXPECT_FALSE(d.chi_o.eval(-Scalar::one(f)).is_zero());
    }
  }
}

TEST(Indecomposable, Examples) {
  const auto a = indecomposable_decomposition(Matrix::from_ints(kQ, {{1, 1}, {0, 1}}));
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].basis.cols(), 2u);

  EXPECT_EQ(indecomposable_decomposition(Matrix::from_ints(kQ, {{2, 0}, {0, 3}})).size(), 2u);

  const Matrix j2 = jordan_block(kQ, 2, 1);
  const auto c = indecomposable_decomposition(block_diagonal(kQ, {j2, j2}));
  ASSERT_EQ(c.size(), 2u);
  for (const auto& s : c) {
    EXPECT_EQ(s.divisor, (ElementaryDivisor{P(kQ, {-1, 1}), 2, 2}));
  }
  EXPECT_EQ(c[1].copy_index, 1u);
}

TEST(Indecomposable, ReassemblesToBlockForm) {
  std::mt19937_64 rng(71);
  for (const Field& f : {kQ, Field::prime(101)}) {
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t n = 1 + trial % 6;
      const Matrix t = conjugate(random_invertible(f, n, rng), structured(f, rng, n));
      const auto parts = indecomposable_decomposition(t);
      Matrix p(f, n, 0);
      std::vector<Matrix> blocks;
      for (const auto& s : parts) {
        p = hconcat(p, s.basis);
        const Poly pk = s.divisor.p.pow(s.divisor.k);
        if (s.divisor.p.degree() == 1) {
          Matrix b = Matrix::identity(f, s.divisor.k) * (-s.divisor.p.constant_term());
          for (std::size_t i = 0; i + 1 < s.divisor.k; ++i) b(i + 1, i) = Scalar::one(f);
          blocks.push_back(b);
        } else {
          blocks.push_back(companion(pk));
        }
      }
      EXPECT_EQ(inverse(p) * t * p, block_diagonal(f, blocks));
    }
  }
}

TEST(JordanChevalley, Examples) {
  const auto a = jordan_chevalley(Matrix::from_ints(kQ, {{2, 1}, {0, 2}}), JcMode::Multiplicative);
  EXPECT_EQ(a.semisimple, Matrix::identity(kQ, 2) * q(2));
  EXPECT_EQ(a.unipotent_or_nilpotent, Matrix::from_rows(kQ, {{q(1), q(1, 2)}, {q(0), q(1)}}));

  const Matrix semi = companion(P(kQ, {1, -3, 1}));
  EXPECT_TRUE(jordan_chevalley(semi, JcMode::Multiplicative).unipotent_or_nilpotent.is_identity());
  EXPECT_TRUE(jordan_chevalley(jordan_block(kQ, 3, 1), JcMode::Multiplicative).semisimple.is_identity());

  try {
    (void)jordan_chevalley(Matrix::identity(Field::prime(3), 3), JcMode::Additive);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SmallCharacteristic);
  }
}

TEST(JordanChevalley, Properties) {
  std::mt19937_64 rng(73);
  for (const Field& f : {kQ, Field::prime(101)}) {
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 2 + trial % 5;
      const Matrix g = random_invertible(f, n, rng);
      const Matrix base = structured(f, rng, n);
      const Matrix t = conjugate(g, base);
      const std::size_t m = t.rows();
      const Matrix id = Matrix::identity(f, m);
      const auto mul = jordan_chevalley(t, JcMode::Multiplicative);
      EXPECT_EQ(mul.semisimple * mul.unipotent_or_nilpotent, t);
      EXPECT_EQ(mul.semisimple * mul.unipotent_or_nilpotent, mul.unipotent_or_nilpotent * mul.semisimple);
      EXPECT_TRUE((mul.unipotent_or_nilpotent - id).pow(m).is_zero());
      const Poly ms = min_poly(mul.semisimple);
      EXPECT_TRUE(poly_gcd(ms, ms.derivative()).is_one());
      // Uniqueness: the decomposition commutes with conjugation.
      const auto other = jordan_chevalley(base, JcMode::Multiplicative);
      EXPECT_EQ(conjugate(g, other.semisimple), mul.semisimple);

      const auto add = jordan_chevalley(t, JcMode::Additive);
      EXPECT_EQ(add.semisimple + add.unipotent_or_nilpotent, t);
      EXPECT_EQ(add.semisimple * add.unipotent_or_nilpotent, add.unipotent_or_nilpotent * add.semisimple);
      EXPECT_TRUE(add.unipotent_or_nilpotent.pow(m).is_zero());
    }
  }
}
