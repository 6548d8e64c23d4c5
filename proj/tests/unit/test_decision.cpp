#include <gtest/gtest.h>

#include "invform/decision.hpp"
#include "invform/error.hpp"
#include "invform/oracle.hpp"
#include "test_support.hpp"

using namespace invform;
namespace tst = invform::testing;
using invform::testing::conjugate;
using invform::testing::jordan_block;

namespace {

const Field Q = Field::rationals();

bool has_obstruction(const DecisionReport& r, ObstructionKind kind) {
  for (const auto& o : r.obstructions) {
    if (o.kind == kind) return true;
  }
  return false;
}

// Every element of the form space over a small prime field; a definitive
// answer whenever p^dim is small enough to enumerate.
std::optional<bool> exhaustive_exists(const InvariantFormSpace& space, unsigned long p) {
  const std::size_t dim = space.dimension();
  unsigned long total = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    total *= p;
    if (total > 200000) return std::nullopt;
  }
  const Field f = Field::prime(p);
  for (unsigned long code = 1; code < total; ++code) {
    unsigned long c = code;
    Matrix b(f, space.n, space.n);
    for (std::size_t i = 0; i < dim; ++i) {
      const unsigned long digit = c % p;
      c /= p;
      if (digit != 0) b = b + space.basis[i] * Scalar(f, static_cast<long>(digit));
    }
    if (!det(b).is_zero()) return true;
  }
  return false;
}

Matrix block_sum(const Field& f, const std::vector<Matrix>& blocks) { return block_diagonal(f, blocks); }

}  // namespace

TEST(DecideInvariant, UnipotentParity) {
  for (const Field& f : {Q, Field::prime(101)}) {
    const Matrix j2 = jordan_block(f, 2, 1);
    const auto sym = decide_invariant_form(j2, Symmetry::Symmetric);
    EXPECT_FALSE(sym.exists);
    EXPECT_TRUE(has_obstruction(sym, ObstructionKind::BadUnipotentParity));
    ASSERT_EQ(sym.obstructions.size(), 1u);
    EXPECT_EQ(sym.obstructions[0].divisor.k, 2u);
    EXPECT_TRUE(decide_invariant_form(j2, Symmetry::SkewSymmetric).exists);

    const Matrix jm2 = jordan_block(f, 2, -1);
    EXPECT_FALSE(decide_invariant_form(jm2, Symmetry::Symmetric).exists);
    EXPECT_TRUE(decide_invariant_form(jm2, Symmetry::SkewSymmetric).exists);

    const Matrix j3 = jordan_block(f, 3, 1);
    EXPECT_TRUE(decide_invariant_form(j3, Symmetry::Symmetric).exists);
    const auto j3skew = decide_invariant_form(j3, Symmetry::SkewSymmetric);
    EXPECT_FALSE(j3skew.exists);
    EXPECT_TRUE(has_obstruction(j3skew, ObstructionKind::OddDimensionSkew));
    EXPECT_TRUE(has_obstruction(j3skew, ObstructionKind::BadUnipotentParity));

    const Matrix pair = block_sum(f, {j2, j2});
    EXPECT_TRUE(decide_invariant_form(pair, Symmetry::Symmetric).exists);
    EXPECT_TRUE(decide_invariant_form(pair, Symmetry::SkewSymmetric).exists);
  }
}

TEST(DecideInvariant, DualPairs) {
  const Matrix paired = Matrix::diagonal(Q, {Scalar(Q, 2L), Scalar(Q, mpq_class(1, 2))});
  EXPECT_TRUE(decide_invariant_form(paired, Symmetry::Symmetric).exists);
  EXPECT_TRUE(decide_invariant_form(paired, Symmetry::SkewSymmetric).exists);

  const Matrix unpaired = Matrix::diagonal(Q, {Scalar(Q, 2L), Scalar(Q, 3L)});
  for (auto sym : {Symmetry::Symmetric, Symmetry::SkewSymmetric}) {
    const auto r = decide_invariant_form(unpaired, sym);
    EXPECT_FALSE(r.exists);
    bool cites_two = false;
    for (const auto& o : r.obstructions) {
      EXPECT_EQ(o.kind, ObstructionKind::UnpairedDual);
      cites_two = cites_two || o.divisor.p == Poly::linear(Scalar(Q, 2L));
    }
    EXPECT_TRUE(cites_two);
  }
}

TEST(DecideInvariant, MultiplicityMustMatch) {
  // (x-2)^1 twice against (x-1/2)^1 once.
  const Matrix t = Matrix::diagonal(Q, {Scalar(Q, 2L), Scalar(Q, 2L), Scalar(Q, mpq_class(1, 2))});
  EXPECT_FALSE(decide_invariant_form(t, Symmetry::Symmetric).exists);
}

TEST(DecideInvariant, Preconditions) {
  EXPECT_THROW((void)decide_invariant_form(Matrix::from_ints(Q, {{1, 1}, {1, 1}}), Symmetry::Symmetric), Error);
  try {
    (void)decide_invariant_form(Matrix::identity(Field::prime(3), 3), Symmetry::Symmetric);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SmallCharacteristic);
  }
}

TEST(DecideInfinitesimal, Examples) {
  const Matrix s = Matrix::from_ints(Q, {{0, 0}, {1, 0}});
  const auto sym = decide_infinitesimal_form(s, Symmetry::Symmetric);
  EXPECT_FALSE(sym.exists);
  EXPECT_TRUE(has_obstruction(sym, ObstructionKind::BadNilpotentParity));
  EXPECT_TRUE(decide_infinitesimal_form(s, Symmetry::SkewSymmetric).exists);

  const Matrix pm = Matrix::from_ints(Q, {{1, 0}, {0, -1}});
  EXPECT_TRUE(decide_infinitesimal_form(pm, Symmetry::Symmetric).exists);
  EXPECT_TRUE(decide_infinitesimal_form(pm, Symmetry::SkewSymmetric).exists);

  const Matrix bad = Matrix::from_ints(Q, {{1, 0}, {0, 2}});
  for (auto sym2 : {Symmetry::Symmetric, Symmetry::SkewSymmetric}) {
    const auto r = decide_infinitesimal_form(bad, sym2);
    EXPECT_FALSE(r.exists);
    EXPECT_TRUE(has_obstruction(r, ObstructionKind::UnpairedAdditiveDual));
  }

  // Zero map: every form works.
  EXPECT_TRUE(decide_infinitesimal_form(Matrix(Q, 3, 3), Symmetry::Symmetric).exists);
  EXPECT_FALSE(decide_infinitesimal_form(Matrix(Q, 3, 3), Symmetry::SkewSymmetric).exists);
}

TEST(DecideInvariant, ExistsIffNoObstructions) {
  std::mt19937_64 rng(3);
  const Field f = Field::prime(101);
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix t = tst::random_invertible(f, 1 + trial % 5, rng, 2);
    for (auto sym : {Symmetry::Symmetric, Symmetry::SkewSymmetric}) {
      const auto r = decide_invariant_form(t, sym);
      EXPECT_EQ(r.exists, r.obstructions.empty());
      EXPECT_FALSE(r.witness.has_value());
    }
  }
}

TEST(DecideInvariant, AgreesWithExhaustiveSearch) {
  // Every verdict the enumeration can settle must match exactly.
  std::mt19937_64 rng(17);
  int settled = 0;
  for (unsigned long p : {5ul, 7ul}) {
    const Field f = Field::prime(p);
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t n = 1 + trial % 4;
      Matrix t = tst::random_invertible(f, n, rng, 3);
      if (trial % 3 == 0) t = conjugate(tst::random_invertible(f, n, rng), jordan_block(f, n, trial % 2 ? 1 : -1));
      for (auto sym : {Symmetry::Symmetric, Symmetry::SkewSymmetric}) {
        const auto truth = exhaustive_exists(solve_form_space(t, sym, Setting::Invariant), p);
        if (!truth) continue;
        ++settled;
        EXPECT_EQ(decide_invariant_form(t, sym).exists, *truth) << t.to_string() << " " << to_string(sym);
      }
    }
  }
  EXPECT_GT(settled, 300);
}

TEST(DecideInfinitesimal, AgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(19);
  int settled = 0;
  for (unsigned long p : {5ul, 7ul}) {
    const Field f = Field::prime(p);
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t n = 1 + trial % 4;
      Matrix s = tst::random_matrix(f, n, n, rng, 3);
      if (trial % 3 == 0) {
        Matrix nil(f, n, n);
        for (std::size_t i = 0; i + 1 < n; ++i) nil(i, i + 1) = Scalar::one(f);
        s = conjugate(tst::random_invertible(f, n, rng), nil);
      }
      for (auto sym : {Symmetry::Symmetric, Symmetry::SkewSymmetric}) {
        const auto truth = exhaustive_exists(solve_form_space(s, sym, Setting::Infinitesimal), p);
        if (!truth) continue;
        ++settled;
        EXPECT_EQ(decide_infinitesimal_form(s, sym).exists, *truth) << s.to_string() << " " << to_string(sym);
      }
    }
  }
  EXPECT_GT(settled, 300);
}

TEST(DecideInvariant, ConjugationAndInversionInvariance) {
  std::mt19937_64 rng(23);
  const Field f = Field::prime(101);
  const std::vector<Matrix> instances = {
      jordan_block(f, 2, 1), jordan_block(f, 3, 1), block_sum(f, {jordan_block(f, 2, -1), jordan_block(f, 2, -1)}),
      Matrix::diagonal(f, {Scalar(f, 2L), Scalar(f, 51L)}), Matrix::diagonal(f, {Scalar(f, 2L), Scalar(f, 3L)}),
      companion(Poly::from_ints(f, {1, -3, 1})), block_sum(f, {companion(Poly::from_ints(f, {1, 0, 1})), jordan_block(f, 2, 1)})};
  for (const auto& t : instances) {
    for (auto sym : {Symmetry::Symmetric, Symmetry::SkewSymmetric}) {
      const bool base = decide_invariant_form(t, sym).exists;
      EXPECT_EQ(decide_invariant_form(inverse(t), sym).exists, base);
      for (int g = 0; g < 25; ++g) {
        const Matrix c = conjugate(tst::random_invertible(f, t.rows(), rng), t);
        EXPECT_EQ(decide_invariant_form(c, sym).exists, base);
      }
    }
  }
}

TEST(DecideInvariant, SymmetricEqualsSkewAwayFromPlusMinusOne) {
  std::mt19937_64 rng(29);
  const Field f = Field::prime(257);
  int checked = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 2 * (1 + trial % 3);
    const Matrix t = tst::random_invertible(f, n, rng, 4);
    if (det(t - Matrix::identity(f, n)).is_zero() || det(t + Matrix::identity(f, n)).is_zero()) continue;
    ++checked;
    EXPECT_EQ(decide_invariant_form(t, Symmetry::Symmetric).exists,
              decide_invariant_form(t, Symmetry::SkewSymmetric).exists);
  }
  EXPECT_GT(checked, 40);
}

TEST(DecideReal, Examples) {
  EXPECT_TRUE(decide_real(companion(Poly::from_ints(Q, {1, -3, 1}))).is_real);
  const auto two = decide_real(Matrix::identity(Q, 2) * Scalar(Q, 2L));
  EXPECT_FALSE(two.is_real);
  EXPECT_FALSE(two.mismatches.empty());
  const auto j2 = decide_real(jordan_block(Q, 2, 1));
  ASSERT_TRUE(j2.is_real);
  ASSERT_TRUE(j2.splitting);
  EXPECT_EQ(j2.splitting->basis1.cols(), 0u);
  EXPECT_EQ(j2.splitting->basis2.cols(), 2u);
}

TEST(DecideReal, SplittingCarriesForms) {
  const Field f = Field::prime(101);
  std::mt19937_64 rng(31);
  const Matrix t = conjugate(tst::random_invertible(f, 6, rng),
                             block_sum(f, {jordan_block(f, 2, 1), jordan_block(f, 1, -1), jordan_block(f, 3, 1)}));
  const auto r = decide_real(t);
  ASSERT_TRUE(r.is_real);
  ASSERT_TRUE(r.splitting);
  EXPECT_EQ(r.splitting->basis1.cols(), 4u);
  EXPECT_EQ(r.splitting->basis2.cols(), 2u);
  EXPECT_EQ(rank(hconcat(r.splitting->basis1, r.splitting->basis2)), 6u);
  const Matrix t1 = restrict_to(t, r.splitting->basis1);
  const Matrix t2 = restrict_to(t, r.splitting->basis2);
  EXPECT_TRUE(decide_invariant_form(t1, Symmetry::Symmetric).exists);
  EXPECT_TRUE(decide_invariant_form(t2, Symmetry::SkewSymmetric).exists);
}

TEST(DecideReal, InverseAndConjugationInvariance) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 4;
    Matrix t = tst::random_invertible(Q, n, rng, 2);
    if (trial % 2 == 0) t = conjugate(tst::random_invertible(Q, n, rng, 2), inverse(t) * t * t);
    const bool real = decide_real(t).is_real;
    EXPECT_EQ(decide_real(inverse(t)).is_real, real);
    EXPECT_EQ(decide_real(conjugate(tst::random_invertible(Q, n, rng, 2), t)).is_real, real);
  }
}
