#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "invform/error.hpp"
#include "invform/poly.hpp"

using namespace invform;

namespace {

const Field kQ = Field::rationals();

Poly P(const Field& f, std::initializer_list<long> low_first) { return Poly::from_ints(f, low_first); }

Poly random_monic(const Field& f, int degree, std::mt19937_64& rng, bool nonzero_constant) {
  std::uniform_int_distribution<long> d(-9, 9);
  for (;;) {
    std::vector<Scalar> c;
    for (int i = 0; i < degree; ++i) c.emplace_back(f, d(rng));
    c.push_back(Scalar::one(f));
    Poly p(f, c);
    if (!nonzero_constant || !p.constant_term().is_zero()) return p;
  }
}

}  // namespace

TEST(Poly, ArithmeticAndDegree) {
  const Poly a = P(kQ, {-1, 0, 1});
  const Poly b = P(kQ, {1, 1});
  EXPECT_EQ(a.degree(), 2);
  EXPECT_EQ(Poly(kQ).degree(), -1);
  EXPECT_EQ(a * b, P(kQ, {-1, -1, 1, 1}));
  EXPECT_EQ(a - a, Poly(kQ));
  const auto [quot, rem] = divmod(a, b);
  EXPECT_EQ(quot, P(kQ, {-1, 1}));
  EXPECT_TRUE(rem.is_zero());
}

TEST(Poly, Gcd) {
  EXPECT_EQ(poly_gcd(P(kQ, {-1, 0, 1}), P(kQ, {-1, 1})), P(kQ, {-1, 1}));
  EXPECT_TRUE(poly_gcd(P(kQ, {1, 0, 1}), P(kQ, {-1, 0, 1})).is_one());
  EXPECT_EQ(poly_gcd(P(kQ, {2, 4}), Poly(kQ)), P(kQ, {2, 4}).monic());
  EXPECT_THROW((void)poly_gcd(P(kQ, {1, 1}), P(Field::prime(5), {1, 1})), Error);
}

TEST(Poly, ExtendedGcdIdentity) {
  std::mt19937_64 rng(3);
  for (const Field& f : {kQ, Field::prime(101)}) {
    for (int i = 0; i < 50; ++i) {
      const Poly a = random_monic(f, 4, rng, false);
      const Poly b = random_monic(f, 3, rng, false);
      const ExtendedGcd eg = extended_gcd(a, b);
      EXPECT_EQ(eg.s * a + eg.t * b, eg.gcd);
      EXPECT_TRUE(divides(eg.gcd, a) && divides(eg.gcd, b));
    }
  }
}

TEST(Poly, DualExamples) {
  EXPECT_EQ(dual_poly(P(kQ, {-2, 1})), Poly(kQ, {Scalar(kQ, mpq_class(-1, 2)), Scalar::one(kQ)}));
  EXPECT_EQ(dual_poly(P(kQ, {1, -3, 1})), P(kQ, {1, -3, 1}));
  try {
    (void)dual_poly(P(kQ, {0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroConstantTerm);
  }
  EXPECT_EQ(additive_dual_poly(P(kQ, {1, 1, 1})), P(kQ, {1, -1, 1}));
  EXPECT_EQ(additive_dual_poly(P(kQ, {-3, 1})), P(kQ, {3, 1}));
}

TEST(Poly, SelfDuality) {
  EXPECT_TRUE(is_self_dual(P(kQ, {1, -3, 1})));
  EXPECT_TRUE(is_additively_self_dual(P(kQ, {1, 0, 1})));
  EXPECT_FALSE(is_self_dual(P(kQ, {-2, 1})));
  EXPECT_FALSE(is_additively_self_dual(P(kQ, {-2, 1})));
  EXPECT_TRUE(is_self_dual(P(kQ, {-1, 1})));
  EXPECT_TRUE(is_additively_self_dual(P(kQ, {0, 1})));
}

TEST(Poly, DualsAreInvolutions) {
  std::mt19937_64 rng(5);
  for (const Field& f : {kQ, Field::prime(101)}) {
    for (int i = 0; i < 100; ++i) {
      const Poly p = random_monic(f, 1 + i % 7, rng, true);
      EXPECT_EQ(dual_poly(dual_poly(p)), p);
      EXPECT_EQ(additive_dual_poly(additive_dual_poly(p)), p);
      EXPECT_EQ(dual_poly(p).degree(), p.degree());
    }
  }
}

TEST(Poly, DualInvertsRoots) {
  const Field f = Field::prime(101);
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> root(1, 100);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Scalar> roots;
    Poly p = Poly::constant(Scalar::one(f));
    for (int i = 0; i < 1 + trial % 6; ++i) {
      roots.emplace_back(f, root(rng));
      p *= Poly::linear(roots.back());
    }
    Poly expected = Poly::constant(Scalar::one(f));
    for (const auto& r : roots) expected *= Poly::linear(r.inverse());
    EXPECT_EQ(dual_poly(p), expected);
  }
}

TEST(Poly, SubstituteXPlusInverseExamples) {
  EXPECT_EQ(substitute_y_eq_x_plus_inv(P(kQ, {1, -3, 1})), P(kQ, {-3, 1}));
  EXPECT_EQ(substitute_y_eq_x_plus_inv(P(kQ, {1, 1, 1, 1, 1})), P(kQ, {-1, 1, 1}));
  EXPECT_EQ(substitute_y_eq_x_plus_inv(P(kQ, {1, 0, 1})), P(kQ, {0, 1}));
  try {
    (void)substitute_y_eq_x_plus_inv(P(kQ, {1, 2, 2, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OddDegree);
  }
  try {
    (void)substitute_y_eq_x_plus_inv(P(kQ, {5, 2, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSelfDual);
  }
}

TEST(Poly, SubstituteXPlusInverseRoundTrip) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> d(-9, 9);
  for (const Field& f : {kQ, Field::prime(101)}) {
    for (int m = 1; m <= 4; ++m) {
      for (int trial = 0; trial < 20; ++trial) {
        // Palindromic coefficients with a_0 = a_2m = 1.
        std::vector<long> c(2 * m + 1);
        c[0] = c[2 * m] = 1;
        for (int i = 1; i <= m; ++i) c[i] = c[2 * m - i] = d(rng);
        std::vector<Scalar> coeffs;
        for (long v : c) coeffs.emplace_back(f, v);
        const Poly p(f, coeffs);
        const Poly q = substitute_y_eq_x_plus_inv(p);
        ASSERT_EQ(q.degree(), m);
        // x^m q(x + 1/x) = sum_j q_j (x^2 + 1)^j x^(m-j)
        const Poly x2p1 = P(f, {1, 0, 1});
        Poly back(f);
        for (int j = 0; j <= m; ++j) back += Poly::monomial(q.coeff(j), m - j) * x2p1.pow(j);
        EXPECT_EQ(back, p);
      }
    }
  }
}

TEST(Poly, SubstituteXSquared) {
  EXPECT_EQ(substitute_y_eq_x_squared(P(kQ, {1, 0, 1})), P(kQ, {1, 1}));
  EXPECT_EQ(substitute_y_eq_x_squared(P(kQ, {1, 0, 3, 0, 1})), P(kQ, {1, 3, 1}));
  EXPECT_EQ(substitute_y_eq_x_squared(P(kQ, {-2, 0, 1})), P(kQ, {-2, 1}));
  try {
    (void)substitute_y_eq_x_squared(P(kQ, {1, 1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotEvenPolynomial);
  }
}

TEST(Poly, TextRoundTrip) {
  const Poly p = parse_poly(kQ, "x^4 - 3*x + 1/2");
  EXPECT_EQ(p.degree(), 4);
  EXPECT_EQ(p.to_string(), "x^4 - 3*x + 1/2");
  EXPECT_EQ(parse_poly(kQ, p.to_string()), p);
  EXPECT_EQ(parse_poly(kQ, "2x"), P(kQ, {0, 2}));
  EXPECT_EQ(parse_poly(kQ, "-x^2+1"), P(kQ, {1, 0, -1}));
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    const Poly r = random_monic(kQ, i % 6, rng, false) * Scalar(kQ, mpq_class(-3, 7));
    EXPECT_EQ(parse_poly(kQ, r.to_string()), r) << r.to_string();
  }
}
