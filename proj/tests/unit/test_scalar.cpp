#include <gtest/gtest.h>

#include <random>

#include "invform/error.hpp"
#include "invform/scalar.hpp"

using namespace invform;

namespace {

Scalar q(long num, long den = 1) { return Scalar(Field::rationals(), mpq_class(num, den)); }

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 12);
  if (f.is_rationals()) return Scalar(f, mpq_class(num(rng), den(rng)));
  return Scalar(f, num(rng));
}

}  // namespace

TEST(Field, RejectsComposite) {
  EXPECT_THROW(Field::prime(9), Error);
  EXPECT_THROW(Field::prime(1), Error);
  EXPECT_NO_THROW(Field::prime(101));
  EXPECT_EQ(Field::prime(257).modulus(), 257u);
}

TEST(Field, CharExceeds) {
  EXPECT_TRUE(char_exceeds(Field::rationals(), 100));
  EXPECT_TRUE(char_exceeds(Field::prime(5), 4));
  EXPECT_FALSE(char_exceeds(Field::prime(5), 5));
  EXPECT_THROW(require_large_characteristic(Field::prime(3), 3, "test"), Error);
}

TEST(Scalar, Inverse) {
  EXPECT_EQ(field_inverse(q(2, 3)), q(3, 2));
  const Field f5 = Field::prime(5);
  EXPECT_EQ(field_inverse(Scalar(f5, 2L)), Scalar(f5, 3L));
  try {
    (void)field_inverse(Scalar::zero(Field::prime(7)));
    FAIL() << "expected ZeroInverse";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroInverse);
  }
}

TEST(Scalar, ResiduesAreReduced) {
  const Field f7 = Field::prime(7);
  EXPECT_EQ(Scalar(f7, -1L).residue(), 6u);
  EXPECT_EQ(Scalar(f7, mpq_class(1, 2)).residue(), 4u);
  EXPECT_THROW(Scalar(f7, mpq_class(1, 7)), Error);
}

TEST(Scalar, MixedFieldsIsAnError) {
  try {
    (void)(q(1) + Scalar(Field::prime(5), 1L));
    FAIL() << "expected MixedFields";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MixedFields);
  }
  EXPECT_FALSE(q(1) == Scalar(Field::prime(5), 1L));
}

TEST(Scalar, FieldAxiomsOnRandomTriples) {
  std::mt19937_64 rng(7);
  for (const Field& f : {Field::rationals(), Field::prime(101), Field::prime(2)}) {
    for (int trial = 0; trial < 300; ++trial) {
      const Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + (-a), Scalar::zero(f));
      if (!a.is_zero()) {
        EXPECT_EQ(a.inverse().inverse(), a);
        EXPECT_EQ(a * a.inverse(), Scalar::one(f));
      }
    }
  }
}

TEST(Scalar, StringRoundTrip) {
  std::mt19937_64 rng(11);
  for (const Field& f : {Field::rationals(), Field::prime(257)}) {
    for (int trial = 0; trial < 200; ++trial) {
      const Scalar a = random_scalar(f, rng);
      EXPECT_EQ(parse_scalar(f, a.to_string()), a);
    }
  }
  const Scalar big = parse_scalar(Field::rationals(), "-123456789012345678901234567890/11");
  EXPECT_EQ(big.to_string(), "-123456789012345678901234567890/11");
  EXPECT_EQ(parse_scalar(Field::rationals(), "6/4").to_string(), "3/2");
}

TEST(Scalar, ParseErrors) {
  const Field f = Field::rationals();
  for (const char* bad : {"", "1/0", "1/-2", "abc", "1//2", "/3"}) {
    try {
      (void)parse_scalar(f, bad);
      FAIL() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParseError) << bad;
    }
  }
}

TEST(Scalar, SquareTestMatchesEnumeration) {
  for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u}) {
    const Field f = Field::prime(p);
    std::vector<bool> square(p, false);
    for (std::uint64_t x = 0; x < p; ++x) square[(x * x) % p] = true;
    for (std::uint64_t a = 0; a < p; ++a) {
      EXPECT_EQ(Scalar(f, static_cast<long>(a)).is_square(), square[a]) << a << " mod " << p;
    }
  }
}
