#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

namespace invform {

/// The scalar field: either the rationals or a prime field F_p.
///
/// Prime moduli are validated by trial division on construction and must fit
/// in 32 bits so that residue products never overflow a 64-bit word.
class Field {
 public:
  enum class Kind : std::uint8_t { Rationals, PrimeField };

  Field() = default;

  static Field rationals() noexcept { return Field{}; }
  static Field prime(std::uint64_t p);

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }
  [[nodiscard]] bool is_prime_field() const noexcept { return kind_ == Kind::PrimeField; }
  /// 0 for the rationals.
  [[nodiscard]] std::uint64_t modulus() const noexcept { return modulus_; }
  [[nodiscard]] std::uint64_t characteristic() const noexcept { return modulus_; }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_ = Kind::Rationals;
  std::uint64_t modulus_ = 0;
};

[[nodiscard]] bool is_prime(std::uint64_t n) noexcept;

/// True iff the field is Q or its characteristic exceeds n.
[[nodiscard]] bool char_exceeds(const Field& field, std::size_t n);

/// Throws SmallCharacteristic unless char_exceeds(field, n).
void require_large_characteristic(const Field& field, std::size_t n, std::string_view context);

/// Throws MixedFields when the two fields differ.
void require_same_field(const Field& a, const Field& b);

/// An exact element of a Field. Rationals are kept in lowest terms with a
/// positive denominator; residues live in [0, p).
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  explicit Scalar(const Field& field);
  Scalar(const Field& field, long value);
  Scalar(const Field& field, const mpz_class& value);
  /// Over F_p the fraction a/b maps to a * b^-1; b must be a unit mod p.
  Scalar(const Field& field, const mpq_class& value);

  static Scalar zero(const Field& field) { return Scalar(field); }
  static Scalar one(const Field& field) { return Scalar(field, 1L); }

  [[nodiscard]] const Field& field() const noexcept { return field_; }
  [[nodiscard]] bool is_zero() const noexcept;
  [[nodiscard]] bool is_one() const noexcept;

  /// Only valid over Q.
  [[nodiscard]] const mpq_class& rational() const;
  /// Only valid over F_p.
  [[nodiscard]] std::uint64_t residue() const;

  [[nodiscard]] Scalar inverse() const;
  [[nodiscard]] Scalar pow(std::uint64_t exponent) const;
  /// Over F_p: whether the element is a square (0 counts as a square).
  [[nodiscard]] bool is_square() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  [[nodiscard]] Scalar operator-() const;

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  /// Value equality; elements of different fields are never equal.
  friend bool operator==(const Scalar& a, const Scalar& b) noexcept;

  /// Deterministic total order used for canonical sorting: numeric order over
  /// Q, integer order of the residue over F_p.
  [[nodiscard]] std::strong_ordering canonical_compare(const Scalar& other) const;

  /// "a/b" or "a" over Q; the decimal residue over F_p.
  [[nodiscard]] std::string to_string() const;

 private:
  Field field_;
  std::variant<std::uint64_t, mpq_class> value_;
};

[[nodiscard]] Scalar field_inverse(const Scalar& a);

inline std::ostream& operator<<(std::ostream& os, const Scalar& a) { return os << a.to_string(); }

/// Parses "a/b", "a" (and a leading sign) in the given field.
[[nodiscard]] Scalar parse_scalar(const Field& field, std::string_view text);

}  // namespace invform
