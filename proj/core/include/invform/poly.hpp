#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "invform/scalar.hpp"

namespace invform {

/// Dense univariate polynomial over a Field, lowest degree first. The
/// coefficient vector never carries trailing zeros, so the zero polynomial
/// has no coefficients and degree -1.
class Poly {
 public:
  explicit Poly(const Field& field = Field::rationals()) : field_(field) {}
  Poly(const Field& field, std::vector<Scalar> coeffs);

  static Poly from_ints(const Field& field, std::initializer_list<long> low_first);
  static Poly constant(const Scalar& c);
  static Poly monomial(const Scalar& c, std::size_t degree);
  static Poly x(const Field& field) { return monomial(Scalar::one(field), 1); }
  /// x - root
  static Poly linear(const Scalar& root);

  [[nodiscard]] const Field& field() const noexcept { return field_; }
  [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  [[nodiscard]] bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  [[nodiscard]] bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back().is_one(); }
  [[nodiscard]] const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^i; zero beyond the degree.
  [[nodiscard]] Scalar coeff(std::size_t i) const;
  [[nodiscard]] Scalar leading() const;
  [[nodiscard]] Scalar constant_term() const { return coeff(0); }

  [[nodiscard]] Scalar eval(const Scalar& at) const;
  [[nodiscard]] Poly monic() const;
  [[nodiscard]] Poly derivative() const;
  [[nodiscard]] Poly pow(std::uint64_t exponent) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Scalar& rhs);
  [[nodiscard]] Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
  friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) noexcept {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  /// Degree first, then coefficients compared from the constant term upward.
  [[nodiscard]] std::strong_ordering canonical_compare(const Poly& other) const;

  /// Human form, highest degree first: "x^4 - 3*x + 1/2".
  [[nodiscard]] std::string to_string(char var = 'x') const;

 private:
  void trim();

  Field field_;
  std::vector<Scalar> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division; throws ZeroInverse on a zero divisor.
[[nodiscard]] PolyDivision divmod(const Poly& a, const Poly& b);
[[nodiscard]] Poly operator/(const Poly& a, const Poly& b);
[[nodiscard]] Poly operator%(const Poly& a, const Poly& b);
[[nodiscard]] bool divides(const Poly& d, const Poly& f);

/// Monic gcd; gcd(f, 0) = monic(f), gcd(0, 0) = 0.
[[nodiscard]] Poly poly_gcd(const Poly& f, const Poly& g);

struct ExtendedGcd {
  Poly gcd;  // monic
  Poly s;
  Poly t;    // s*f + t*g = gcd
};
[[nodiscard]] ExtendedGcd extended_gcd(const Poly& f, const Poly& g);

/// (a * b) mod m and a^e mod m; m must be nonzero.
[[nodiscard]] Poly mul_mod(const Poly& a, const Poly& b, const Poly& m);

/// f*(x) = f(0)^-1 x^d f(1/x). Requires f monic with f(0) != 0.
[[nodiscard]] Poly dual_poly(const Poly& f);
/// f^-(x) = (-1)^d f(-x). Requires f monic.
[[nodiscard]] Poly additive_dual_poly(const Poly& f);
[[nodiscard]] bool is_self_dual(const Poly& f);
/// Self-duality for the additive dual, f = f^-. For odd degree this forces
/// f(0) = 0, so only x among the irreducibles qualifies.
[[nodiscard]] bool is_additively_self_dual(const Poly& f);

/// For monic self-dual p of degree 2m with p(0) = 1, the degree-m q with
/// x^-m p(x) = q(x + 1/x).
[[nodiscard]] Poly substitute_y_eq_x_plus_inv(const Poly& p);
/// For an even polynomial p, the q with p(x) = q(x^2).
[[nodiscard]] Poly substitute_y_eq_x_squared(const Poly& p);

/// Parses the human form; accepts "x^4 - 3*x + 1/2", "2x", "-x^2+1".
[[nodiscard]] Poly parse_poly(const Field& field, std::string_view text);

}  // namespace invform
