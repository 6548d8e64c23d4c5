#include "invform/scalar.hpp"

#include <cctype>
#include <limits>

#include "invform/error.hpp"

namespace invform {

namespace {

__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (e != 0) {
    if (e & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    e >>= 1U;
  }
  return result;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // Extended Euclid on signed 128-bit values.
  i128 t = 0, new_t = 1;
  i128 r = p, new_r = a % p;
  while (new_r != 0) {
    i128 q = r / new_r;
    i128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_mpz(const mpz_class& value, std::uint64_t p) {
  mpz_class r;
  mpz_class modulus;
  mpz_set_ui(modulus.get_mpz_t(), p);
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  return mpz_get_ui(r.get_mpz_t());
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  text = trim(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) throw Error(ErrorKind::ParseError, "malformed scalar '" + std::string(whole) + "'");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorKind::ParseError, "malformed scalar '" + std::string(whole) + "'");
    }
  }
  mpz_class value(std::string(text), 10);
  return negative ? mpz_class(-value) : value;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorKind::InvalidInput, "modulus " + std::to_string(p) + " exceeds 32 bits");
  }
  if (!is_prime(p)) throw Error(ErrorKind::InvalidInput, "modulus " + std::to_string(p) + " is not prime");
  return Field(Kind::PrimeField, p);
}

std::string Field::to_string() const {
  return is_rationals() ? std::string("Q") : "F_" + std::to_string(modulus_);
}

bool char_exceeds(const Field& field, std::size_t n) {
  return field.is_rationals() || field.modulus() > n;
}

void require_large_characteristic(const Field& field, std::size_t n, std::string_view context) {
  if (!char_exceeds(field, n)) {
    throw Error(ErrorKind::SmallCharacteristic,
                std::string(context) + ": characteristic of " + field.to_string() +
                    " does not exceed dimension " + std::to_string(n));
  }
}

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) {
    throw Error(ErrorKind::MixedFields, "cannot combine " + a.to_string() + " with " + b.to_string());
  }
}

Scalar::Scalar(const Field& field) : field_(field) {
  if (field.is_rationals()) {
    value_ = mpq_class(0);
  } else {
    value_ = std::uint64_t{0};
  }
}

Scalar::Scalar(const Field& field, long value) : field_(field) {
  if (field.is_rationals()) {
    value_ = mpq_class(value);
  } else {
    const auto p = static_cast<long long>(field.modulus());
    long long r = static_cast<long long>(value) % p;
    if (r < 0) r += p;
    value_ = static_cast<std::uint64_t>(r);
  }
}

Scalar::Scalar(const Field& field, const mpz_class& value) : field_(field) {
  if (field.is_rationals()) {
    value_ = mpq_class(value);
  } else {
    value_ = reduce_mpz(value, field.modulus());
  }
}

Scalar::Scalar(const Field& field, const mpq_class& value) : field_(field) {
  if (field.is_rationals()) {
    mpq_class v = value;
    v.canonicalize();
    value_ = std::move(v);
    return;
  }
  const std::uint64_t p = field.modulus();
  const std::uint64_t den = reduce_mpz(value.get_den(), p);
  if (den == 0) {
    throw Error(ErrorKind::ZeroInverse, "denominator of " + value.get_str() + " vanishes mod " + std::to_string(p));
  }
  value_ = mul_mod(reduce_mpz(value.get_num(), p), inverse_mod(den, p), p);
}

bool Scalar::is_zero() const noexcept {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const noexcept {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rationals()) throw Error(ErrorKind::MixedFields, "rational() on a residue");
  return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const {
  if (!field_.is_prime_field()) throw Error(ErrorKind::MixedFields, "residue() on a rational");
  return std::get<std::uint64_t>(value_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::ZeroInverse, "zero has no inverse in " + field_.to_string());
  Scalar result(*this);
  if (field_.is_rationals()) {
    mpq_class& q = std::get<mpq_class>(result.value_);
    mpq_inv(q.get_mpq_t(), q.get_mpq_t());
  } else {
    auto& r = std::get<std::uint64_t>(result.value_);
    r = inverse_mod(r, field_.modulus());
  }
  return result;
}

Scalar Scalar::pow(std::uint64_t exponent) const {
  if (field_.is_prime_field()) {
    Scalar result(field_);
    result.value_ = pow_mod(std::get<std::uint64_t>(value_), exponent, field_.modulus());
    return result;
  }
  Scalar result = Scalar::one(field_);
  Scalar base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

bool Scalar::is_square() const {
  if (!field_.is_prime_field()) throw Error(ErrorKind::RationalsUnsupported, "square test over Q");
  const std::uint64_t p = field_.modulus();
  const std::uint64_t r = std::get<std::uint64_t>(value_);
  if (r == 0 || p == 2) return true;
  return pow_mod(r, (p - 1) / 2, p) == 1;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(field_, rhs.field_);
  if (field_.is_rationals()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  } else {
    auto& r = std::get<std::uint64_t>(value_);
    r += std::get<std::uint64_t>(rhs.value_);
    if (r >= field_.modulus()) r -= field_.modulus();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(field_, rhs.field_);
  if (field_.is_rationals()) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  } else {
    auto& r = std::get<std::uint64_t>(value_);
    const std::uint64_t s = std::get<std::uint64_t>(rhs.value_);
    r = r >= s ? r - s : r + field_.modulus() - s;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(field_, rhs.field_);
  if (field_.is_rationals()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  } else {
    auto& r = std::get<std::uint64_t>(value_);
    r = mul_mod(r, std::get<std::uint64_t>(rhs.value_), field_.modulus());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(field_, rhs.field_);
  return *this *= rhs.inverse();
}

Scalar Scalar::operator-() const {
  Scalar result(*this);
  if (field_.is_rationals()) {
    mpq_class& q = std::get<mpq_class>(result.value_);
    mpq_neg(q.get_mpq_t(), q.get_mpq_t());
  } else {
    auto& r = std::get<std::uint64_t>(result.value_);
    if (r != 0) r = field_.modulus() - r;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) noexcept {
  if (!(a.field_ == b.field_)) return false;
  if (a.field_.is_rationals()) return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
  return std::get<std::uint64_t>(a.value_) == std::get<std::uint64_t>(b.value_);
}

std::strong_ordering Scalar::canonical_compare(const Scalar& other) const {
  require_same_field(field_, other.field_);
  if (field_.is_rationals()) {
    const int c = cmp(std::get<mpq_class>(value_), std::get<mpq_class>(other.value_));
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  return std::get<std::uint64_t>(value_) <=> std::get<std::uint64_t>(other.value_);
}

std::string Scalar::to_string() const {
  if (field_.is_rationals()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

Scalar field_inverse(const Scalar& a) { return a.inverse(); }

Scalar parse_scalar(const Field& field, std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Scalar(field, parse_integer(text, whole));

  const mpz_class num = parse_integer(text.substr(0, slash), whole);
  const std::string_view den_text = trim(text.substr(slash + 1));
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw Error(ErrorKind::ParseError, "denominator must be an unsigned positive integer in '" + std::string(whole) + "'");
  }
  const mpz_class den = parse_integer(den_text, whole);
  if (sgn(den) <= 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(whole) + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(field, q);
}

}  // namespace invform
