#include "invform/poly.hpp"

#include <algorithm>
#include <cctype>

#include "invform/error.hpp"

namespace invform {

Poly::Poly(const Field& field, std::vector<Scalar> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) require_same_field(field_, c.field());
  trim();
}

Poly Poly::from_ints(const Field& field, std::initializer_list<long> low_first) {
  std::vector<Scalar> c;
  c.reserve(low_first.size());
  for (long v : low_first) c.emplace_back(field, v);
  return Poly(field, std::move(c));
}

Poly Poly::constant(const Scalar& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const Scalar& c, std::size_t degree) {
  std::vector<Scalar> coeffs(degree + 1, Scalar::zero(c.field()));
  coeffs[degree] = c;
  return Poly(c.field(), std::move(coeffs));
}

Poly Poly::linear(const Scalar& root) {
  return Poly(root.field(), {-root, Scalar::one(root.field())});
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Poly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Scalar::zero(field_);
}

Scalar Poly::leading() const {
  return coeffs_.empty() ? Scalar::zero(field_) : coeffs_.back();
}

Scalar Poly::eval(const Scalar& at) const {
  require_same_field(field_, at.field());
  Scalar acc = Scalar::zero(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Poly Poly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return *this * leading().inverse();
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly(field_);
  std::vector<Scalar> d;
  d.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * Scalar(field_, static_cast<long>(i)));
  return Poly(field_, std::move(d));
}

Poly Poly::pow(std::uint64_t exponent) const {
  Poly result = Poly::constant(Scalar::one(field_));
  Poly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

Poly& Poly::operator+=(const Poly& rhs) {
  require_same_field(field_, rhs.field_);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar::zero(field_));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  require_same_field(field_, rhs.field_);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar::zero(field_));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a.field_, b.field_);
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(a.field_, std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) {
  *this = *this * rhs;
  return *this;
}

Poly& Poly::operator*=(const Scalar& rhs) {
  require_same_field(field_, rhs.field());
  for (auto& c : coeffs_) c *= rhs;
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::strong_ordering Poly::canonical_compare(const Poly& other) const {
  require_same_field(field_, other.field_);
  if (auto c = degree() <=> other.degree(); c != 0) return c;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (auto c = coeffs_[i].canonical_compare(other.coeffs_[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    Scalar c = coeffs_[static_cast<std::size_t>(d)];
    if (c.is_zero()) continue;
    bool negative = field_.is_rationals() && sgn(c.rational()) < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (d == 0) {
      out += c.to_string();
      continue;
    }
    if (!c.is_one()) out += c.to_string() + "*";
    out += var;
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out;
}

PolyDivision divmod(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) throw Error(ErrorKind::ZeroInverse, "polynomial division by zero");
  const Field& field = a.field();
  if (a.degree() < b.degree()) return {Poly(field), a};
  std::vector<Scalar> rem = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<Scalar> quot(rem.size() - db, Scalar::zero(field));
  const Scalar lead_inv = b.leading().inverse();
  const auto& bc = b.coeffs();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].is_zero()) continue;
    const Scalar factor = rem[k] * lead_inv;
    quot[k - db] = factor;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= factor * bc[j];
  }
  rem.resize(db);
  return {Poly(field, std::move(quot)), Poly(field, std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

bool divides(const Poly& d, const Poly& f) {
  if (d.is_zero()) return f.is_zero();
  return (f % d).is_zero();
}

Poly poly_gcd(const Poly& f, const Poly& g) {
  require_same_field(f.field(), g.field());
  Poly a = f;
  Poly b = g;
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtendedGcd extended_gcd(const Poly& f, const Poly& g) {
  require_same_field(f.field(), g.field());
  const Field& field = f.field();
  Poly r0 = f, r1 = g;
  Poly s0 = Poly::constant(Scalar::one(field)), s1(field);
  Poly t0(field), t1 = Poly::constant(Scalar::one(field));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Scalar inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

namespace {

void require_monic(const Poly& f, const char* op) {
  if (!f.is_monic()) throw Error(ErrorKind::InvalidInput, std::string(op) + " requires a monic polynomial, got " + f.to_string());
}

}  // namespace

Poly dual_poly(const Poly& f) {
  require_monic(f, "dual_poly");
  const Scalar c0 = f.constant_term();
  if (c0.is_zero()) throw Error(ErrorKind::ZeroConstantTerm, "dual of " + f.to_string() + " is undefined");
  std::vector<Scalar> rev(f.coeffs().rbegin(), f.coeffs().rend());
  const Scalar inv = c0.inverse();
  for (auto& c : rev) c *= inv;
  return Poly(f.field(), std::move(rev));
}

Poly additive_dual_poly(const Poly& f) {
  require_monic(f, "additive_dual_poly");
  std::vector<Scalar> c = f.coeffs();
  const auto d = static_cast<std::size_t>(f.degree());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if ((d + i) % 2 == 1) c[i] = -c[i];
  }
  return Poly(f.field(), std::move(c));
}

bool is_self_dual(const Poly& f) { return dual_poly(f) == f; }

bool is_additively_self_dual(const Poly& f) { return additive_dual_poly(f) == f; }

Poly substitute_y_eq_x_plus_inv(const Poly& p) {
  require_monic(p, "substitute_y_eq_x_plus_inv");
  if (p.degree() % 2 != 0) throw Error(ErrorKind::OddDegree, p.to_string() + " has odd degree");
  if (!is_self_dual(p)) throw Error(ErrorKind::NotSelfDual, p.to_string() + " is not self-dual");
  if (!p.constant_term().is_one()) {
    throw Error(ErrorKind::InvalidInput, p.to_string() + " is self-dual with constant term -1; x^-m p is not symmetric");
  }
  const Field& field = p.field();
  const auto m = static_cast<std::size_t>(p.degree() / 2);
  // power_sums[j] = x^j + x^-j written in y; P0 = 2, P1 = y, Pj = y Pj-1 - Pj-2.
  const Poly y = Poly::x(field);
  Poly prev2 = Poly::constant(Scalar(field, 2L));
  Poly prev1 = y;
  Poly q = Poly::constant(p.coeff(m));
  for (std::size_t j = 1; j <= m; ++j) {
    q += prev1 * p.coeff(m + j);
    Poly next = y * prev1 - prev2;
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return q;
}

Poly substitute_y_eq_x_squared(const Poly& p) {
  std::vector<Scalar> q;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i % 2 == 1) {
      if (!p.coeffs()[i].is_zero()) throw Error(ErrorKind::NotEvenPolynomial, p.to_string() + " has an odd-degree term");
    } else {
      q.push_back(p.coeffs()[i]);
    }
  }
  return Poly(p.field(), std::move(q));
}

Poly parse_poly(const Field& field, std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty polynomial");
  const std::string whole(text);
  auto fail = [&]() -> Error { return Error(ErrorKind::ParseError, "malformed polynomial '" + whole + "'"); };

  std::vector<Scalar> coeffs;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (!first) {
      throw fail();
    }
    first = false;
    std::size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
    Scalar coef = Scalar::one(field);
    const bool has_coef = pos > start;
    if (has_coef) coef = parse_scalar(field, s.substr(start, pos - start));
    std::size_t degree = 0;
    if (pos < s.size() && s[pos] == '*') {
      if (!has_coef) throw fail();
      ++pos;
      if (pos >= s.size() || s[pos] != 'x') throw fail();
    }
    if (pos < s.size() && s[pos] == 'x') {
      ++pos;
      degree = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == dstart) throw fail();
        degree = std::stoul(s.substr(dstart, pos - dstart));
      }
    } else if (!has_coef) {
      throw fail();
    }
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-') throw fail();
    if (coeffs.size() <= degree) coeffs.resize(degree + 1, Scalar::zero(field));
    coeffs[degree] += negative ? -coef : coef;
  }
  return Poly(field, std::move(coeffs));
}

}  // namespace invform
