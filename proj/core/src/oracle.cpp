#include "invform/oracle.hpp"

#include <random>

#include "invform/error.hpp"

namespace invform {

namespace {

Matrix combine(const InvariantFormSpace& space, const std::vector<Scalar>& coeffs, const Field& field) {
  Matrix g(field, space.n, space.n);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) g += space.basis[i] * coeffs[i];
  }
  return g;
}

Scalar random_coefficient(const Field& field, std::mt19937_64& rng) {
  if (field.is_prime_field()) {
    std::uniform_int_distribution<std::uint64_t> d(0, field.modulus() - 1);
    return Scalar(field, mpz_class(static_cast<unsigned long>(d(rng))));
  }
  std::uniform_int_distribution<long> d(-10, 10);
  return Scalar(field, d(rng));
}

}  // namespace

InvariantFormSpace solve_form_space(const Matrix& m, Symmetry symmetry, Setting setting) {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "form space needs a square matrix");
  const Field& field = m.field();
  const std::size_t n = m.rows();
  if (setting == Setting::Invariant && det(m).is_zero()) throw Error(ErrorKind::Singular, "T is not invertible");

  // Elementary symmetric / alternating Gram matrices, one per coordinate.
  std::vector<Matrix> units;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (i == j && symmetry == Symmetry::SkewSymmetric) continue;
      Matrix e(field, n, n);
      e(i, j) = Scalar::one(field);
      if (i != j) e(j, i) = symmetry == Symmetry::Symmetric ? Scalar::one(field) : -Scalar::one(field);
      units.push_back(std::move(e));
    }
  }

  const Matrix mt = m.transpose();
  Matrix system(field, n * n, units.size());
  for (std::size_t u = 0; u < units.size(); ++u) {
    const Matrix image = setting == Setting::Invariant ? mt * units[u] * m - units[u] : mt * units[u] + units[u] * m;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) system(i * n + j, u) = image(i, j);
    }
  }

  InvariantFormSpace space;
  space.symmetry = symmetry;
  space.setting = setting;
  space.field = field;
  space.n = n;
  for (const Vector& k : kernel(system)) {
    Matrix g(field, n, n);
    for (std::size_t u = 0; u < units.size(); ++u) {
      if (!k[u].is_zero()) g += units[u] * k[u];
    }
    space.basis.push_back(std::move(g));
  }
  return space;
}

std::optional<Matrix> find_nondegenerate(const InvariantFormSpace& space, const OracleOptions& options) {
  const Field& field = space.field;
  if (space.basis.empty()) {
    if (space.n == 0) return Matrix(field, 0, 0);
    return std::nullopt;
  }
  const std::size_t dim = space.dimension();

  if (dim <= 4) {
    const long values[] = {0, 1, -1, 2};
    std::size_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) total *= 4;
    for (std::size_t code = 1; code < total; ++code) {
      std::vector<Scalar> coeffs;
      std::size_t rest = code;
      for (std::size_t i = 0; i < dim; ++i) {
        coeffs.emplace_back(field, values[rest % 4]);
        rest /= 4;
      }
      Matrix g = combine(space, coeffs, field);
      if (!det(g).is_zero()) return g;
    }
  }

  std::mt19937_64 rng(options.seed);
  for (unsigned trial = 0; trial < options.trials; ++trial) {
    std::vector<Scalar> coeffs;
    for (std::size_t i = 0; i < dim; ++i) coeffs.push_back(random_coefficient(field, rng));
    Matrix g = combine(space, coeffs, field);
    if (!det(g).is_zero()) return g;
  }
  return std::nullopt;
}

bool brute_force_reality(const Matrix& t) {
  if (!t.is_square()) throw Error(ErrorKind::NotSquare, "reality search needs a square matrix");
  const Field& field = t.field();
  if (field.is_rationals()) throw Error(ErrorKind::RationalsUnsupported, "conjugator search needs a finite field");
  const std::uint64_t p = field.modulus();
  const std::size_t n = t.rows();

  double order = 1;
  double pn = 1;
  for (std::size_t i = 0; i < n; ++i) pn *= static_cast<double>(p);
  double pi = 1;
  for (std::size_t i = 0; i < n; ++i) {
    order *= pn - pi;
    pi *= static_cast<double>(p);
  }
  if (order > 1e4) {
    throw Error(ErrorKind::GroupTooLarge, "|GL(" + std::to_string(n) + ", " + std::to_string(p) + ")| exceeds 10^4");
  }

  const Matrix t_inv = inverse(t);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n * n; ++i) total *= p;
  for (std::uint64_t code = 0; code < total; ++code) {
    Matrix g(field, n, n);
    std::uint64_t rest = code;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        g(i, j) = Scalar(field, static_cast<long>(rest % p));
        rest /= p;
      }
    }
    if (g * t == t_inv * g && !det(g).is_zero()) return true;
  }
  return false;
}

}  // namespace invform
