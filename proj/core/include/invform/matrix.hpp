#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "invform/poly.hpp"
#include "invform/scalar.hpp"

namespace invform {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over a Field.
class Matrix {
 public:
  explicit Matrix(const Field& field = Field::rationals(), std::size_t rows = 0, std::size_t cols = 0);

  static Matrix identity(const Field& field, std::size_t n);
  static Matrix from_rows(const Field& field, const std::vector<Vector>& rows);
  static Matrix from_ints(const Field& field, std::initializer_list<std::initializer_list<long>> rows);
  /// Columns given as vectors of equal length `rows`.
  static Matrix from_columns(const Field& field, std::size_t rows, const std::vector<Vector>& cols);
  static Matrix diagonal(const Field& field, const Vector& entries);

  [[nodiscard]] const Field& field() const noexcept { return field_; }
  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }
  [[nodiscard]] bool is_zero() const noexcept;
  [[nodiscard]] bool is_identity() const noexcept;

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] Vector row(std::size_t i) const;
  [[nodiscard]] Vector col(std::size_t j) const;
  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] Matrix pow(std::uint64_t exponent) const;
  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  [[nodiscard]] Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Scalar& c);
  [[nodiscard]] Matrix operator-() const;

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(Matrix a, const Scalar& c) { return a *= c; }
  friend Matrix operator*(const Scalar& c, Matrix a) { return a *= c; }
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) noexcept;

  /// One row per line, entries separated by spaces.
  [[nodiscard]] std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

inline std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.to_string(); }

[[nodiscard]] Matrix block_diagonal(const Field& field, const std::vector<Matrix>& blocks);
[[nodiscard]] Matrix hconcat(const Matrix& a, const Matrix& b);

/// Fraction-free Bareiss elimination over Q, Gaussian elimination over F_p.
[[nodiscard]] Scalar det(const Matrix& m);
[[nodiscard]] std::size_t rank(const Matrix& m);

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};
/// Reduced row echelon form with unit pivots.
[[nodiscard]] Echelon rref(const Matrix& m);

/// Throws Singular when det m = 0.
[[nodiscard]] Matrix inverse(const Matrix& m);

struct LinearSolveResult {
  /// Absent when A x = b is inconsistent; free variables are set to zero.
  std::optional<Vector> particular;
  /// Kernel of A in reduced echelon form with unit pivots.
  std::vector<Vector> kernel_basis;
};
[[nodiscard]] LinearSolveResult solve_linear(const Matrix& a, const Vector& b);
[[nodiscard]] std::vector<Vector> kernel(const Matrix& a);

/// f(M) by Horner's rule.
[[nodiscard]] Matrix eval_poly(const Poly& f, const Matrix& m);

/// Companion matrix of a monic f: C e_j = e_{j+1}, last column -f_0 .. -f_{d-1}.
[[nodiscard]] Matrix companion(const Poly& f);

/// Monic characteristic polynomial det(xI - T), by fraction-free elimination
/// on the polynomial matrix xI - T.
[[nodiscard]] Poly char_poly(const Matrix& t);

}  // namespace invform
