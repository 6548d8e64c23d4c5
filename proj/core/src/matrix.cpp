#include "invform/matrix.hpp"

#include <sstream>
#include <utility>

#include "invform/error.hpp"

namespace invform {

namespace {

void require_square(const Matrix& m, const char* what) {
  if (!m.is_square()) {
    throw Error(ErrorKind::NotSquare, std::string(what) + " needs a square matrix, got " + std::to_string(m.rows()) +
                                          "x" + std::to_string(m.cols()));
  }
}

void require_same_shape(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "shapes differ");
  }
}

Scalar det_rational(const Matrix& m) {
  const std::size_t n = m.rows();
  // Clear denominators row by row, then run integer Bareiss.
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  mpq_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < n; ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).rational().get_den_mpz_t());
    }
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class v = m(i, j).rational() * l;
      a[i][j] = v.get_num();
    }
    scale *= l;
  }
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(a[k][k]) == 0) {
      std::size_t r = k + 1;
      while (r < n && sgn(a[r][k]) == 0) ++r;
      if (r == n) return Scalar::zero(m.field());
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  mpq_class result(n == 0 ? mpz_class(1) : a[n - 1][n - 1]);
  result /= scale;
  if (sign < 0) result = -result;
  return Scalar(m.field(), result);
}

Scalar det_residue(Matrix a) {
  const std::size_t n = a.rows();
  Scalar result = Scalar::one(a.field());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = k;
    while (r < n && a(r, k).is_zero()) ++r;
    if (r == n) return Scalar::zero(a.field());
    if (r != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(r, j));
      result = -result;
    }
    result *= a(k, k);
    const Scalar inv = a(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Scalar factor = a(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
    }
  }
  return result;
}

}  // namespace

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(const Field& field, const std::vector<Vector>& rows) {
  const std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw Error(ErrorKind::DimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < nc; ++j) {
      require_same_field(field, rows[i][j].field());
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::from_ints(const Field& field, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> r;
  for (const auto& row : rows) {
    Vector v;
    for (long x : row) v.emplace_back(field, x);
    r.push_back(std::move(v));
  }
  return from_rows(field, r);
}

Matrix Matrix::from_columns(const Field& field, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(field, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw Error(ErrorKind::DimensionMismatch, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::diagonal(const Field& field, const Vector& entries) {
  Matrix m(field, entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

bool Matrix::is_zero() const noexcept {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_identity() const noexcept {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& x = (*this)(i, j);
      if (i == j ? !x.is_one() : !x.is_zero()) return false;
    }
  }
  return true;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::col(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix Matrix::pow(std::uint64_t exponent) const {
  require_square(*this, "pow");
  Matrix result = identity(field_, rows_);
  Matrix base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorKind::DimensionMismatch, "block out of range");
  Matrix b(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  }
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  require_same_field(field_, m.field_);
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw Error(ErrorKind::DimensionMismatch, "block out of range");
  for (std::size_t i = 0; i < m.rows_; ++i) {
    for (std::size_t j = 0; j < m.cols_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
  }
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  require_same_shape(*this, rhs);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  require_same_shape(*this, rhs);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix r(*this);
  for (auto& x : r.data_) x = -x;
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_);
  if (a.cols_ != b.rows_) {
    throw Error(ErrorKind::DimensionMismatch, "cannot multiply " + std::to_string(a.rows_) + "x" +
                                                  std::to_string(a.cols_) + " by " + std::to_string(b.rows_) + "x" +
                                                  std::to_string(b.cols_));
  }
  Matrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector size mismatch");
  Vector out(a.rows_, Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) {
      if (!a(i, j).is_zero() && !v[j].is_zero()) out[i] += a(i, j) * v[j];
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) noexcept {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).to_string();
    os << "]\n";
  }
  return os.str();
}

Matrix block_diagonal(const Field& field, const std::vector<Matrix>& blocks) {
  std::size_t nr = 0, nc = 0;
  for (const auto& b : blocks) {
    nr += b.rows();
    nc += b.cols();
  }
  Matrix m(field, nr, nc);
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    m.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "hconcat row mismatch");
  Matrix m(a.field(), a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Scalar det(const Matrix& m) {
  require_square(m, "det");
  return m.field().is_rationals() ? det_rational(m) : det_residue(m);
}

Echelon rref(const Matrix& m) {
  Echelon e{m, {}};
  Matrix& a = e.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    }
    const Scalar inv = a(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) {
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
      }
    }
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix inverse(const Matrix& m) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  const Echelon e = rref(hconcat(m, Matrix::identity(m.field(), n)));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) {
    throw Error(ErrorKind::Singular, "matrix is not invertible");
  }
  return e.reduced.block(0, n, n, n);
}

std::vector<Vector> kernel(const Matrix& a) {
  const Echelon e = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> raw;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n, Scalar::zero(a.field()));
    v[f] = Scalar::one(a.field());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    raw.push_back(std::move(v));
  }
  if (raw.empty()) return raw;
  const Echelon k = rref(Matrix::from_rows(a.field(), raw));
  std::vector<Vector> out;
  for (std::size_t r = 0; r < k.pivots.size(); ++r) out.push_back(k.reduced.row(r));
  return out;
}

LinearSolveResult solve_linear(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length mismatch");
  for (const auto& x : b) require_same_field(a.field(), x.field());
  LinearSolveResult result;
  result.kernel_basis = kernel(a);
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < a.rows(); ++i) aug(i, a.cols()) = b[i];
  const Echelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return result;
  Vector x(a.cols(), Scalar::zero(a.field()));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
  result.particular = std::move(x);
  return result;
}

Matrix eval_poly(const Poly& f, const Matrix& m) {
  require_square(m, "eval_poly");
  require_same_field(f.field(), m.field());
  Matrix acc(m.field(), m.rows(), m.cols());
  const Matrix id = Matrix::identity(m.field(), m.rows());
  for (int i = f.degree(); i >= 0; --i) {
    acc = acc * m;
    acc += id * f.coeff(static_cast<std::size_t>(i));
  }
  return acc;
}

Matrix companion(const Poly& f) {
  if (!f.is_monic() || f.degree() < 1) throw Error(ErrorKind::InvalidInput, "companion needs a monic nonconstant polynomial");
  const auto d = static_cast<std::size_t>(f.degree());
  Matrix c(f.field(), d, d);
  for (std::size_t j = 0; j + 1 < d; ++j) c(j + 1, j) = Scalar::one(f.field());
  for (std::size_t i = 0; i < d; ++i) c(i, d - 1) = -f.coeff(i);
  return c;
}

Poly char_poly(const Matrix& t) {
  require_square(t, "char_poly");
  const Field& field = t.field();
  const std::size_t n = t.rows();
  std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n, Poly(field)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = Poly::constant(-t(i, j));
      if (i == j) a[i][j] += Poly::x(field);
    }
  }
  bool negate = false;
  Poly prev = Poly::constant(Scalar::one(field));
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k].is_zero()) {
      // Diagonal entries carry x, so a zero pivot needs a row swap; pick the
      // lowest-degree nonzero candidate to limit growth.
      std::size_t best = n;
      for (std::size_t r = k + 1; r < n; ++r) {
        if (!a[r][k].is_zero() && (best == n || a[r][k].degree() < a[best][k].degree())) best = r;
      }
      if (best == n) return Poly(field);
      std::swap(a[k], a[best]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = Poly(field);
    }
    prev = a[k][k];
  }
  Poly result = n == 0 ? Poly::constant(Scalar::one(field)) : a[n - 1][n - 1];
  if (negate) result = -result;
  return result;
}

}  // namespace invform
