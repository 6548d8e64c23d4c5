#include "invform/canonical.hpp"

#include <algorithm>

#include "invform/error.hpp"

namespace invform {

namespace {

using PolyMatrix = std::vector<std::vector<Poly>>;

struct SmithResult {
  std::vector<Poly> factors;
  PolyMatrix row_inverse;  // U^-1 where U (xI - T) V = diag(factors)
};

// Smith normal form of xI - T over F[x]. Row operations are mirrored onto U^-1
// so that column i of U^-1 maps to a generator of the i-th cyclic summand.
SmithResult smith(const Matrix& t) {
  if (!t.is_square()) throw Error(ErrorKind::NotSquare, "Smith form needs a square matrix");
  const Field& field = t.field();
  const std::size_t n = t.rows();
  PolyMatrix m(n, std::vector<Poly>(n, Poly(field)));
  PolyMatrix uinv(n, std::vector<Poly>(n, Poly(field)));
  for (std::size_t i = 0; i < n; ++i) {
    uinv[i][i] = Poly::constant(Scalar::one(field));
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = Poly::constant(-t(i, j));
      if (i == j) m[i][j] += Poly::x(field);
    }
  }

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    std::swap(m[a], m[b]);
    for (std::size_t r = 0; r < n; ++r) std::swap(uinv[r][a], uinv[r][b]);
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < n; ++r) std::swap(m[r][a], m[r][b]);
  };
  // row_i -= q * row_k
  auto sub_row = [&](std::size_t i, std::size_t k, const Poly& q) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!m[k][j].is_zero()) m[i][j] -= q * m[k][j];
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (!uinv[r][i].is_zero()) uinv[r][k] += q * uinv[r][i];
    }
  };
  // row_k += row_i
  auto add_row = [&](std::size_t k, std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) m[k][j] += m[i][j];
    for (std::size_t r = 0; r < n; ++r) uinv[r][i] -= uinv[r][k];
  };

  for (std::size_t s = 0; s < n; ++s) {
    for (;;) {
      std::size_t bi = n, bj = n;
      for (std::size_t i = s; i < n; ++i) {
        for (std::size_t j = s; j < n; ++j) {
          if (!m[i][j].is_zero() && (bi == n || m[i][j].degree() < m[bi][bj].degree())) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == n) throw Error(ErrorKind::Internal, "xI - T has a zero minor block");
      if (bi != s) swap_rows(s, bi);
      if (bj != s) swap_cols(s, bj);

      bool clean = true;
      for (std::size_t i = s + 1; i < n; ++i) {
        if (m[i][s].is_zero()) continue;
        sub_row(i, s, m[i][s] / m[s][s]);
        if (!m[i][s].is_zero()) clean = false;
      }
      for (std::size_t j = s + 1; j < n; ++j) {
        if (m[s][j].is_zero()) continue;
        const Poly q = m[s][j] / m[s][s];
        for (std::size_t r = 0; r < n; ++r) {
          if (!m[r][s].is_zero()) m[r][j] -= q * m[r][s];
        }
        if (!m[s][j].is_zero()) clean = false;
      }
      if (!clean) continue;

      std::size_t bad = n;
      for (std::size_t i = s + 1; i < n && bad == n; ++i) {
        for (std::size_t j = s + 1; j < n; ++j) {
          if (!divides(m[s][s], m[i][j])) {
            bad = i;
            break;
          }
        }
      }
      if (bad == n) break;
      add_row(s, bad);
    }
    const Scalar lc = m[s][s].leading();
    if (!lc.is_one()) {
      const Scalar inv = lc.inverse();
      for (std::size_t j = 0; j < n; ++j) m[s][j] *= inv;
      for (std::size_t r = 0; r < n; ++r) uinv[r][s] *= lc;
    }
  }

  SmithResult out;
  for (std::size_t i = 0; i < n; ++i) out.factors.push_back(m[i][i]);
  out.row_inverse = std::move(uinv);
  return out;
}

Vector apply_poly(const Poly& f, const Matrix& t, const Vector& v) {
  Vector acc(v.size(), Scalar::zero(t.field()));
  for (int i = f.degree(); i >= 0; --i) {
    acc = t * acc;
    const Scalar c = f.coeff(static_cast<std::size_t>(i));
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j) acc[j] += c * v[j];
  }
  return acc;
}

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

unsigned multiplicity_of_root(Poly& f, const Scalar& root) {
  const Poly lin = Poly::linear(root);
  unsigned e = 0;
  while (f.degree() > 0) {
    auto [q, r] = divmod(f, lin);
    if (!r.is_zero()) break;
    f = q;
    ++e;
  }
  return e;
}

Matrix kernel_matrix(const Matrix& a) {
  return Matrix::from_columns(a.field(), a.cols(), kernel(a));
}

}  // namespace

bool divisor_less(const ElementaryDivisor& a, const ElementaryDivisor& b) {
  const auto c = a.p.canonical_compare(b.p);
  if (c != 0) return c < 0;
  if (a.k != b.k) return a.k < b.k;
  return a.multiplicity < b.multiplicity;
}

std::vector<Poly> smith_normal_form_xI_minus_T(const Matrix& t) { return smith(t).factors; }

Poly min_poly(const Matrix& t) {
  if (t.rows() == 0) return Poly::constant(Scalar::one(t.field()));
  return smith(t).factors.back();
}

std::vector<ElementaryDivisor> elementary_divisors(const Matrix& t, const FactorOptions& options) {
  std::vector<ElementaryDivisor> out;
  for (const Poly& d : smith_normal_form_xI_minus_T(t)) {
    if (d.degree() <= 0) continue;
    for (const auto& [p, k] : factor(d, options).factors) {
      auto it = std::find_if(out.begin(), out.end(), [&](const ElementaryDivisor& e) { return e.k == k && e.p == p; });
      if (it == out.end()) {
        out.push_back({p, k, 1});
      } else {
        ++it->multiplicity;
      }
    }
  }
  std::sort(out.begin(), out.end(), divisor_less);
  return out;
}

Matrix restrict_to(const Matrix& t, const Matrix& basis) {
  const std::size_t k = basis.cols();
  const Echelon e = rref(hconcat(basis, t * basis));
  if (e.pivots.size() != k || (k > 0 && e.pivots.back() != k - 1)) {
    throw Error(ErrorKind::Internal, "subspace basis is rank deficient or not invariant");
  }
  return e.reduced.block(0, k, k, k);
}

PrimaryDecomposition primary_decomposition(const Matrix& t) {
  if (!t.is_square()) throw Error(ErrorKind::NotSquare, "primary decomposition needs a square matrix");
  const Field& field = t.field();
  if (field.is_prime_field() && field.modulus() == 2) {
    throw Error(ErrorKind::SmallCharacteristic, "x - 1 and x + 1 coincide in characteristic 2");
  }
  if (det(t).is_zero()) throw Error(ErrorKind::Singular, "T is not invertible");
  const std::size_t n = t.rows();
  const Matrix id = Matrix::identity(field, n);

  PrimaryDecomposition out;
  Poly chi = char_poly(t);
  out.e = multiplicity_of_root(chi, Scalar::one(field));
  out.f = multiplicity_of_root(chi, -Scalar::one(field));
  out.chi_o = chi;
  out.basis_plus = kernel_matrix((t - id).pow(n));
  out.basis_minus = kernel_matrix((t + id).pow(n));
  out.basis_o = kernel_matrix(eval_poly(out.chi_o, t));
  if (out.basis_plus.cols() != out.e || out.basis_minus.cols() != out.f ||
      out.basis_o.cols() != static_cast<std::size_t>(out.chi_o.degree())) {
    throw Error(ErrorKind::Internal, "primary component dimensions disagree with the characteristic polynomial");
  }
  out.t_o = restrict_to(t, out.basis_o);
  (void)restrict_to(t, out.basis_plus);
  (void)restrict_to(t, out.basis_minus);
  if (rank(hconcat(hconcat(out.basis_plus, out.basis_minus), out.basis_o)) != n) {
    throw Error(ErrorKind::Internal, "primary components do not span V");
  }
  return out;
}

std::vector<IndecomposableSummand> indecomposable_decomposition(const Matrix& t, const FactorOptions& options) {
  const Field& field = t.field();
  const std::size_t n = t.rows();
  const SmithResult snf = smith(t);

  std::vector<IndecomposableSummand> out;
  for (std::size_t i = 0; i < n; ++i) {
    const Poly& d = snf.factors[i];
    if (d.degree() <= 0) continue;
    Vector w(n, Scalar::zero(field));
    for (std::size_t j = 0; j < n; ++j) {
      Vector ej(n, Scalar::zero(field));
      ej[j] = Scalar::one(field);
      const Vector term = apply_poly(snf.row_inverse[j][i] % snf.factors.back(), t, ej);
      for (std::size_t r = 0; r < n; ++r) w[r] += term[r];
    }
    for (const auto& [p, k] : factor(d, options).factors) {
      const Poly pk = p.pow(k);
      const Vector v = apply_poly(d / pk, t, w);
      IndecomposableSummand s;
      s.divisor = {p, k, 0};
      s.cyclic_vector = v;
      const std::size_t dim = static_cast<std::size_t>(pk.degree());
      std::vector<Vector> cols{v};
      if (p.degree() == 1) {
        const Matrix shift = t - Matrix::identity(field, n) * (-p.constant_term());
        for (std::size_t c = 1; c < dim; ++c) cols.push_back(shift * cols.back());
      } else {
        for (std::size_t c = 1; c < dim; ++c) cols.push_back(t * cols.back());
      }
      if (!is_zero_vector(apply_poly(pk, t, v))) {
        throw Error(ErrorKind::Internal, "cyclic vector not annihilated by its divisor");
      }
      s.basis = Matrix::from_columns(field, n, cols);
      out.push_back(std::move(s));
    }
  }

  std::stable_sort(out.begin(), out.end(), [](const IndecomposableSummand& a, const IndecomposableSummand& b) {
    const auto c = a.divisor.p.canonical_compare(b.divisor.p);
    if (c != 0) return c < 0;
    return a.divisor.k < b.divisor.k;
  });
  for (std::size_t i = 0; i < out.size();) {
    std::size_t j = i;
    while (j < out.size() && out[j].divisor.p == out[i].divisor.p && out[j].divisor.k == out[i].divisor.k) ++j;
    for (std::size_t c = i; c < j; ++c) {
      out[c].divisor.multiplicity = static_cast<unsigned>(j - i);
      out[c].copy_index = static_cast<unsigned>(c - i);
    }
    i = j;
  }

  Matrix all(field, n, 0);
  for (const auto& s : out) all = hconcat(all, s.basis);
  if (all.cols() != n || rank(all) != n) {
    throw Error(ErrorKind::Internal, "indecomposable summands do not form a direct sum");
  }
  return out;
}

JordanChevalley jordan_chevalley(const Matrix& t, JcMode mode) {
  if (!t.is_square()) throw Error(ErrorKind::NotSquare, "Jordan-Chevalley needs a square matrix");
  const Field& field = t.field();
  const std::size_t n = t.rows();
  require_large_characteristic(field, n, "jordan_chevalley");
  if (mode == JcMode::Multiplicative && det(t).is_zero()) throw Error(ErrorKind::Singular, "T is not invertible");

  const Poly m = min_poly(t);
  const Poly s = m / poly_gcd(m, m.derivative());
  const Poly ds = s.derivative();
  Matrix a = t;
  for (std::size_t iter = 0; iter <= n + 1; ++iter) {
    const Matrix sa = eval_poly(s, a);
    if (sa.is_zero()) break;
    a -= sa * inverse(eval_poly(ds, a));
  }
  if (!eval_poly(s, a).is_zero()) throw Error(ErrorKind::Internal, "Newton iteration did not converge");

  JordanChevalley out;
  out.mode = mode;
  out.semisimple = a;
  out.unipotent_or_nilpotent = mode == JcMode::Multiplicative ? inverse(a) * t : t - a;
  return out;
}

}  // namespace invform
