#include "invform/isometry.hpp"

#include <optional>
#include <utility>

#include "invform/error.hpp"

namespace invform {

std::string_view to_string(SummandKind kind) noexcept {
  switch (kind) {
    case SummandKind::OddIndecomposable: return "odd-indecomposable";
    case SummandKind::EvenIndecomposable: return "even-indecomposable";
    case SummandKind::StandardPair: return "standard-pair";
  }
  return "?";
}

std::string_view to_string(BoundCase c) noexcept {
  switch (c) {
    case BoundCase::WithinWitt: return "within-witt";
    case BoundCase::EvenDim2l: return "even-dim-2l";
    case BoundCase::GeneralOdd: return "general-odd";
    case BoundCase::SymplecticEven: return "symplectic-even";
  }
  return "?";
}

namespace {

Scalar form(const Matrix& b, const Vector& x, const Vector& y) {
  const Vector by = b * y;
  Scalar s = Scalar::zero(b.field());
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * by[i];
  return s;
}

Vector axpy(const Vector& y, const Scalar& a, const Vector& x) {
  Vector out = y;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += a * x[i];
  return out;
}

std::vector<Vector> columns(const Matrix& m) {
  std::vector<Vector> out;
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.col(j));
  return out;
}

std::vector<Vector> orbit(const Matrix& nil, const Vector& v, std::size_t k) {
  std::vector<Vector> out{v};
  while (out.size() < k) out.push_back(nil * out.back());
  return out;
}

void require_verified(const Matrix& t, const FormCertificate& cert) {
  if (!(cert.map() == t)) throw Error(ErrorKind::UnverifiedForm, "certificate belongs to a different map");
  if (!verify_form(t, cert.gram(), cert.symmetry(), cert.setting()).all() || cert.setting() != Setting::Invariant) {
    throw Error(ErrorKind::UnverifiedForm, "form is not a verified invariant form of T");
  }
}

// Adds multiples of N^s w to v until v spans a totally isotropic cyclic
// subspace. Each step clears B(v, N^m v) for one m without disturbing larger m.
Vector isotropize(const Matrix& b, const Matrix& nil, Vector v, const Vector& w, std::size_t k) {
  for (std::size_t m = k; m-- > 0;) {
    std::vector<Vector> vo = orbit(nil, v, k);
    const Scalar qm = form(b, v, vo[m]);
    if (qm.is_zero()) continue;
    const std::size_t s = k - 1 - m;
    const std::vector<Vector> wo = orbit(nil, w, k);
    const Vector nsw = wo[s];
    const Scalar lin = form(b, v, (nil.pow(m) * nsw)) + form(b, nsw, vo[m]);
    if (lin.is_zero()) throw Error(ErrorKind::Internal, "isotropic correction has no linear term");
    v = axpy(v, -qm / lin, nsw);
  }
  const std::vector<Vector> vo = orbit(nil, v, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!form(b, vo[i], vo[j]).is_zero()) throw Error(ErrorKind::Internal, "cyclic half is not isotropic");
    }
  }
  return v;
}

// Tonelli-Shanks over F_p, p odd; r must be a square.
Scalar square_root(const Scalar& r) {
  const Field& field = r.field();
  if (r.is_zero()) return r;
  const std::uint64_t p = field.modulus();
  if (p % 4 == 3) return r.pow((p + 1) / 4);
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  Scalar z(field, 2L);
  while (z.is_square()) z += Scalar::one(field);
  Scalar c = z.pow(q);
  Scalar x = r.pow((q + 1) / 2);
  Scalar t = r.pow(q);
  unsigned m = s;
  while (!t.is_one()) {
    unsigned i = 0;
    Scalar t2 = t;
    while (!t2.is_one()) {
      t2 = t2 * t2;
      ++i;
    }
    Scalar bb = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) bb = bb * bb;
    x = x * bb;
    c = bb * bb;
    t = t * c;
    m = i;
  }
  return x;
}

// Congruence diagonalization: columns of P with P^t G P diagonal.
std::pair<Matrix, Vector> diagonalize(const Matrix& g) {
  const Field& field = g.field();
  const std::size_t d = g.rows();
  Matrix p = Matrix::identity(field, d);
  Matrix a = g;
  auto add_to = [&](std::size_t dst, std::size_t src, const Scalar& c) {
    // e_dst <- e_dst + c e_src
    for (std::size_t i = 0; i < d; ++i) p(i, dst) += c * p(i, src);
    for (std::size_t i = 0; i < d; ++i) a(i, dst) += c * a(i, src);
    for (std::size_t j = 0; j < d; ++j) a(dst, j) += c * a(src, j);
  };
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d && a(i, i).is_zero(); ++j) {
      if (a(j, j).is_zero()) continue;
      for (std::size_t r = 0; r < d; ++r) std::swap(p(r, i), p(r, j));
      for (std::size_t r = 0; r < d; ++r) std::swap(a(r, i), a(r, j));
      for (std::size_t c = 0; c < d; ++c) std::swap(a(i, c), a(j, c));
    }
    // All remaining diagonal entries vanish: e_i + e_j has value 2 a_ij.
    for (std::size_t j = i + 1; j < d && a(i, i).is_zero(); ++j) {
      if (!a(i, j).is_zero()) add_to(i, j, Scalar::one(field));
    }
    if (a(i, i).is_zero()) continue;
    for (std::size_t j = i + 1; j < d; ++j) {
      if (!a(i, j).is_zero()) add_to(j, i, -a(i, j) / a(i, i));
    }
  }
  Vector diag;
  for (std::size_t i = 0; i < d; ++i) diag.push_back(a(i, i));
  return {p, diag};
}

Vector unit(const Field& field, std::size_t d, std::size_t i) {
  Vector v(d, Scalar::zero(field));
  v[i] = Scalar::one(field);
  return v;
}

std::optional<Vector> isotropic_vector(const Matrix& g) {
  const Field& field = g.field();
  const std::size_t d = g.rows();
  for (std::size_t i = 0; i < d; ++i) {
    if (g(i, i).is_zero()) return unit(field, d, i);
  }
  // Coordinate planes: a x^2 + 2 b x + c = 0 is solvable iff b^2 - ac is a square.
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const Scalar disc = g(i, j) * g(i, j) - g(i, i) * g(j, j);
      if (!disc.is_square()) continue;
      Vector v = unit(field, d, j);
      v[i] = (-g(i, j) + square_root(disc)) / g(i, i);
      return v;
    }
  }
  if (d < 3) return std::nullopt;
  // a1 x^2 + a2 y^2 + a3 = 0 always has a solution; scan x = 0, 1, 2, ...
  const auto [p, a] = diagonalize(g);
  for (long x = 0;; ++x) {
    const Scalar xs(field, x);
    const Scalar r = (-a[2] - a[0] * xs * xs) / a[1];
    if (!r.is_square()) continue;
    Vector local(d, Scalar::zero(field));
    local[0] = xs;
    local[1] = square_root(r);
    local[2] = Scalar::one(field);
    return p * local;
  }
}

}  // namespace

OrthogonalSummandReport orthogonal_decomposition(const Matrix& t, const FormCertificate& cert) {
  require_verified(t, cert);
  const Field& field = t.field();
  const std::size_t n = t.rows();
  const Matrix id = Matrix::identity(field, n);
  OrthogonalSummandReport report;
  if ((t - id).pow(n).is_zero()) {
    report.sign = 1;
  } else if ((t + id).pow(n).is_zero()) {
    report.sign = -1;
  } else {
    throw Error(ErrorKind::NotUnipotentType, "minimal polynomial is not a power of x - 1 or x + 1");
  }
  const Matrix nil = (report.sign == 1 ? t : t * Scalar(field, -1L)) - id;
  const Matrix& b = cert.gram();
  const bool symmetric = cert.symmetry() == Symmetry::Symmetric;

  Matrix w = id;
  while (w.cols() > 0) {
    std::size_t k = 1;
    for (Matrix p = nil * w; !p.is_zero(); p = nil * p) ++k;
    const Matrix top = nil.pow(k - 1);
    const std::vector<Vector> cols = columns(w);

    // (x, y) -> B(x, N^{k-1} y); on a single block of the right parity this is
    // symmetric, so polarization over e_i and e_i + e_j finds any nonzero value.
    auto pairing = [&](const Vector& x, const Vector& y) { return form(b, x, top * y); };
    std::optional<Vector> single;
    std::vector<Vector> candidates = cols;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      for (std::size_t j = i + 1; j < cols.size(); ++j) candidates.push_back(axpy(cols[i], Scalar::one(field), cols[j]));
    }
    for (const auto& c : candidates) {
      if (!pairing(c, c).is_zero()) {
        single = c;
        break;
      }
    }

    OrthogonalSummand summand;
    summand.block_size = k;
    if (single) {
      summand.basis = Matrix::from_columns(field, n, orbit(nil, *single, k));
      summand.kind = symmetric ? SummandKind::OddIndecomposable : SummandKind::EvenIndecomposable;
    } else {
      std::optional<std::pair<Vector, Vector>> pair;
      for (std::size_t i = 0; i < cols.size() && !pair; ++i) {
        for (std::size_t j = 0; j < cols.size() && !pair; ++j) {
          if (!pairing(cols[i], cols[j]).is_zero()) pair = std::make_pair(cols[i], cols[j]);
        }
      }
      if (!pair) throw Error(ErrorKind::Internal, "top level of the form vanishes");
      const Vector v = isotropize(b, nil, pair->first, pair->second, k);
      const Vector u = isotropize(b, nil, pair->second, v, k);
      std::vector<Vector> basis = orbit(nil, v, k);
      for (auto& x : orbit(nil, u, k)) basis.push_back(std::move(x));
      summand.basis = Matrix::from_columns(field, n, basis);
      summand.kind = SummandKind::StandardPair;
      summand.half = k;
    }
    const Matrix gram = summand.basis.transpose() * b * summand.basis;
    if (det(gram).is_zero()) throw Error(ErrorKind::Internal, "split summand is degenerate");
    if (summand.kind == SummandKind::OddIndecomposable && k % 2 == 0) {
      throw Error(ErrorKind::Internal, "symmetric form on an even block");
    }
    if (summand.kind == SummandKind::EvenIndecomposable && k % 2 == 1) {
      throw Error(ErrorKind::Internal, "skew form on an odd block");
    }

    // Orthogonal complement inside the current subspace.
    const std::vector<Vector> ker = kernel(summand.basis.transpose() * b * w);
    w = ker.empty() ? Matrix(field, n, 0) : w * Matrix::from_columns(field, w.cols(), ker);
    report.summands.push_back(std::move(summand));
  }
  return report;
}

std::size_t witt_index(const Matrix& gram, Symmetry symmetry) {
  const Field& field = gram.field();
  if (field.is_rationals()) throw Error(ErrorKind::RationalsUnsupported, "Witt index over Q");
  if (field.modulus() == 2) throw Error(ErrorKind::SmallCharacteristic, "Witt index needs odd characteristic");
  if (!gram.is_square()) throw Error(ErrorKind::NotSquare, "Gram matrix is not square");
  const Matrix gt = gram.transpose();
  if (symmetry == Symmetry::Symmetric ? !(gram == gt) : !(gram + gt).is_zero()) {
    throw Error(ErrorKind::InvalidInput, "Gram matrix does not have the stated symmetry");
  }
  if (det(gram).is_zero()) throw Error(ErrorKind::Degenerate, "form is degenerate");
  if (symmetry == Symmetry::SkewSymmetric) return gram.rows() / 2;

  std::size_t l = 0;
  Matrix g = gram;
  while (g.rows() >= 2) {
    const std::optional<Vector> v = isotropic_vector(g);
    if (!v) break;
    const std::size_t d = g.rows();
    const Vector gv = g * *v;
    std::size_t i = 0;
    while (gv[i].is_zero()) ++i;
    Vector w = unit(field, d, i);
    w[i] = Scalar::one(field) / gv[i];
    // Make w isotropic while keeping B(v, w) = 1.
    w = axpy(w, -form(g, w, w) / Scalar(field, 2L), *v);
    const Matrix h = Matrix::from_columns(field, d, {*v, w});
    const Matrix k = Matrix::from_columns(field, d, kernel(h.transpose() * g));
    g = k.cols() == 0 ? Matrix(field, 0, 0) : k.transpose() * g * k;
    ++l;
  }
  return l;
}

LevelReport level_analysis(const Matrix& t, const FormCertificate& cert) {
  require_verified(t, cert);
  const Field& field = t.field();
  if (field.is_rationals()) throw Error(ErrorKind::RationalsUnsupported, "level bounds need the Witt index over F_p");
  const std::size_t n = t.rows();
  const Matrix nil = t - Matrix::identity(field, n);
  if (!nil.pow(n).is_zero()) throw Error(ErrorKind::NotUnipotent, "T - I is not nilpotent");

  LevelReport r;
  r.dim = n;
  r.level = 1;
  for (Matrix p = nil; !p.is_zero(); p = p * nil) ++r.level;
  r.witt_index = witt_index(cert.gram(), cert.symmetry());
  const std::size_t k = r.level;
  const std::size_t l = r.witt_index;
  if (k <= l) {
    r.bound_case = BoundCase::WithinWitt;
    r.bound_satisfied = true;
  } else if (cert.symmetry() == Symmetry::SkewSymmetric) {
    r.bound_case = BoundCase::SymplecticEven;
    r.bound_satisfied = k % 2 == 0 && k <= 2 * l;
  } else if (n == 2 * l) {
    r.bound_case = BoundCase::EvenDim2l;
    r.bound_satisfied = k % 2 == 1 && k + 1 <= 2 * l;
  } else {
    r.bound_case = BoundCase::GeneralOdd;
    r.bound_satisfied = k % 2 == 1 && k <= 2 * l + 1;
  }
  return r;
}

}  // namespace invform
