#include "invform/construction.hpp"

#include <optional>
#include <random>

#include "invform/canonical.hpp"
#include "invform/decision.hpp"
#include "invform/error.hpp"
#include "invform/oracle.hpp"

namespace invform {

namespace {

Scalar half(const Field& field) { return Scalar::one(field) / Scalar(field, 2L); }

Matrix lower_shift(const Field& field, std::size_t k) {
  Matrix l(field, k, k);
  for (std::size_t i = 0; i + 1 < k; ++i) l(i + 1, i) = Scalar::one(field);
  return l;
}

Scalar trace(const Matrix& m) {
  Scalar t = Scalar::zero(m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

void require_parity(std::size_t k, Symmetry symmetry, const char* what) {
  const bool ok = symmetry == Symmetry::Symmetric ? k % 2 == 1 : k % 2 == 0;
  if (!ok) {
    throw Error(ErrorKind::ParityViolation, std::string(what) + " of size " + std::to_string(k) + " has no " +
                                                std::string(to_string(symmetry)) + " non-degenerate invariant form");
  }
}

// Invariant forms of I + L are determined by their first column through
// a_{i,j} = -a_{i+1,j-1} - a_{i+1,j}.
Matrix form_from_first_column(const Field& field, const Vector& c) {
  const std::size_t k = c.size();
  Matrix a(field, k, k);
  for (std::size_t i = k; i-- > 0;) {
    a(i, 0) = c[i];
    for (std::size_t j = 1; j < k; ++j) {
      if (i + 1 < k) a(i, j) = -a(i + 1, j - 1) - a(i + 1, j);
    }
  }
  return a;
}

std::optional<Matrix> unipotent_form_with(const Field& field, std::size_t k, Symmetry symmetry,
                                          const std::optional<Scalar>& corner) {
  const Matrix t = Matrix::identity(field, k) + lower_shift(field, k);
  const Matrix tt = t.transpose();
  std::vector<Matrix> units;
  for (std::size_t u = 0; u < k; ++u) {
    Vector e(k, Scalar::zero(field));
    e[u] = Scalar::one(field);
    units.push_back(form_from_first_column(field, e));
  }
  std::vector<Vector> rows;
  Vector rhs;
  auto add_entry_rows = [&](auto&& entry) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        Vector row;
        bool nonzero = false;
        for (std::size_t u = 0; u < k; ++u) {
          row.push_back(entry(u, i, j));
          nonzero = nonzero || !row.back().is_zero();
        }
        if (nonzero) {
          rows.push_back(std::move(row));
          rhs.push_back(Scalar::zero(field));
        }
      }
    }
  };
  std::vector<Matrix> images;
  for (const auto& f : units) images.push_back(tt * f * t - f);
  add_entry_rows([&](std::size_t u, std::size_t i, std::size_t j) { return images[u](i, j); });
  add_entry_rows([&](std::size_t u, std::size_t i, std::size_t j) {
    return symmetry == Symmetry::Symmetric ? units[u](i, j) - units[u](j, i) : units[u](i, j) + units[u](j, i);
  });
  // Anti-diagonal seed a_{1,k} = 1, so a_{k,1} = +-1.
  Vector seed(k, Scalar::zero(field));
  seed[k - 1] = Scalar::one(field);
  rows.push_back(seed);
  rhs.push_back(symmetry == Symmetry::Symmetric ? Scalar::one(field) : -Scalar::one(field));
  if (corner) {
    Vector first(k, Scalar::zero(field));
    first[0] = Scalar::one(field);
    rows.push_back(first);
    rhs.push_back(*corner);
  }
  const LinearSolveResult sol = solve_linear(Matrix::from_rows(field, rows), rhs);
  if (!sol.particular) return std::nullopt;
  return form_from_first_column(field, *sol.particular);
}

Matrix krylov(const Matrix& a, const Vector& u) {
  std::vector<Vector> cols{u};
  while (cols.size() < a.rows()) cols.push_back(a * cols.back());
  return Matrix::from_columns(a.field(), a.rows(), cols);
}

// Deterministic scan: e_i, then e_i + e_j, then seeded random vectors.
Vector cyclic_vector(const Matrix& a) {
  const Field& field = a.field();
  const std::size_t n = a.rows();
  auto try_vector = [&](const Vector& v) { return !det(krylov(a, v)).is_zero(); };
  for (std::size_t i = 0; i < n; ++i) {
    Vector v(n, Scalar::zero(field));
    v[i] = Scalar::one(field);
    if (try_vector(v)) return v;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v(n, Scalar::zero(field));
      v[i] = Scalar::one(field);
      v[j] = Scalar::one(field);
      if (try_vector(v)) return v;
    }
  }
  std::mt19937_64 rng(n);
  std::uniform_int_distribution<long> d(-7, 7);
  for (int trial = 0; trial < 256; ++trial) {
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(field, d(rng));
    if (try_vector(v)) return v;
  }
  throw Error(ErrorKind::NotDualPair, "map is not cyclic");
}

BlockForm oracle_block(const Matrix& map, Symmetry symmetry, Setting setting) {
  const InvariantFormSpace space = solve_form_space(map, symmetry, setting);
  std::optional<Matrix> g = find_nondegenerate(space);
  if (!g) throw Error(ErrorKind::Internal, "oracle found no non-degenerate form on a block");
  return {*g, "oracle"};
}

std::string divisor_label(const Poly& p, unsigned k) {
  std::string s = "(" + p.to_string() + ")";
  if (k > 1) s += "^" + std::to_string(k);
  return s;
}

struct Piece {
  Matrix basis;
  BlockForm form;
  std::string label;
};

struct Group {
  Poly p;
  unsigned k;
  std::vector<const IndecomposableSummand*> copies;
};

std::vector<Group> group_summands(const std::vector<IndecomposableSummand>& summands) {
  std::vector<Group> groups;
  for (const auto& s : summands) {
    if (groups.empty() || !(groups.back().p == s.divisor.p) || groups.back().k != s.divisor.k) {
      groups.push_back({s.divisor.p, s.divisor.k, {}});
    }
    groups.back().copies.push_back(&s);
  }
  return groups;
}

// Columns N^i R^j v, i < d, j < deg p.
Matrix adapted_basis(const JordanChevalley& jc, const IndecomposableSummand& s) {
  const Field& field = s.basis.field();
  const std::size_t n = s.basis.rows();
  const Matrix& r = jc.semisimple;
  const Matrix nil = jc.mode == JcMode::Multiplicative ? jc.unipotent_or_nilpotent - Matrix::identity(field, n)
                                                       : jc.unipotent_or_nilpotent;
  std::vector<Vector> cols;
  Vector w = s.cyclic_vector;
  for (unsigned i = 0; i < s.divisor.k; ++i) {
    Vector c = w;
    for (int j = 0; j < s.divisor.p.degree(); ++j) {
      cols.push_back(c);
      c = r * c;
    }
    w = nil * w;
  }
  return Matrix::from_columns(field, n, cols);
}

Matrix alternate_signs(Matrix basis) {
  for (std::size_t j = 1; j < basis.cols(); j += 2) {
    for (std::size_t i = 0; i < basis.rows(); ++i) basis(i, j) = -basis(i, j);
  }
  return basis;
}

FormCertificate assemble(const Matrix& map, Symmetry symmetry, Setting setting, std::vector<Piece>& pieces) {
  const Field& field = map.field();
  const std::size_t n = map.rows();
  Matrix p(field, n, 0);
  std::vector<Matrix> grams;
  std::vector<BlockProvenance> provenance;
  std::size_t offset = 0;
  for (auto& piece : pieces) {
    const Matrix local = restrict_to(map, piece.basis);
    if (!verify_form(local, piece.form.gram, symmetry, setting).all()) {
      piece.form = oracle_block(local, symmetry, setting);
    }
    provenance.push_back({piece.form.route, piece.label, offset, piece.basis.cols()});
    offset += piece.basis.cols();
    p = hconcat(p, piece.basis);
    grams.push_back(piece.form.gram);
  }
  if (p.cols() != n) throw Error(ErrorKind::Internal, "blocks do not cover the space");
  const Matrix pinv = inverse(p);
  const Matrix gram = pinv.transpose() * block_diagonal(field, grams) * pinv;
  return FormCertificate::create(map, gram, symmetry, setting, std::move(provenance));
}

std::string obstruction_summary(const DecisionReport& report) {
  std::string s;
  for (const auto& o : report.obstructions) {
    if (!s.empty()) s += "; ";
    s += std::string(to_string(o.kind)) + " " + o.detail;
  }
  return s;
}

FormCertificate construct(const Matrix& map, Symmetry symmetry, Setting setting, const FactorOptions& options) {
  const DecisionOptions decision_options{options, false};
  const DecisionReport report = setting == Setting::Invariant ? decide_invariant_form(map, symmetry, decision_options)
                                                              : decide_infinitesimal_form(map, symmetry, decision_options);
  if (!report.exists) throw Error(ErrorKind::DecisionFalse, obstruction_summary(report));

  const Field& field = map.field();
  const std::size_t n = map.rows();
  const std::vector<IndecomposableSummand> summands = indecomposable_decomposition(map, options);
  const std::vector<Group> groups = group_summands(summands);
  std::optional<JordanChevalley> jc;
  const bool invariant = setting == Setting::Invariant;

  std::vector<Piece> pieces;
  std::vector<bool> done(groups.size(), false);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    if (done[gi]) continue;
    done[gi] = true;
    const Group& g = groups[gi];
    const std::string label = divisor_label(g.p, g.k);

    int lambda = 0;
    bool special = false;
    if (invariant) {
      if (g.p == Poly::linear(Scalar::one(field))) {
        special = true;
        lambda = 1;
      } else if (g.p == Poly::linear(-Scalar::one(field))) {
        special = true;
        lambda = -1;
      }
    } else {
      special = g.p == Poly::x(field);
    }

    if (special) {
      const bool right_parity = (symmetry == Symmetry::Symmetric) == (g.k % 2 == 1);
      auto basis_of = [&](const IndecomposableSummand* s) { return lambda == -1 ? alternate_signs(s->basis) : s->basis; };
      if (right_parity) {
        for (const auto* s : g.copies) {
          BlockForm form = invariant ? BlockForm{unipotent_block_form(field, g.k, symmetry, lambda), "unipotent-block"}
                                     : BlockForm{nilpotent_block_form(field, g.k, symmetry), "nilpotent-block"};
          pieces.push_back({basis_of(s), std::move(form), label});
        }
      } else {
        for (std::size_t c = 0; c + 1 < g.copies.size(); c += 2) {
          const Matrix pa = basis_of(g.copies[c]);
          const Matrix pb = basis_of(g.copies[c + 1]);
          Matrix gram = hyperbolic_pairing(restrict_to(map, pa), restrict_to(map, pb), symmetry, setting);
          pieces.push_back({hconcat(pa, pb), {std::move(gram), "hyperbolic-pairing"}, label + " x2"});
        }
      }
      continue;
    }

    const bool self_dual = invariant ? is_self_dual(g.p) : is_additively_self_dual(g.p);
    if (self_dual) {
      const QuotientRingContext ctx = make_quotient_context(g.p, g.k, setting);
      const BlockForm form = self_dual_block_form(ctx, symmetry);
      for (const auto* s : g.copies) {
        Matrix basis = s->basis;
        if (g.k > 1) {
          if (!jc) jc = jordan_chevalley(map, invariant ? JcMode::Multiplicative : JcMode::Additive);
          basis = adapted_basis(*jc, *s);
        }
        pieces.push_back({std::move(basis), form, label});
      }
      continue;
    }

    const Poly dual = invariant ? dual_poly(g.p) : additive_dual_poly(g.p);
    std::size_t partner = groups.size();
    for (std::size_t gj = 0; gj < groups.size(); ++gj) {
      if (!done[gj] && groups[gj].k == g.k && groups[gj].p == dual) partner = gj;
    }
    if (partner == groups.size() || groups[partner].copies.size() != g.copies.size()) {
      throw Error(ErrorKind::Internal, "dual partner missing for " + label);
    }
    done[partner] = true;
    for (std::size_t c = 0; c < g.copies.size(); ++c) {
      const Matrix& pa = g.copies[c]->basis;
      const Matrix& pb = groups[partner].copies[c]->basis;
      Matrix gram = hyperbolic_pairing(restrict_to(map, pa), restrict_to(map, pb), symmetry, setting);
      pieces.push_back({hconcat(pa, pb), {std::move(gram), "hyperbolic-pairing"},
                        label + " + " + divisor_label(dual, g.k)});
    }
  }
  (void)n;
  return assemble(map, symmetry, setting, pieces);
}

}  // namespace

Matrix kronecker(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
      }
    }
  }
  return out;
}

QuotientRingContext make_quotient_context(const Poly& p, unsigned d, Setting setting) {
  const Field& field = p.field();
  if (!p.is_monic() || p.degree() < 1) throw Error(ErrorKind::InvalidInput, "expected a monic nonconstant polynomial");
  if (d == 0) throw Error(ErrorKind::InvalidInput, "exponent must be positive");
  const bool invariant = setting == Setting::Invariant;
  if (invariant ? !is_self_dual(p) : !is_additively_self_dual(p)) {
    throw Error(ErrorKind::NotSelfDual, p.to_string() + " is not " + (invariant ? "" : "additively ") + "self-dual");
  }
  if (p.degree() % 2 != 0) throw Error(ErrorKind::OddDegree, p.to_string() + " has odd degree");
  require_large_characteristic(field, static_cast<std::size_t>(p.degree()) * d, "self-dual block");

  QuotientRingContext ctx;
  ctx.p = p;
  ctx.d = d;
  ctx.setting = setting;
  ctx.m = static_cast<std::size_t>(p.degree()) / 2;
  ctx.q = invariant ? substitute_y_eq_x_plus_inv(p) : substitute_y_eq_x_squared(p);
  ctx.mult_x = companion(p);
  const std::size_t r = 2 * ctx.m;
  std::vector<Vector> cols;
  if (invariant) {
    const Matrix minv = inverse(ctx.mult_x);
    Vector v(r, Scalar::zero(field));
    v[0] = Scalar::one(field);
    for (std::size_t j = 0; j < r; ++j) {
      cols.push_back(v);
      v = minv * v;
    }
  } else {
    for (std::size_t j = 0; j < r; ++j) {
      Vector v(r, Scalar::zero(field));
      v[j] = j % 2 == 0 ? Scalar::one(field) : -Scalar::one(field);
      cols.push_back(v);
    }
  }
  ctx.sigma_matrix = Matrix::from_columns(field, r, cols);
  if (!(ctx.sigma_matrix * ctx.sigma_matrix).is_identity()) {
    throw Error(ErrorKind::Internal, "sigma is not an involution");
  }
  if (kernel(ctx.sigma_matrix - Matrix::identity(field, r)).size() != ctx.m) {
    throw Error(ErrorKind::Internal, "fixed space of sigma has the wrong dimension");
  }
  return ctx;
}

Matrix unipotent_block_form(const Field& field, std::size_t k, Symmetry symmetry, int lambda) {
  if (lambda != 1 && lambda != -1) throw Error(ErrorKind::InvalidInput, "lambda must be +1 or -1");
  if (k == 0) throw Error(ErrorKind::InvalidInput, "block size must be positive");
  require_parity(k, symmetry, "unipotent block");
  std::optional<Matrix> b = unipotent_form_with(field, k, symmetry, std::nullopt);
  if (!b) throw Error(ErrorKind::Internal, "unipotent block system is inconsistent");
  return *b;
}

Matrix nilpotent_block_form(const Field& field, std::size_t k, Symmetry symmetry) {
  if (k == 0) throw Error(ErrorKind::InvalidInput, "block size must be positive");
  require_parity(k, symmetry, "nilpotent block");
  Matrix b(field, k, k);
  for (std::size_t i = 0; i < k; ++i) b(i, k - 1 - i) = i % 2 == 0 ? Scalar::one(field) : -Scalar::one(field);
  return b;
}

BlockForm trace_norm_form(const QuotientRingContext& ctx) {
  const Matrix& m = ctx.mult_x;
  const Field& field = m.field();
  const std::size_t r = m.rows();
  const Scalar h = half(field);
  const bool invariant = ctx.setting == Setting::Invariant;

  // powers[i] = x^i and images[i] = sigma(x^i) as multiplication operators.
  std::vector<Matrix> powers{Matrix::identity(field, r)};
  std::vector<Matrix> images{Matrix::identity(field, r)};
  const Matrix step = invariant ? inverse(m) : -m;
  for (std::size_t i = 1; i < r; ++i) {
    powers.push_back(powers.back() * m);
    images.push_back(images.back() * step);
  }

  // Polarized reading: Tr_{E1/F}(pi(a) pi(b)) with pi = (1 + sigma)/2 and
  // Tr_{E1/F} = Tr_{E/F}/2 on E1.
  Matrix polarized(field, r, r);
  std::vector<Matrix> pi;
  for (std::size_t i = 0; i < r; ++i) pi.push_back((powers[i] + images[i]) * h);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) polarized(i, j) = h * trace(pi[i] * pi[j]);
  }
  if (verify_form(m, polarized, Symmetry::Symmetric, ctx.setting).all()) return {polarized, "trace-polarized"};

  // Hermitian reading: Tr_{E1/F} of the polarized norm, 1/2 Tr_{E/F}(a sigma(b)).
  Matrix hermitian(field, r, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) hermitian(i, j) = h * trace(powers[i] * images[j]);
  }
  if (verify_form(m, hermitian, Symmetry::Symmetric, ctx.setting).all()) return {hermitian, "trace-hermitian"};

  return oracle_block(m, Symmetry::Symmetric, ctx.setting);
}

Matrix self_dual_block_map(const QuotientRingContext& ctx) {
  const Field& field = ctx.mult_x.field();
  const Matrix id_d = Matrix::identity(field, ctx.d);
  const Matrix l = lower_shift(field, ctx.d);
  if (ctx.setting == Setting::Invariant) return kronecker(id_d + l, ctx.mult_x);
  return kronecker(id_d, ctx.mult_x) + kronecker(l, Matrix::identity(field, ctx.mult_x.rows()));
}

BlockForm self_dual_block_form(const QuotientRingContext& ctx, Symmetry symmetry) {
  const Field& field = ctx.mult_x.field();
  const bool invariant = ctx.setting == Setting::Invariant;
  const Symmetry alpha_symmetry = ctx.d % 2 == 1 ? Symmetry::Symmetric : Symmetry::SkewSymmetric;

  Matrix alpha;
  if (invariant) {
    // Follow the block recipe A_{1,1} = b when the corner is free.
    std::optional<Matrix> a;
    if (alpha_symmetry == Symmetry::Symmetric) a = unipotent_form_with(field, ctx.d, alpha_symmetry, Scalar::one(field));
    alpha = a ? *a : unipotent_block_form(field, ctx.d, alpha_symmetry);
  } else {
    alpha = nilpotent_block_form(field, ctx.d, alpha_symmetry);
  }

  BlockForm b = trace_norm_form(ctx);
  std::string route = b.route;
  if (symmetry != alpha_symmetry) {
    const Matrix& m = ctx.mult_x;
    const Matrix factor = invariant ? m - inverse(m) : m;
    b.gram = factor.transpose() * b.gram;
    route += "+converter";
  }
  const Matrix gram = kronecker(alpha, b.gram);
  const Matrix map = self_dual_block_map(ctx);
  if (verify_form(map, gram, symmetry, ctx.setting).all()) {
    return {gram, ctx.d == 1 ? route : (invariant ? "unipotent-tensor-" : "nilpotent-tensor-") + route};
  }
  return oracle_block(map, symmetry, ctx.setting);
}

Matrix hyperbolic_pairing(const Matrix& ta, const Matrix& tb, Symmetry symmetry, Setting setting) {
  if (!ta.is_square() || !tb.is_square() || ta.rows() != tb.rows()) {
    throw Error(ErrorKind::NotDualPair, "summands have different dimensions");
  }
  require_same_field(ta.field(), tb.field());
  const Field& field = ta.field();
  const std::size_t r = ta.rows();
  const Matrix a = setting == Setting::Invariant ? inverse(ta).transpose() : -ta.transpose();
  const Matrix kb = krylov(tb, cyclic_vector(tb));
  const Matrix ka = krylov(a, cyclic_vector(a));
  const Matrix x = ka * inverse(kb);
  if (!(x * tb == a * x) || det(x).is_zero()) {
    throw Error(ErrorKind::NotDualPair, "second summand is not dual to the first");
  }
  Matrix b(field, 2 * r, 2 * r);
  b.set_block(0, r, x);
  b.set_block(r, 0, symmetry == Symmetry::Symmetric ? x.transpose() : -x.transpose());
  return b;
}

FormCertificate skew_symmetric_converter(const FormCertificate& source, ConverterDirection direction) {
  const Symmetry expected =
      direction == ConverterDirection::SymmetricToSkew ? Symmetry::Symmetric : Symmetry::SkewSymmetric;
  if (source.symmetry() != expected) {
    throw Error(ErrorKind::InvalidInput, "source form is " + std::string(to_string(source.symmetry())));
  }
  const Matrix& t = source.map();
  Matrix factor = t;
  if (source.setting() == Setting::Invariant) {
    factor = t - inverse(t);
    if (det(factor).is_zero()) throw Error(ErrorKind::EigenvalueObstruction, "T has eigenvalue 1 or -1");
  } else if (det(factor).is_zero()) {
    throw Error(ErrorKind::EigenvalueObstruction, "S has eigenvalue 0");
  }
  std::vector<BlockProvenance> provenance = source.provenance();
  for (auto& p : provenance) p.route += "+converter";
  return FormCertificate::create(t, factor.transpose() * source.gram(), opposite(source.symmetry()), source.setting(),
                                 std::move(provenance));
}

FormCertificate construct_invariant_form(const Matrix& t, Symmetry symmetry, const FactorOptions& options) {
  return construct(t, symmetry, Setting::Invariant, options);
}

FormCertificate construct_infinitesimal_form(const Matrix& s, Symmetry symmetry, const FactorOptions& options) {
  return construct(s, symmetry, Setting::Infinitesimal, options);
}

}  // namespace invform
