#include "invform/factor.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "invform/error.hpp"

namespace invform {

namespace {

// ---------------------------------------------------------------- F_p part

Poly pow_mod(Poly base, const mpz_class& exponent, const Poly& modulus) {
  Poly result = Poly::constant(Scalar::one(base.field())) % modulus;
  base = base % modulus;
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mul_mod(result, result, modulus);
    if (mpz_tstbit(exponent.get_mpz_t(), i) != 0) result = mul_mod(result, base, modulus);
  }
  return result;
}

// f(x) = g(x^p) over F_p; Frobenius fixes F_p so g^p = f.
Poly pth_root(const Poly& f) {
  const std::uint64_t p = f.field().modulus();
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) out.push_back(f.coeffs()[i]);
  return Poly(f.field(), std::move(out));
}

void add_factor(std::vector<std::pair<Poly, unsigned>>& out, const Poly& g, unsigned e) {
  for (auto& [h, m] : out) {
    if (h == g) {
      m += e;
      return;
    }
  }
  out.emplace_back(g, e);
}

std::vector<std::pair<Poly, unsigned>> squarefree_monic(const Poly& f) {
  std::vector<std::pair<Poly, unsigned>> out;
  if (f.degree() <= 0) return out;
  Poly c = poly_gcd(f, f.derivative());
  Poly w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    Poly y = poly_gcd(w, c);
    Poly fac = w / y;
    if (fac.degree() > 0) add_factor(out, fac.monic(), i);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    if (!f.field().is_prime_field()) throw Error(ErrorKind::Internal, "squarefree residue over Q");
    const auto p = static_cast<unsigned>(f.field().modulus());
    for (const auto& [g, e] : squarefree_monic(pth_root(c.monic()))) add_factor(out, g, e * p);
  }
  return out;
}

struct DegreeBlock {
  Poly product;
  unsigned degree;
};

std::vector<DegreeBlock> distinct_degree(Poly f) {
  const Field& field = f.field();
  const mpz_class p(static_cast<unsigned long>(field.modulus()));
  const Poly x = Poly::x(field);
  std::vector<DegreeBlock> out;
  Poly h = x % f;
  unsigned d = 0;
  while (f.degree() >= 2 * static_cast<int>(d + 1)) {
    ++d;
    h = pow_mod(h, p, f);
    Poly g = poly_gcd(h - x, f);
    if (!g.is_one()) {
      out.push_back({g, d});
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.push_back({f.monic(), static_cast<unsigned>(f.degree())});
  return out;
}

Poly random_poly(const Field& field, int degree_below, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, field.modulus() - 1);
  std::vector<Scalar> c;
  for (int i = 0; i < degree_below; ++i) c.emplace_back(field, mpz_class(static_cast<unsigned long>(dist(rng))));
  return Poly(field, std::move(c));
}

void equal_degree(const Poly& g, unsigned d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (g.degree() == static_cast<int>(d)) {
    out.push_back(g);
    return;
  }
  const Field& field = g.field();
  const std::uint64_t p = field.modulus();
  mpz_class q_pow;
  mpz_ui_pow_ui(q_pow.get_mpz_t(), p, d);
  const mpz_class half = (q_pow - 1) / 2;
  for (;;) {
    Poly a = random_poly(field, g.degree(), rng);
    if (a.degree() <= 0) continue;
    Poly b(field);
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)).
      Poly term = a % g;
      b = term;
      for (unsigned i = 1; i < d; ++i) {
        term = mul_mod(term, term, g);
        b += term;
      }
    } else {
      b = pow_mod(a, half, g) - Poly::constant(Scalar::one(field));
    }
    Poly u = poly_gcd(b, g);
    if (u.degree() > 0 && u.degree() < g.degree()) {
      equal_degree(u, d, rng, out);
      equal_degree((g / u).monic(), d, rng, out);
      return;
    }
  }
}

std::vector<Poly> factor_squarefree_fp(const Poly& f, std::mt19937_64& rng) {
  std::vector<Poly> out;
  for (const auto& block : distinct_degree(f)) equal_degree(block.product, block.degree, rng, out);
  return out;
}

// ---------------------------------------------------------------- Q part

using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  ztrim(out);
  return out;
}

ZPoly zsub(ZPoly a, const ZPoly& b) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  ztrim(a);
  return a;
}

mpz_class symmetric_mod(const mpz_class& c, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

ZPoly zsymmetric_mod(ZPoly a, const mpz_class& m) {
  for (auto& c : a) c = symmetric_mod(c, m);
  ztrim(a);
  return a;
}

mpz_class zcontent(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly zprimitive(ZPoly a) {
  if (a.empty()) return a;
  mpz_class g = zcontent(a);
  if (sgn(a.back()) < 0) g = -g;
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return a;
}

bool zdivide_exact(const ZPoly& f, const ZPoly& d, ZPoly& quotient) {
  if (d.empty()) return false;
  ZPoly r = f;
  if (r.size() < d.size()) return r.empty();
  quotient.assign(r.size() - d.size() + 1, mpz_class(0));
  for (std::size_t shift = r.size() - d.size() + 1; shift-- > 0;) {
    const std::size_t k = shift + d.size() - 1;
    if (sgn(r[k]) == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), d.back().get_mpz_t())) return false;
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), r[k].get_mpz_t(), d.back().get_mpz_t());
    quotient[shift] = q;
    for (std::size_t j = 0; j < d.size(); ++j) r[shift + j] -= q * d[j];
  }
  ztrim(r);
  if (!r.empty()) return false;
  ztrim(quotient);
  return true;
}

ZPoly primitive_integer(const Poly& f) {
  mpz_class lcm_den = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.rational().get_den_mpz_t());
  ZPoly out;
  for (const auto& c : f.coeffs()) {
    mpq_class scaled = c.rational() * lcm_den;
    out.push_back(scaled.get_num());
  }
  return zprimitive(std::move(out));
}

Poly zpoly_to_field(const ZPoly& a, const Field& field) {
  std::vector<Scalar> c;
  c.reserve(a.size());
  for (const auto& v : a) c.emplace_back(field, v);
  return Poly(field, std::move(c));
}

ZPoly fp_to_zpoly(const Poly& a) {
  ZPoly out;
  for (const auto& c : a.coeffs()) out.emplace_back(static_cast<unsigned long>(c.residue()));
  return out;
}

ZPoly zscale_add(ZPoly a, const ZPoly& b, const mpz_class& scale) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += scale * b[i];
  ztrim(a);
  return a;
}

ZPoly make_monic_mod(const ZPoly& f, const mpz_class& modulus) {
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), modulus.get_mpz_t()) == 0) {
    throw Error(ErrorKind::Internal, "leading coefficient not invertible during Hensel lifting");
  }
  ZPoly out = f;
  for (auto& c : out) c = symmetric_mod(c * inv, modulus);
  out.back() = 1;
  return out;
}

// Lifts f = lc(f) * prod factors (mod p) to a factorization mod p^a with
// monic factors. The modular factors must be monic and pairwise coprime.
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<Poly>& factors, std::uint64_t p, unsigned a) {
  mpz_class modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), p, a);
  if (factors.size() == 1) return {make_monic_mod(f, modulus)};

  const Field fp = Field::prime(p);
  const Poly& g_bar = factors.front();
  Poly h_bar = Poly::constant(Scalar(fp, f.back()));
  for (std::size_t i = 1; i < factors.size(); ++i) h_bar *= factors[i];
  const ExtendedGcd eg = extended_gcd(g_bar, h_bar);
  if (!eg.gcd.is_one()) throw Error(ErrorKind::Internal, "modular factors are not coprime");

  ZPoly g = fp_to_zpoly(g_bar);
  ZPoly h = fp_to_zpoly(h_bar);
  h.back() = f.back();
  mpz_class pj = p;
  for (unsigned j = 1; j < a; ++j) {
    ZPoly err = zsub(f, zmul(g, h));
    for (auto& c : err) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
    const Poly e = zpoly_to_field(err, fp);
    auto [q, tau] = divmod(eg.t * e, g_bar);
    const Poly sigma = eg.s * e + q * h_bar;
    g = zscale_add(std::move(g), fp_to_zpoly(tau), pj);
    h = zscale_add(std::move(h), fp_to_zpoly(sigma), pj);
    pj *= p;
  }
  for (std::size_t i = 0; i + 1 < h.size(); ++i) h[i] = symmetric_mod(h[i], modulus);

  std::vector<ZPoly> out{zsymmetric_mod(g, modulus)};
  out.back().back() = 1;
  const std::vector<Poly> rest(factors.begin() + 1, factors.end());
  for (auto& r : hensel_lift(h, rest, p, a)) out.push_back(std::move(r));
  return out;
}

std::vector<std::uint64_t> small_primes(std::size_t count_hint) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 3; out.size() < count_hint; n += 2) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

// Irreducible factors (monic, over Q) of a monic squarefree rational polynomial.
std::vector<Poly> zassenhaus(const Poly& s, const FactorOptions& options) {
  const Field q_field = Field::rationals();
  if (s.degree() <= 1) return {s};
  const ZPoly h = primitive_integer(s);
  const auto deg = static_cast<unsigned>(h.size() - 1);

  std::uint64_t best_p = 0;
  std::vector<Poly> best_factors;
  std::mt19937_64 rng(options.seed);
  int good = 0;
  for (std::uint64_t p : small_primes(400)) {
    if (mpz_divisible_ui_p(h.back().get_mpz_t(), p) != 0) continue;
    const Field fp = Field::prime(p);
    const Poly hp = zpoly_to_field(h, fp).monic();
    if (!poly_gcd(hp, hp.derivative()).is_one()) continue;
    std::vector<Poly> fs = factor_squarefree_fp(hp, rng);
    if (best_p == 0 || fs.size() < best_factors.size()) {
      best_p = p;
      best_factors = std::move(fs);
    }
    if (++good == 5 || best_factors.size() == 1) break;
  }
  if (best_p == 0) throw Error(ErrorKind::Internal, "no lucky prime found for " + s.to_string());
  if (best_factors.size() == 1) return {s};
  std::sort(best_factors.begin(), best_factors.end(),
            [](const Poly& a, const Poly& b) { return a.canonical_compare(b) < 0; });

  // Factor coefficient bound |lc| * 2^deg * ||h||_2.
  mpz_class norm_sq = 0;
  for (const auto& c : h) norm_sq += c * c;
  mpz_class norm;
  mpz_sqrt(norm.get_mpz_t(), norm_sq.get_mpz_t());
  norm += 1;
  mpz_class bound = abs(h.back()) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), deg);
  bound *= 2;
  unsigned a = 1;
  mpz_class modulus = best_p;
  while (modulus <= bound) {
    modulus *= best_p;
    ++a;
  }

  std::vector<ZPoly> lifted = hensel_lift(h, best_factors, best_p, a);
  ZPoly current = h;
  std::vector<ZPoly> found;
  std::size_t subset_size = 1;
  while (2 * subset_size <= lifted.size()) {
    bool progress = false;
    const std::size_t r = lifted.size();
    std::vector<std::size_t> idx(subset_size);
    for (std::size_t i = 0; i < subset_size; ++i) idx[i] = i;
    for (;;) {
      ZPoly candidate{current.back()};
      for (std::size_t i : idx) candidate = zsymmetric_mod(zmul(candidate, lifted[i]), modulus);
      candidate = zprimitive(candidate);
      ZPoly quotient;
      if (!candidate.empty() && zdivide_exact(current, candidate, quotient)) {
        found.push_back(candidate);
        current = std::move(quotient);
        for (std::size_t k = idx.size(); k-- > 0;) lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(idx[k]));
        progress = true;
        break;
      }
      // next combination
      std::size_t k = subset_size;
      while (k > 0 && idx[k - 1] == r - subset_size + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < subset_size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!progress) ++subset_size;
  }
  if (current.size() > 1) found.push_back(current);

  std::vector<Poly> out;
  for (const auto& z : found) out.push_back(zpoly_to_field(z, q_field).monic());
  return out;
}

}  // namespace

Poly Factorization::expand() const {
  Poly out = Poly::constant(unit);
  for (const auto& [p, e] : factors) out *= p.pow(e);
  return out;
}

std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidInput, "squarefree decomposition of zero");
  return squarefree_monic(f.monic());
}

Factorization factor(const Poly& f, const FactorOptions& options) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidInput, "cannot factor the zero polynomial");
  const Field& field = f.field();
  if (field.is_rationals() && f.degree() > static_cast<int>(options.degree_limit)) {
    throw Error(ErrorKind::DegreeLimit, "degree " + std::to_string(f.degree()) + " exceeds the limit " +
                                            std::to_string(options.degree_limit) + " over Q");
  }
  Factorization out{f.leading(), {}};
  std::mt19937_64 rng(options.seed);
  for (const auto& [part, mult] : squarefree_monic(f.monic())) {
    const std::vector<Poly> irreducibles =
        field.is_rationals() ? zassenhaus(part, options) : factor_squarefree_fp(part, rng);
    for (const auto& g : irreducibles) add_factor(out.factors, g, mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return a.first.canonical_compare(b.first) < 0; });
  return out;
}

bool is_irreducible(const Poly& f, const FactorOptions& options) {
  if (f.degree() <= 0) return false;
  const Factorization fac = factor(f, options);
  return fac.factors.size() == 1 && fac.factors.front().second == 1;
}

}  // namespace invform
