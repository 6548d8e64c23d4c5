#include "invform/corpus.hpp"

#include <algorithm>
#include <functional>

#include "invform/error.hpp"
#include "invform/factor.hpp"

namespace invform {

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorKind::InvalidInput, "empty range");
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r < limit) return r % bound;
  }
}

namespace {

Scalar random_scalar(const Field& field, std::mt19937_64& rng) {
  if (field.is_rationals()) return Scalar(field, static_cast<long>(draw_below(rng, 11)) - 5);
  return Scalar(field, static_cast<long>(draw_below(rng, field.modulus())));
}

Scalar random_unit(const Field& field, std::mt19937_64& rng) {
  for (;;) {
    Scalar s = random_scalar(field, rng);
    if (!s.is_zero()) return s;
  }
}

struct Component {
  Poly p;
  unsigned k = 1;
  unsigned mult = 1;

  [[nodiscard]] std::size_t dim() const { return static_cast<std::size_t>(p.degree()) * k * mult; }
};

std::string label(const Component& c) {
  std::string s = "(" + c.p.to_string() + ")";
  if (c.k > 1) s += "^" + std::to_string(c.k);
  if (c.mult > 1) s += " x" + std::to_string(c.mult);
  return s;
}

// Random unit a with a^2 != 1 (multiplicative) or a != 0 (additive).
Scalar generic_root(const Field& field, std::mt19937_64& rng, bool multiplicative) {
  for (;;) {
    Scalar a = random_unit(field, rng);
    if (!multiplicative || !(a * a).is_one()) return a;
  }
}

Poly find_poly(const std::function<Poly()>& candidate, const std::function<bool(const Poly&)>& ok) {
  for (int tries = 0; tries < 10000; ++tries) {
    Poly p = candidate();
    if (ok(p) && is_irreducible(p)) return p;
  }
  throw Error(ErrorKind::Internal, "no irreducible polynomial of the requested shape found");
}

// x^2 - a x + 1 or x^2 q(x + 1/x) for q = y^2 + b y + c.
Poly self_dual_irreducible(const Field& field, std::mt19937_64& rng, int degree) {
  if (degree == 2) {
    return find_poly(
        [&] { return Poly(field, {Scalar::one(field), -random_scalar(field, rng), Scalar::one(field)}); },
        [](const Poly&) { return true; });
  }
  return find_poly(
      [&] {
        const Scalar b = random_scalar(field, rng);
        const Scalar c = random_scalar(field, rng);
        const Scalar one = Scalar::one(field);
        return Poly(field, {one, b, c + Scalar(field, 2L), b, one});
      },
      [](const Poly&) { return true; });
}

Poly additive_self_dual_irreducible(const Field& field, std::mt19937_64& rng, int degree) {
  const Scalar zero = Scalar::zero(field);
  const Scalar one = Scalar::one(field);
  if (degree == 2) {
    return find_poly(
        [&] { return Poly(field, {random_scalar(field, rng), zero, one}); }, [](const Poly&) { return true; });
  }
  return find_poly(
      [&] { return Poly(field, {random_scalar(field, rng), zero, random_scalar(field, rng), zero, one}); },
      [](const Poly&) { return true; });
}

Poly quadratic_irreducible(const Field& field, std::mt19937_64& rng, bool multiplicative) {
  return find_poly(
      [&] { return Poly(field, {random_unit(field, rng), random_scalar(field, rng), Scalar::one(field)}); },
      [&](const Poly& p) { return multiplicative ? !is_self_dual(p) : !is_additively_self_dual(p); });
}

unsigned pick(std::mt19937_64& rng, std::size_t hi) { return 1 + static_cast<unsigned>(draw_below(rng, std::max<std::size_t>(hi, 1))); }

std::vector<Component> sample_components(const Field& field, std::mt19937_64& rng, std::size_t target, bool multiplicative,
                                         bool allow_unpaired) {
  std::vector<Component> out;
  std::size_t dim = 0;
  const Scalar one = Scalar::one(field);
  while (dim < target) {
    const std::size_t rem = target - dim;
    const unsigned type = static_cast<unsigned>(draw_below(rng, allow_unpaired ? 6 : 5));
    std::vector<Component> add;
    switch (type) {
      case 0:
      case 1: {
        Poly p = multiplicative ? Poly::linear(type == 0 ? one : -one) : Poly::x(field);
        if (!multiplicative && type == 1) {
          if (rem < 2) continue;
          const Scalar a = generic_root(field, rng, false);
          const unsigned k = pick(rng, std::min<std::size_t>(3, rem / 2));
          const unsigned m = pick(rng, std::min<std::size_t>(3, rem / (2 * k)));
          add = {{Poly::linear(a), k, m}, {Poly::linear(-a), k, m}};
          break;
        }
        const unsigned k = pick(rng, std::min<std::size_t>(3, rem));
        const unsigned m = pick(rng, std::min<std::size_t>(3, rem / k));
        add = {{p, k, m}};
        break;
      }
      case 2: {
        if (rem < 2) continue;
        const int degree = rem >= 4 && draw_below(rng, 3) == 0 ? 4 : 2;
        const Poly p = multiplicative ? self_dual_irreducible(field, rng, degree)
                                      : additive_self_dual_irreducible(field, rng, degree);
        const unsigned k = pick(rng, std::min<std::size_t>(3, rem / degree));
        const unsigned m = pick(rng, std::min<std::size_t>(2, rem / (degree * k)));
        add = {{p, k, m}};
        break;
      }
      case 3: {
        if (rem < 2) continue;
        const Scalar a = generic_root(field, rng, multiplicative);
        const Scalar b = multiplicative ? one / a : -a;
        const unsigned k = pick(rng, std::min<std::size_t>(3, rem / 2));
        const unsigned m = pick(rng, std::min<std::size_t>(2, rem / (2 * k)));
        add = {{Poly::linear(a), k, m}, {Poly::linear(b), k, m}};
        break;
      }
      case 4: {
        if (rem < 4) continue;
        const Poly f = quadratic_irreducible(field, rng, multiplicative);
        const Poly g = multiplicative ? dual_poly(f) : additive_dual_poly(f);
        add = {{f, 1, 1}, {g, 1, 1}};
        break;
      }
      default: {
        if (rem >= 2 && draw_below(rng, 2) == 0) {
          add = {{quadratic_irreducible(field, rng, multiplicative), 1, 1}};
        } else {
          add = {{Poly::linear(generic_root(field, rng, multiplicative)), pick(rng, std::min<std::size_t>(2, rem)), 1}};
        }
        break;
      }
    }
    for (auto& c : add) {
      dim += c.dim();
      out.push_back(std::move(c));
    }
  }
  return out;
}

Matrix realize(const Field& field, const std::vector<Component>& components, std::mt19937_64& rng) {
  std::vector<Matrix> blocks;
  for (const auto& c : components) {
    const Matrix b = companion(c.p.pow(c.k));
    for (unsigned i = 0; i < c.mult; ++i) blocks.push_back(b);
  }
  const Matrix t = block_diagonal(field, blocks);
  const Matrix g = random_invertible_matrix(field, t.rows(), rng);
  return g * t * inverse(g);
}

}  // namespace

Matrix random_invertible_matrix(const Field& field, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix g(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) g(i, j) = random_scalar(field, rng);
    }
    if (!det(g).is_zero()) return g;
  }
}

std::vector<CorpusInstance> generate_corpus(const CorpusOptions& options) {
  if (options.primes.empty() || options.max_dim == 0) throw Error(ErrorKind::InvalidInput, "empty corpus options");
  std::mt19937_64 rng(options.seed);
  std::vector<CorpusInstance> out;
  for (Setting setting : {Setting::Invariant, Setting::Infinitesimal}) {
    for (std::size_t i = 0; i < options.count; ++i) {
      const Field field = Field::prime(options.primes[i % options.primes.size()]);
      require_large_characteristic(field, options.max_dim, "corpus");
      const std::size_t target = 1 + draw_below(rng, options.max_dim);
      const bool unpaired = draw_below(rng, 4) == 0;
      const auto components = sample_components(field, rng, target, setting == Setting::Invariant, unpaired);
      std::string recipe;
      for (const auto& c : components) recipe += (recipe.empty() ? "" : " + ") + label(c);
      out.push_back({out.size(), setting, recipe, realize(field, components, rng)});
    }
  }
  return out;
}

std::vector<CorpusInstance> unipotent_corpus(const Field& field, std::uint64_t seed, std::size_t max_dim) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<unsigned>> partitions;
  std::vector<unsigned> current;
  std::function<void(std::size_t, std::size_t)> gen = [&](std::size_t remaining, std::size_t largest) {
    if (!current.empty()) partitions.push_back(current);
    for (std::size_t part = std::min(remaining, largest); part >= 1; --part) {
      current.push_back(static_cast<unsigned>(part));
      gen(remaining - part, part);
      current.pop_back();
    }
  };
  gen(max_dim, max_dim);
  std::vector<CorpusInstance> out;
  for (int sign : {1, -1}) {
    const Scalar lambda = sign == 1 ? Scalar::one(field) : -Scalar::one(field);
    for (const auto& parts : partitions) {
      std::vector<Component> components;
      for (unsigned k : parts) {
        if (!components.empty() && components.back().k == k) {
          ++components.back().mult;
        } else {
          components.push_back({Poly::linear(lambda), k, 1});
        }
      }
      std::string recipe;
      for (const auto& c : components) recipe += (recipe.empty() ? "" : " + ") + label(c);
      out.push_back({out.size(), Setting::Invariant, recipe, realize(field, components, rng)});
    }
  }
  return out;
}

std::vector<Poly> self_dual_corpus(const Field& field, std::uint64_t seed, std::size_t per_degree, int max_degree) {
  std::mt19937_64 rng(seed);
  std::vector<Poly> out;
  for (int degree = 2; degree <= max_degree; degree += 2) {
    for (std::size_t i = 0; i < per_degree; ++i) {
      std::vector<Scalar> c(static_cast<std::size_t>(degree) + 1, Scalar::zero(field));
      c.front() = c.back() = Scalar::one(field);
      for (int j = 1; j <= degree / 2; ++j) {
        c[static_cast<std::size_t>(j)] = random_scalar(field, rng);
        c[static_cast<std::size_t>(degree - j)] = c[static_cast<std::size_t>(j)];
      }
      out.emplace_back(field, std::move(c));
    }
  }
  return out;
}

std::vector<Poly> random_monic_corpus(const Field& field, std::uint64_t seed, std::size_t count, int max_degree) {
  std::mt19937_64 rng(seed);
  std::vector<Poly> out;
  for (std::size_t i = 0; i < count; ++i) {
    const int degree = 1 + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(max_degree)));
    std::vector<Scalar> c;
    c.push_back(random_unit(field, rng));
    for (int j = 1; j < degree; ++j) c.push_back(random_scalar(field, rng));
    c.push_back(Scalar::one(field));
    out.emplace_back(field, std::move(c));
  }
  return out;
}

}  // namespace invform
