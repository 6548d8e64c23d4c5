#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "invform/poly.hpp"

namespace invform {

struct FactorOptions {
  /// Largest degree accepted over Q; subset recombination is exponential in
  /// the number of modular factors.
  unsigned degree_limit = 24;
  /// Seed for the randomized equal-degree splitter over F_p.
  std::uint64_t seed = 0x243f6a8885a308d3ULL;
};

struct Factorization {
  Scalar unit;
  /// Monic irreducible factors with their exponents, sorted by
  /// Poly::canonical_compare.
  std::vector<std::pair<Poly, unsigned>> factors;

  /// unit * prod p_i^e_i
  [[nodiscard]] Poly expand() const;
};

/// Complete factorization into monic irreducibles over the coefficient field.
/// Throws DegreeLimit over Q when deg f exceeds options.degree_limit.
[[nodiscard]] Factorization factor(const Poly& f, const FactorOptions& options = {});

/// Monic squarefree decomposition f = prod g_i^i (only nontrivial g_i listed).
[[nodiscard]] std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f);

[[nodiscard]] bool is_irreducible(const Poly& f, const FactorOptions& options = {});

}  // namespace invform
