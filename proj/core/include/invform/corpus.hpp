#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "invform/certificate.hpp"
#include "invform/poly.hpp"

namespace invform {

struct CorpusOptions {
  std::uint64_t seed = 0x5eed0f1a7e5ULL;
  /// Instances per setting.
  std::size_t count = 500;
  std::size_t max_dim = 6;
  std::vector<std::uint64_t> primes{101, 257};
};

struct CorpusInstance {
  std::size_t index = 0;
  Setting setting = Setting::Invariant;
  /// Elementary-divisor recipe the matrix was built from, e.g. "(x - 1)^2 x2 + (x^2 + 3x + 1)".
  std::string recipe;
  Matrix matrix;
};

/// Random instances over the given primes: block sums of companion matrices of
/// sampled elementary divisors, conjugated by a random invertible matrix.
/// Invariant instances draw from (x -+ 1)^k blocks, self-dual irreducibles and
/// dual pairs; infinitesimal ones from x^k blocks, additively self-dual
/// irreducibles and additive pairs. About a quarter are left unpaired.
[[nodiscard]] std::vector<CorpusInstance> generate_corpus(const CorpusOptions& options = {});

/// Every Jordan type of (+-1)-unipotent maps with n <= max_dim, conjugated.
[[nodiscard]] std::vector<CorpusInstance> unipotent_corpus(const Field& field, std::uint64_t seed,
                                                           std::size_t max_dim = 6);

/// Self-dual polynomials with constant term 1 of each even degree 2..max_degree.
[[nodiscard]] std::vector<Poly> self_dual_corpus(const Field& field, std::uint64_t seed, std::size_t per_degree = 10,
                                                 int max_degree = 8);

/// Random monic polynomials with nonzero constant term, degrees 1..max_degree.
[[nodiscard]] std::vector<Poly> random_monic_corpus(const Field& field, std::uint64_t seed, std::size_t count = 200,
                                                    int max_degree = 8);

/// Uniform draw in [0, bound) from raw engine output, so sequences do not
/// depend on the standard library's distribution implementations.
[[nodiscard]] std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound);

[[nodiscard]] Matrix random_invertible_matrix(const Field& field, std::size_t n, std::mt19937_64& rng);

}  // namespace invform
