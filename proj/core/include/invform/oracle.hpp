#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "invform/certificate.hpp"
#include "invform/matrix.hpp"

namespace invform {

/// All Gram matrices of the given symmetry satisfying the linear invariance
/// equations, as an echelon basis over the n(n+1)/2 (or n(n-1)/2) upper
/// triangular coordinates in row-major order.
struct InvariantFormSpace {
  Symmetry symmetry = Symmetry::Symmetric;
  Setting setting = Setting::Invariant;
  Field field;
  std::size_t n = 0;
  std::vector<Matrix> basis;

  [[nodiscard]] std::size_t dimension() const noexcept { return basis.size(); }
};

/// Throws Singular for a non-invertible map in the Invariant setting.
[[nodiscard]] InvariantFormSpace solve_form_space(const Matrix& m, Symmetry symmetry, Setting setting);

struct OracleOptions {
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  unsigned trials = 64;
};

/// A non-degenerate element of the space, or nullopt after the budget: an
/// exhaustive pass over coefficient tuples from {0, 1, -1, 2} when the
/// dimension is at most 4, then `trials` seeded random combinations.
[[nodiscard]] std::optional<Matrix> find_nondegenerate(const InvariantFormSpace& space,
                                                       const OracleOptions& options = {});

/// Exhaustive search for g in GL(n, p) with g T g^-1 = T^-1. Throws
/// GroupTooLarge when |GL(n, p)| exceeds 10^4 and RationalsUnsupported over Q.
[[nodiscard]] bool brute_force_reality(const Matrix& t);

}  // namespace invform
