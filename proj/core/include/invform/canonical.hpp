#pragma once

#include <cstddef>
#include <vector>

#include "invform/factor.hpp"
#include "invform/matrix.hpp"

namespace invform {

/// p(x)^k occurring `multiplicity` times among the elementary divisors.
struct ElementaryDivisor {
  Poly p;
  unsigned k = 1;
  unsigned multiplicity = 1;

  [[nodiscard]] std::size_t dimension() const { return static_cast<std::size_t>(p.degree()) * k; }
  friend bool operator==(const ElementaryDivisor&, const ElementaryDivisor&) = default;
};

/// Orders by p (Poly::canonical_compare), then k, then multiplicity.
[[nodiscard]] bool divisor_less(const ElementaryDivisor& a, const ElementaryDivisor& b);

/// Invariant factors d_1 | ... | d_n of xI - T (monic, trivial ones included).
[[nodiscard]] std::vector<Poly> smith_normal_form_xI_minus_T(const Matrix& t);
/// Largest invariant factor.
[[nodiscard]] Poly min_poly(const Matrix& t);

/// Sorted by divisor_less.
[[nodiscard]] std::vector<ElementaryDivisor> elementary_divisors(const Matrix& t, const FactorOptions& options = {});

struct PrimaryDecomposition {
  unsigned e = 0;  // exponent of x - 1 in the characteristic polynomial
  unsigned f = 0;  // exponent of x + 1
  Poly chi_o;      // characteristic polynomial with the x -+ 1 factors removed
  Matrix basis_plus;
  Matrix basis_minus;
  Matrix basis_o;
  Matrix t_o;  // T restricted to span(basis_o), in that basis
};

/// V = ker(T - I)^n + ker(T + I)^n + ker chi_o(T). Throws Singular for
/// non-invertible T and SmallCharacteristic in characteristic 2.
[[nodiscard]] PrimaryDecomposition primary_decomposition(const Matrix& t);

struct IndecomposableSummand {
  ElementaryDivisor divisor;
  unsigned copy_index = 0;
  /// n x (deg p * k) columns. For linear p = x - c the chain v, (T - c)v, ...;
  /// otherwise the power basis v, Tv, T^2 v, ...
  Matrix basis;
  Vector cyclic_vector;
};

/// One summand per elementary-divisor copy, ordered by divisor then copy.
/// The direct-sum property and every annihilator are verified exactly.
[[nodiscard]] std::vector<IndecomposableSummand> indecomposable_decomposition(const Matrix& t,
                                                                              const FactorOptions& options = {});

/// Matrix of T restricted to the column span of `basis` (which must be
/// T-invariant and of full column rank).
[[nodiscard]] Matrix restrict_to(const Matrix& t, const Matrix& basis);

enum class JcMode { Multiplicative, Additive };

struct JordanChevalley {
  Matrix semisimple;
  Matrix unipotent_or_nilpotent;
  JcMode mode = JcMode::Multiplicative;
};

/// T = T_s T_u (multiplicative) or S = S_s + S_n (additive). Requires the
/// characteristic to exceed n.
[[nodiscard]] JordanChevalley jordan_chevalley(const Matrix& t, JcMode mode);

}  // namespace invform
