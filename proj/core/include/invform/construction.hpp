#pragma once

#include <cstddef>
#include <string>

#include "invform/certificate.hpp"
#include "invform/factor.hpp"
#include "invform/matrix.hpp"

namespace invform {

/// E = F[x]/(p) for a self-dual irreducible p of degree 2m, with the
/// involution sigma: x -> 1/x (Invariant) or x -> -x (Infinitesimal).
struct QuotientRingContext {
  Poly p;
  unsigned d = 1;  // exponent of the elementary divisor p^d
  Setting setting = Setting::Invariant;
  /// q(y) with y = x + 1/x (Invariant) or y = x^2 (Infinitesimal).
  Poly q;
  /// Multiplication by x on E in the power basis 1, x, ..., x^(2m-1).
  Matrix mult_x;
  /// sigma in the same basis.
  Matrix sigma_matrix;
  std::size_t m = 0;
};

/// Validates p and builds E, sigma and q. Throws NotSelfDual, OddDegree or
/// SmallCharacteristic (the characteristic must exceed deg(p) * d).
[[nodiscard]] QuotientRingContext make_quotient_context(const Poly& p, unsigned d, Setting setting = Setting::Invariant);

/// Anti-triangular Gram matrix invariant under I + L (L the subdiagonal
/// shift), hence also under -(I + L). Symmetric needs k odd, skew k even;
/// otherwise ParityViolation. `lambda` must be +1 or -1.
[[nodiscard]] Matrix unipotent_block_form(const Field& field, std::size_t k, Symmetry symmetry, int lambda = 1);

/// Anti-diagonal B with B[i][k-1-i] = (-1)^i (zero-based), which satisfies
/// N^t B + B N = 0 for the shift N. Same parity rule as above.
[[nodiscard]] Matrix nilpotent_block_form(const Field& field, std::size_t k, Symmetry symmetry);

struct BlockForm {
  Matrix gram;
  std::string route;
};

/// Symmetric form on E = F[x]/(p) invariant under multiplication by x (or
/// skew-adjoint for it in the Infinitesimal setting). Tries the polarized
/// trace form first, then the hermitian trace form 1/2 Tr_{E/F}(a sigma(b)),
/// and falls back to the oracle; `route` records which one succeeded.
[[nodiscard]] BlockForm trace_norm_form(const QuotientRingContext& ctx);

/// The map on F[x]/(p^d) in the Jordan-Chevalley adapted basis
/// e_{i,j} = N^i R^j v: (I + L) (x) M (Invariant) or I (x) M + L (x) I
/// (Infinitesimal), with M the companion matrix of p.
[[nodiscard]] Matrix self_dual_block_map(const QuotientRingContext& ctx);

/// Form of the requested symmetry for self_dual_block_map(ctx), built as
/// alpha (x) b with alpha a unipotent or nilpotent block form and b a
/// (possibly converted) trace form.
[[nodiscard]] BlockForm self_dual_block_form(const QuotientRingContext& ctx, Symmetry symmetry);

/// Gram matrix on W_a + W_b vanishing on each summand and pairing them. The
/// maps ta, tb are the restrictions to the summands; tb must be similar to
/// ta^-t (Invariant) or -ta^t (Infinitesimal), else NotDualPair.
[[nodiscard]] Matrix hyperbolic_pairing(const Matrix& ta, const Matrix& tb, Symmetry symmetry,
                                        Setting setting = Setting::Invariant);

enum class ConverterDirection { SymmetricToSkew, SkewToSymmetric };

/// B'(u, v) = B((T - T^-1) u, v) (Invariant) or B(S u, v) (Infinitesimal),
/// which flips the symmetry. Throws EigenvalueObstruction when the factor is
/// singular and InvalidInput when `source` does not match the direction.
[[nodiscard]] FormCertificate skew_symmetric_converter(const FormCertificate& source, ConverterDirection direction);

/// Throws DecisionFalse when no such form exists.
[[nodiscard]] FormCertificate construct_invariant_form(const Matrix& t, Symmetry symmetry,
                                                       const FactorOptions& options = {});
[[nodiscard]] FormCertificate construct_infinitesimal_form(const Matrix& s, Symmetry symmetry,
                                                           const FactorOptions& options = {});

/// Kronecker product.
[[nodiscard]] Matrix kronecker(const Matrix& a, const Matrix& b);

}  // namespace invform
