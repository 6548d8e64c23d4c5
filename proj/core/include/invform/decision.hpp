#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invform/canonical.hpp"
#include "invform/certificate.hpp"

namespace invform {

enum class ObstructionKind {
  UnpairedDual,
  BadUnipotentParity,
  OddDimensionSkew,
  UnpairedAdditiveDual,
  BadNilpotentParity,
};

[[nodiscard]] std::string_view to_string(ObstructionKind kind) noexcept;

struct ObstructionRecord {
  ObstructionKind kind;
  ElementaryDivisor divisor;
  std::string detail;
};

struct DecisionReport {
  Symmetry symmetry = Symmetry::Symmetric;
  Setting setting = Setting::Invariant;
  bool exists = false;
  /// Every violated condition, not just the first.
  std::vector<ObstructionRecord> obstructions;
  std::vector<ElementaryDivisor> divisors;
  /// Present when construction was requested and the answer is yes.
  std::optional<FormCertificate> witness;
};

struct DecisionOptions {
  FactorOptions factor;
  bool construct = false;
};

/// Existence of a non-degenerate T-invariant form of the given symmetry.
/// Requires T invertible and characteristic larger than n.
[[nodiscard]] DecisionReport decide_invariant_form(const Matrix& t, Symmetry symmetry,
                                                   const DecisionOptions& options = {});

/// Existence of a non-degenerate form with S^t B + B S = 0.
[[nodiscard]] DecisionReport decide_infinitesimal_form(const Matrix& s, Symmetry symmetry,
                                                       const DecisionOptions& options = {});

struct RealityMismatch {
  ElementaryDivisor divisor;
  std::optional<ElementaryDivisor> counterpart;
};

struct RealitySplitting {
  /// Columns spanning V_1 (carries a symmetric form) and V_2 (carries a skew form).
  Matrix basis1;
  Matrix basis2;
};

struct RealityReport {
  bool is_real = false;
  /// Divisors of T whose (p, k) partner among the divisors of T^-1 is missing
  /// or has a different multiplicity, and vice versa.
  std::vector<RealityMismatch> mismatches;
  /// Only computed when T is real and the characteristic exceeds n.
  std::optional<RealitySplitting> splitting;
};

/// T is conjugate to T^-1 in GL(n, F) iff their elementary divisors agree.
[[nodiscard]] RealityReport decide_real(const Matrix& t, const FactorOptions& options = {});

}  // namespace invform
