#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "invform/certificate.hpp"

namespace invform {

enum class SummandKind { OddIndecomposable, EvenIndecomposable, StandardPair };

[[nodiscard]] std::string_view to_string(SummandKind kind) noexcept;

struct OrthogonalSummand {
  Matrix basis;
  SummandKind kind = SummandKind::OddIndecomposable;
  /// Size of the Jordan block(s); a standard pair has dimension 2 * block_size.
  std::size_t block_size = 0;
  /// For a standard pair, the first block_size columns span one isotropic half.
  std::size_t half = 0;
};

struct OrthogonalSummandReport {
  /// +1 for unipotent T, -1 for minus a unipotent.
  int sign = 1;
  std::vector<OrthogonalSummand> summands;
};

/// Splits V into pairwise orthogonal T-invariant summands on which B is
/// non-degenerate: single Jordan blocks, or pairs of blocks with isotropic
/// halves. Requires T or -T unipotent and cert.map() == t.
[[nodiscard]] OrthogonalSummandReport orthogonal_decomposition(const Matrix& t, const FormCertificate& cert);

/// Maximal dimension of a totally isotropic subspace, over an odd prime field.
[[nodiscard]] std::size_t witt_index(const Matrix& gram, Symmetry symmetry);

enum class BoundCase { WithinWitt, EvenDim2l, GeneralOdd, SymplecticEven };

[[nodiscard]] std::string_view to_string(BoundCase c) noexcept;

struct LevelReport {
  std::size_t level = 0;
  std::size_t witt_index = 0;
  std::size_t dim = 0;
  BoundCase bound_case = BoundCase::WithinWitt;
  bool bound_satisfied = false;
};

/// Level of a unipotent isometry and the bound it must satisfy against the
/// Witt index of its form.
[[nodiscard]] LevelReport level_analysis(const Matrix& t, const FormCertificate& cert);

}  // namespace invform
