#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invform/matrix.hpp"

namespace invform {

enum class Symmetry { Symmetric, SkewSymmetric };
/// Invariant: T^t B T = B. Infinitesimal: S^t B + B S = 0.
enum class Setting { Invariant, Infinitesimal };

[[nodiscard]] std::string_view to_string(Symmetry s) noexcept;
[[nodiscard]] std::string_view to_string(Setting s) noexcept;
/// Accepts "symmetric" / "skew" (and "skew-symmetric").
[[nodiscard]] Symmetry parse_symmetry(std::string_view text);
/// Accepts "invariant" / "infinitesimal".
[[nodiscard]] Setting parse_setting(std::string_view text);
[[nodiscard]] inline Symmetry opposite(Symmetry s) noexcept {
  return s == Symmetry::Symmetric ? Symmetry::SkewSymmetric : Symmetry::Symmetric;
}

struct FormChecks {
  bool invariance = false;
  bool symmetry_ok = false;
  bool nondegenerate = false;

  [[nodiscard]] bool all() const noexcept { return invariance && symmetry_ok && nondegenerate; }
};

/// Recomputes the three certificate conditions from scratch. Shares nothing
/// with the constructors beyond matrix arithmetic and the determinant.
[[nodiscard]] FormChecks verify_form(const Matrix& map, const Matrix& gram, Symmetry symmetry, Setting setting);

/// How one block of an assembled form was produced.
struct BlockProvenance {
  std::string route;    // e.g. "unipotent-block", "hyperbolic-pairing", "trace-hermitian", "oracle"
  std::string divisor;  // human-readable p(x)^k
  std::size_t offset = 0;
  std::size_t size = 0;
};

/// A Gram matrix together with the map it is invariant under. Every instance
/// has passed verify_form; creation throws VerificationFailed otherwise.
class FormCertificate {
 public:
  static FormCertificate create(Matrix map, Matrix gram, Symmetry symmetry, Setting setting,
                                std::vector<BlockProvenance> provenance = {});

  [[nodiscard]] const Matrix& map() const noexcept { return map_; }
  [[nodiscard]] const Matrix& gram() const noexcept { return gram_; }
  [[nodiscard]] Symmetry symmetry() const noexcept { return symmetry_; }
  [[nodiscard]] Setting setting() const noexcept { return setting_; }
  [[nodiscard]] const FormChecks& checks() const noexcept { return checks_; }
  [[nodiscard]] const std::vector<BlockProvenance>& provenance() const noexcept { return provenance_; }

 private:
  FormCertificate(Matrix map, Matrix gram, Symmetry symmetry, Setting setting, FormChecks checks,
                  std::vector<BlockProvenance> provenance);

  Matrix map_;
  Matrix gram_;
  Symmetry symmetry_;
  Setting setting_;
  FormChecks checks_;
  std::vector<BlockProvenance> provenance_;
};

}  // namespace invform
