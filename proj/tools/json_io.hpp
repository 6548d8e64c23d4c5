#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "invform/canonical.hpp"
#include "invform/certificate.hpp"
#include "invform/decision.hpp"
#include "invform/isometry.hpp"
#include "invform/oracle.hpp"

namespace invform::cli {

using json = nlohmann::ordered_json;

/// One problem instance as read from disk or stdin:
///   {"field": "Q" | {"Fp": p}, "matrix": [[...]], "gram": [[...]],
///    "symmetry": "symmetric" | "skew", "setting": "invariant" | "infinitesimal"}
/// Entries are integers or strings "a/b". Only field and matrix are required.
struct Instance {
  Field field;
  Matrix matrix;
  std::optional<Matrix> gram;
  std::optional<Symmetry> symmetry;
  std::optional<Setting> setting;
};

/// Throws Error(ParseError / NotSquare / DimensionMismatch) on malformed input.
[[nodiscard]] Instance parse_instance(const std::string& text);

[[nodiscard]] json field_json(const Field& field);
[[nodiscard]] json matrix_json(const Matrix& m);
[[nodiscard]] json divisor_json(const ElementaryDivisor& d);
[[nodiscard]] json certificate_json(const FormCertificate& cert);
[[nodiscard]] json decision_json(const DecisionReport& report);
[[nodiscard]] json reality_json(const RealityReport& report);
[[nodiscard]] json decomposition_json(const OrthogonalSummandReport& report);
[[nodiscard]] json level_json(const LevelReport& report);
[[nodiscard]] json form_space_json(const InvariantFormSpace& space);

}  // namespace invform::cli
