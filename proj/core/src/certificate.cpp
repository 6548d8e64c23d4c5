#include "invform/certificate.hpp"

#include "invform/error.hpp"

namespace invform {

std::string_view to_string(Symmetry s) noexcept {
  return s == Symmetry::Symmetric ? "symmetric" : "skew";
}

std::string_view to_string(Setting s) noexcept {
  return s == Setting::Invariant ? "invariant" : "infinitesimal";
}

Symmetry parse_symmetry(std::string_view text) {
  if (text == "symmetric") return Symmetry::Symmetric;
  if (text == "skew" || text == "skew-symmetric") return Symmetry::SkewSymmetric;
  throw Error(ErrorKind::InvalidInput, "unknown symmetry '" + std::string(text) + "'");
}

Setting parse_setting(std::string_view text) {
  if (text == "invariant") return Setting::Invariant;
  if (text == "infinitesimal") return Setting::Infinitesimal;
  throw Error(ErrorKind::InvalidInput, "unknown setting '" + std::string(text) + "'");
}

FormChecks verify_form(const Matrix& map, const Matrix& gram, Symmetry symmetry, Setting setting) {
  FormChecks c;
  const std::size_t n = map.rows();
  if (!map.is_square() || !gram.is_square() || gram.rows() != n || !(map.field() == gram.field())) return c;

  const Matrix mt = map.transpose();
  if (setting == Setting::Invariant) {
    c.invariance = mt * gram * map == gram;
  } else {
    c.invariance = (mt * gram + gram * map).is_zero();
  }

  c.symmetry_ok = true;
  for (std::size_t i = 0; i < n && c.symmetry_ok; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool ok = symmetry == Symmetry::Symmetric ? gram(i, j) == gram(j, i) : gram(i, j) == -gram(j, i);
      if (!ok) {
        c.symmetry_ok = false;
        break;
      }
    }
    // Alternating, not merely antisymmetric (matters only in characteristic 2).
    if (symmetry == Symmetry::SkewSymmetric && !gram(i, i).is_zero()) c.symmetry_ok = false;
  }

  c.nondegenerate = !det(gram).is_zero();
  return c;
}

FormCertificate::FormCertificate(Matrix map, Matrix gram, Symmetry symmetry, Setting setting, FormChecks checks,
                                 std::vector<BlockProvenance> provenance)
    : map_(std::move(map)),
      gram_(std::move(gram)),
      symmetry_(symmetry),
      setting_(setting),
      checks_(checks),
      provenance_(std::move(provenance)) {}

FormCertificate FormCertificate::create(Matrix map, Matrix gram, Symmetry symmetry, Setting setting,
                                        std::vector<BlockProvenance> provenance) {
  const FormChecks checks = verify_form(map, gram, symmetry, setting);
  if (!checks.all()) {
    throw Error(ErrorKind::VerificationFailed,
                std::string("invariance=") + (checks.invariance ? "ok" : "FAIL") +
                    " symmetry=" + (checks.symmetry_ok ? "ok" : "FAIL") +
                    " nondegenerate=" + (checks.nondegenerate ? "ok" : "FAIL"));
  }
  return FormCertificate(std::move(map), std::move(gram), symmetry, setting, checks, std::move(provenance));
}

}  // namespace invform
