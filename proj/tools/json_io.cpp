#include "json_io.hpp"

#include "invform/error.hpp"

namespace invform::cli {

namespace {

Scalar parse_entry(const Field& field, const json& v) {
  if (v.is_number_integer()) return Scalar(field, mpz_class(v.dump()));
  if (v.is_string()) return parse_scalar(field, v.get<std::string>());
  throw Error(ErrorKind::ParseError, "matrix entries must be integers or strings, got " + v.dump());
}

Matrix parse_matrix(const Field& field, const json& v, const char* what) {
  if (!v.is_array() || v.empty()) throw Error(ErrorKind::ParseError, std::string(what) + " must be a nonempty array of rows");
  const std::size_t n = v.size();
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = v[i];
    if (!row.is_array()) throw Error(ErrorKind::ParseError, std::string(what) + " row " + std::to_string(i) + " is not an array");
    if (row.size() != n) throw Error(ErrorKind::NotSquare, std::string(what) + " is not square");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = parse_entry(field, row[j]);
  }
  return m;
}

Field parse_field(const json& v) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "Q") return Field::rationals();
    throw Error(ErrorKind::ParseError, "unknown field \"" + s + "\"");
  }
  if (v.is_object() && v.contains("Fp") && v.size() == 1 && v["Fp"].is_number_unsigned()) {
    return Field::prime(v["Fp"].get<std::uint64_t>());
  }
  throw Error(ErrorKind::ParseError, "field must be \"Q\" or {\"Fp\": p}");
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::ParseError, "instance must be a JSON object");
  if (!doc.contains("field")) throw Error(ErrorKind::ParseError, "missing \"field\"");
  if (!doc.contains("matrix")) throw Error(ErrorKind::ParseError, "missing \"matrix\"");
  Instance inst;
  inst.field = parse_field(doc["field"]);
  inst.matrix = parse_matrix(inst.field, doc["matrix"], "matrix");
  if (doc.contains("gram")) {
    inst.gram = parse_matrix(inst.field, doc["gram"], "gram");
    if (inst.gram->rows() != inst.matrix.rows()) {
      throw Error(ErrorKind::DimensionMismatch, "gram and matrix have different sizes");
    }
  }
  try {
    if (doc.contains("symmetry")) inst.symmetry = parse_symmetry(doc["symmetry"].get<std::string>());
    if (doc.contains("setting")) inst.setting = parse_setting(doc["setting"].get<std::string>());
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return inst;
}

json field_json(const Field& field) {
  if (field.is_rationals()) return "Q";
  return json{{"Fp", field.modulus()}};
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json divisor_json(const ElementaryDivisor& d) {
  return json{{"p", d.p.to_string()}, {"k", d.k}, {"multiplicity", d.multiplicity}};
}

json certificate_json(const FormCertificate& cert) {
  json blocks = json::array();
  for (const auto& b : cert.provenance()) {
    blocks.push_back({{"route", b.route}, {"divisor", b.divisor}, {"offset", b.offset}, {"size", b.size}});
  }
  return json{{"symmetry", to_string(cert.symmetry())},
              {"setting", to_string(cert.setting())},
              {"field", field_json(cert.map().field())},
              {"matrix", matrix_json(cert.map())},
              {"gram", matrix_json(cert.gram())},
              {"checks",
               {{"invariance", cert.checks().invariance},
                {"symmetry", cert.checks().symmetry_ok},
                {"nondegenerate", cert.checks().nondegenerate}}},
              {"provenance", blocks}};
}

json decision_json(const DecisionReport& report) {
  json obstructions = json::array();
  for (const auto& o : report.obstructions) {
    obstructions.push_back({{"kind", to_string(o.kind)}, {"divisor", divisor_json(o.divisor)}, {"detail", o.detail}});
  }
  json divisors = json::array();
  for (const auto& d : report.divisors) divisors.push_back(divisor_json(d));
  json out{{"symmetry", to_string(report.symmetry)},
           {"setting", to_string(report.setting)},
           {"exists", report.exists},
           {"obstructions", obstructions},
           {"elementary_divisors", divisors}};
  if (report.witness) out["witness"] = certificate_json(*report.witness);
  return out;
}

json reality_json(const RealityReport& report) {
  json mismatches = json::array();
  for (const auto& m : report.mismatches) {
    mismatches.push_back({{"divisor", divisor_json(m.divisor)},
                          {"counterpart", m.counterpart ? divisor_json(*m.counterpart) : json(nullptr)}});
  }
  json out{{"is_real", report.is_real}, {"mismatches", mismatches}};
  if (report.splitting) {
    out["splitting"] = {{"basis1", matrix_json(report.splitting->basis1)},
                        {"basis2", matrix_json(report.splitting->basis2)}};
  }
  return out;
}

json decomposition_json(const OrthogonalSummandReport& report) {
  json summands = json::array();
  for (const auto& s : report.summands) {
    summands.push_back({{"kind", to_string(s.kind)}, {"block_size", s.block_size}, {"basis", matrix_json(s.basis)}});
  }
  return json{{"sign", report.sign}, {"summands", summands}};
}

json level_json(const LevelReport& report) {
  return json{{"level", report.level},
              {"witt_index", report.witt_index},
              {"dim", report.dim},
              {"bound_case", to_string(report.bound_case)},
              {"bound_satisfied", report.bound_satisfied}};
}

json form_space_json(const InvariantFormSpace& space) {
  json basis = json::array();
  for (const auto& b : space.basis) basis.push_back(matrix_json(b));
  return json{{"symmetry", to_string(space.symmetry)},
              {"setting", to_string(space.setting)},
              {"dimension", space.dimension()},
              {"basis", basis}};
}

}  // namespace invform::cli
