#include "cob2/io.hpp"

#include <utility>
#include <vector>

#include "cob2/errors.hpp"
#include "json.hpp"

namespace cob2 {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

FieldSpec read_field(const json& node) {
  if (node.is_string() && node.get<std::string>() == "rational") return FieldSpec::rational();
  if (node.is_object() && node.contains("prime") && node.at("prime").is_number_unsigned()) {
    return FieldSpec::prime(node.at("prime").get<std::uint64_t>());
  }
  throw FormatError("'field' must be \"rational\" or {\"prime\": p}");
}

FieldValue read_value(const json& node, FieldSpec field) {
  if (node.is_number_integer()) {
    return FieldValue::integer(field, mpz_class(node.dump(), 10));
  }
  if (node.is_string()) return FieldValue::parse(field, node.get<std::string>());
  throw FormatError("expected an integer or an \"a/b\" string, found " + node.dump());
}

std::vector<FieldValue> read_vector(const json& doc, const char* key, std::size_t dim,
                                    FieldSpec field) {
  const json& node = doc.at(key);
  if (!node.is_array() || node.size() != dim) {
    throw FormatError(std::string("'") + key + "' must be an array of " + std::to_string(dim) +
                      " values");
  }
  std::vector<FieldValue> out;
  for (const auto& v : node) out.push_back(read_value(v, field));
  return out;
}

std::vector<FieldValue> read_cube(const json& doc, const char* key, std::size_t dim,
                                  FieldSpec field) {
  const json& node = doc.at(key);
  const std::string shape = std::to_string(dim) + "x" + std::to_string(dim) + "x" +
                            std::to_string(dim);
  auto bad = [&]() { return FormatError(std::string("'") + key + "' must be a " + shape + " array"); };
  if (!node.is_array() || node.size() != dim) throw bad();
  std::vector<FieldValue> out;
  for (const auto& plane : node) {
    if (!plane.is_array() || plane.size() != dim) throw bad();
    for (const auto& row : plane) {
      if (!row.is_array() || row.size() != dim) throw bad();
      for (const auto& v : row) out.push_back(read_value(v, field));
    }
  }
  return out;
}

ordered write_cube(const std::vector<FieldValue>& values, std::size_t dim) {
  ordered planes = ordered::array();
  for (std::size_t a = 0; a < dim; ++a) {
    ordered plane = ordered::array();
    for (std::size_t b = 0; b < dim; ++b) {
      ordered row = ordered::array();
      for (std::size_t c = 0; c < dim; ++c) row.push_back(values[(a * dim + b) * dim + c].to_string());
      plane.push_back(std::move(row));
    }
    planes.push_back(std::move(plane));
  }
  return planes;
}

ordered write_vector(const std::vector<FieldValue>& values) {
  ordered out = ordered::array();
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

}  // namespace

FrobeniusAlgebraData algebra_from_json(std::string_view text,
                                       std::optional<FieldSpec> field_override) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("algebra JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("algebra JSON must be an object");
  try {
    const FieldSpec field = field_override ? *field_override : read_field(doc.at("field"));
    if (!doc.at("dim").is_number_unsigned() || doc.at("dim").get<std::size_t>() == 0) {
      throw FormatError("'dim' must be a positive integer");
    }
    const auto dim = doc.at("dim").get<std::size_t>();
    std::vector<std::string> labels;
    if (doc.contains("labels")) labels = doc.at("labels").get<std::vector<std::string>>();
    auto mu = read_cube(doc, "mu", dim, field);
    auto unit = read_vector(doc, "unit", dim, field);
    auto counit = read_vector(doc, "counit", dim, field);
    if (!doc.contains("delta")) {
      return derive_comultiplication(field, dim, std::move(mu), std::move(unit), std::move(counit),
                                     std::move(labels));
    }
    FrobeniusAlgebraData a{field,          dim, std::move(mu), std::move(unit),
                           read_cube(doc, "delta", dim, field), std::move(counit),
                           std::move(labels)};
    a.validate_shape();
    return a;
  } catch (const json::exception& e) {
    throw FormatError(std::string("algebra JSON: ") + e.what());
  }
}

std::string algebra_to_json(const FrobeniusAlgebraData& a) {
  ordered doc;
  if (a.field.is_rational()) {
    doc["field"] = "rational";
  } else {
    doc["field"] = {{"prime", a.field.characteristic()}};
  }
  doc["dim"] = a.dim;
  doc["mu"] = write_cube(a.mu, a.dim);
  doc["unit"] = write_vector(a.unit);
  doc["delta"] = write_cube(a.delta, a.dim);
  doc["counit"] = write_vector(a.counit);
  if (!a.labels.empty()) doc["labels"] = a.labels;
  return doc.dump(2);
}

std::string matrix_to_json(const ExactMatrix& m) {
  ordered rows = ordered::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered row = ordered::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  ordered doc = {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
  return doc.dump();
}

std::string matrix_to_csv(const ExactMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ',';
      out += m(r, c).to_string();
    }
    out += '\n';
  }
  return out;
}

}  // namespace cob2
