#ifndef MIXHOM_IO_HPP
#define MIXHOM_IO_HPP

#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mixhom/builders.hpp"
#include "mixhom/complex.hpp"
#include "mixhom/poly.hpp"

// JSON readers and writers for the documented file formats.
//
// Complex files:
//   {"field": {"type": "Q"} | {"type": "Fp", "p": 101},
//    "name": ..., "N": ..., "dims": [...],
//    "b": {"1": [[...]], ...}, "d": {"0": [[...]], ...},
//    "trusted": optional degree for truncated towers}
// Algebra files:
//   {"dim": 4, "labels": [...], "table": [[[coeffs]...]...],
//    "sigma": optional matrix}
// Coefficient files: an array of polynomials, each an array of
// coefficients with the constant term first.
//
// Scalars are JSON integers or strings such as "-3/4"; prime-field
// entries are reduced modulo p. Writers emit insertion-ordered JSON so
// identical inputs always serialize to identical bytes.

namespace mixhom {

using Json = nlohmann::ordered_json;

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw error("invalid JSON in " + path + ": " + e.what());
  }
}

// Which field a complex file lives over; decides the scalar type the
// caller instantiates everything else with.
struct FieldSpec {
  bool rational = true;
  long p = 0;
};

inline FieldSpec field_spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
    throw error("field section needs a type of \"Q\" or \"Fp\"");
  std::string type = j.at("type").get<std::string>();
  if (type == "Q") return {true, 0};
  if (type == "Fp") {
    if (!j.contains("p") || !j.at("p").is_number_integer())
      throw error("field Fp needs an integer modulus p");
    return {false, j.at("p").get<long>()};
  }
  throw error("unknown field type '" + type + "'");
}

template <class K>
Json field_spec_to_json(const Field<K>& fld) {
  Json j;
  if (fld.characteristic() == 0) {
    j["type"] = "Q";
  } else {
    j["type"] = "Fp";
    j["p"] = fld.characteristic();
  }
  return j;
}

template <class K>
K scalar_from_json(const Json& j, const Field<K>& fld) {
  if (j.is_number_integer()) return fld.from_long(j.get<long>());
  if (j.is_string()) return fld.parse(j.get<std::string>());
  throw error("scalar entries must be integers or strings like \"a/b\"");
}

// Integers stay JSON numbers, fractions become "a/b" strings.
template <class K>
Json scalar_to_json(const K& a, const Field<K>& fld) {
  std::string s = fld.str(a);
  if (s.find('/') == std::string::npos) {
    try {
      std::size_t pos = 0;
      long long v = std::stoll(s, &pos);
      if (pos == s.size()) return Json(v);
    } catch (const std::exception&) {
    }
  }
  return Json(s);
}

template <class K>
Matrix<K> matrix_from_json(const Json& j, std::size_t rows, std::size_t cols,
                           const Field<K>& fld, const std::string& what) {
  if (!j.is_array() || j.size() != rows)
    throw error(what + " must be an array of " + std::to_string(rows) +
                " rows");
  Matrix<K> m(rows, cols, fld);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j.at(i);
    if (!row.is_array() || row.size() != cols)
      throw error(what + " row " + std::to_string(i) + " must have " +
                  std::to_string(cols) + " entries");
    for (std::size_t k = 0; k < cols; ++k)
      m.at(i, k) = scalar_from_json(row.at(k), fld);
  }
  return m;
}

template <class K>
Json matrix_to_json(const Matrix<K>& m, const Field<K>& fld) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(scalar_to_json(m.at(i, j), fld));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Reads one family of maps keyed by degree strings, taking shapes from
// the dimension vector. Missing degrees are zero maps; degrees outside
// the valid range are rejected as typos.
template <class K>
std::vector<Matrix<K>> map_family_from_json(
    const Json& j, const std::vector<std::size_t>& dims, long low, long high,
    bool lowers_degree, const Field<K>& fld, const std::string& what) {
  if (!j.is_object())
    throw error(what + " must be an object keyed by degree");
  for (const auto& [key, value] : j.items()) {
    long n;
    try {
      std::size_t pos = 0;
      n = std::stol(key, &pos);
      if (pos != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw error(what + " has a non-numeric degree key '" + key + "'");
    }
    if (n < low || n > high)
      throw error(what + " has no degree " + key + "; valid degrees are " +
                  std::to_string(low) + ".." + std::to_string(high));
  }
  std::vector<Matrix<K>> out;
  for (long n = low; n <= high; ++n) {
    std::size_t src = dims[static_cast<std::size_t>(n)];
    std::size_t tgt = dims[static_cast<std::size_t>(lowers_degree ? n - 1
                                                                  : n + 1)];
    std::string key = std::to_string(n);
    if (j.contains(key))
      out.push_back(matrix_from_json(j.at(key), tgt, src, fld,
                                     what + "[" + key + "]"));
    else
      out.push_back(Matrix<K>(tgt, src, fld));
  }
  return out;
}

template <class K>
ComplexPtr<K> complex_from_json(const Json& j, const Field<K>& fld,
                                const std::string& fallback_name = "complex") {
  if (!j.is_object()) throw error("complex file must be a JSON object");
  if (!j.contains("dims") || !j.at("dims").is_array())
    throw error("complex file needs a dims array");
  std::vector<std::size_t> dims;
  for (const Json& entry : j.at("dims")) {
    if (!entry.is_number_integer() || entry.get<long>() < 0)
      throw error("dims entries must be non-negative integers");
    dims.push_back(entry.get<std::size_t>());
  }
  if (dims.empty()) throw error("complex file needs at least degree 0");
  long N = static_cast<long>(dims.size()) - 1;
  if (j.contains("N") && j.at("N").get<long>() != N)
    throw error("N is " + j.at("N").dump() + " but dims has top degree " +
                std::to_string(N));
  std::vector<Matrix<K>> b = map_family_from_json(
      j.value("b", Json::object()), dims, 1, N, true, fld, "b");
  std::vector<Matrix<K>> d = map_family_from_json(
      j.value("d", Json::object()), dims, 0, N - 1, false, fld, "d");
  std::string name = j.value("name", fallback_name);
  std::optional<long> trusted;
  if (j.contains("trusted")) trusted = j.at("trusted").get<long>();
  ComplexPtr<K> D = share(MixedComplex<K>(fld, std::move(dims), std::move(b),
                                          std::move(d), std::move(name),
                                          trusted));
  D->require_valid();
  return D;
}

template <class K>
Json complex_to_json(const MixedComplex<K>& D) {
  const Field<K>& fld = D.field();
  Json j;
  j["field"] = field_spec_to_json(fld);
  j["name"] = D.name();
  j["N"] = D.top_degree();
  j["dims"] = D.dims();
  if (D.is_truncated()) j["trusted"] = D.trusted_degree();
  Json b = Json::object();
  for (long n = 1; n <= D.top_degree(); ++n)
    b[std::to_string(n)] = matrix_to_json(D.b(n), fld);
  j["b"] = std::move(b);
  Json d = Json::object();
  for (long n = 0; n < D.top_degree(); ++n)
    d[std::to_string(n)] = matrix_to_json(D.d(n), fld);
  j["d"] = std::move(d);
  return j;
}

template <class K>
Algebra<K> algebra_from_json(const Json& j, const Field<K>& fld) {
  if (!j.is_object()) throw error("algebra file must be a JSON object");
  if (!j.contains("table") || !j.at("table").is_array())
    throw error("algebra file needs a structure constant table");
  std::size_t dim = j.at("table").size();
  if (j.contains("dim") && j.at("dim").get<std::size_t>() != dim)
    throw error("dim is " + j.at("dim").dump() + " but the table has " +
                std::to_string(dim) + " rows");
  std::vector<std::vector<std::vector<K>>> table(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const Json& row = j.at("table").at(i);
    if (!row.is_array() || row.size() != dim)
      throw error("table row " + std::to_string(i) + " must have " +
                  std::to_string(dim) + " entries");
    for (std::size_t k = 0; k < dim; ++k) {
      const Json& entry = row.at(k);
      if (!entry.is_array() || entry.size() != dim)
        throw error("structure constant (" + std::to_string(i) + ", " +
                    std::to_string(k) + ") must list " + std::to_string(dim) +
                    " coefficients");
      std::vector<K> coeffs;
      for (const Json& c : entry) coeffs.push_back(scalar_from_json(c, fld));
      table[i].push_back(std::move(coeffs));
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels"))
    labels = j.at("labels").get<std::vector<std::string>>();
  std::optional<Matrix<K>> sigma;
  if (j.contains("sigma"))
    sigma = matrix_from_json(j.at("sigma"), dim, dim, fld, "sigma");
  return Algebra<K>(fld, std::move(labels), std::move(table),
                    std::move(sigma));
}

template <class K>
PolySeq<K> polyseq_from_json(const Json& j, const Field<K>& fld) {
  if (!j.is_array() || j.empty())
    throw error("coefficient file must be a non-empty array of polynomials");
  std::vector<Poly<K>> polys;
  for (const Json& entry : j) {
    if (!entry.is_array())
      throw error("each polynomial must be an array of coefficients");
    std::vector<K> coeffs;
    for (const Json& c : entry) coeffs.push_back(scalar_from_json(c, fld));
    polys.push_back(Poly<K>(fld, std::move(coeffs)));
  }
  return PolySeq<K>::explicit_list(fld, std::move(polys));
}

}  // namespace mixhom

#endif  // MIXHOM_IO_HPP
