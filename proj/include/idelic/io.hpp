#pragma once

// JSON encodings of presentations, ideles, divisors and covers.
//
//   presentation: {"surgery": {"components": [...], "matrix": [[...]]},
//                  "link": {"components": [...], "lk_with_surgery": [[...]],
//                           "lk_mutual": [[...]]}}
//   idele:        {"K1": [x, y], ...}
//   divisor:      {"K1": c, ...}
//   cover:        {"branch_link": [...], "target": [n1, ...], "phi": [[...], ...]}
//
// Integers may be given as JSON numbers or decimal strings; output uses
// numbers when the value fits in 64 bits.

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idelic/class_field.hpp"
#include "idelic/error.hpp"
#include "idelic/ideles.hpp"
#include "idelic/int_matrix.hpp"
#include "idelic/presentation.hpp"

namespace idelic::io {

using json = nlohmann::json;

inline Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw Error(ErrorCode::ParseError, "not an integer: " + j.dump());
    return v;
  }
  throw Error(ErrorCode::ParseError, "expected an integer, got " + j.dump());
}

inline json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

inline std::string integer_string(const Integer& v) { return v.get_str(); }

/// "p/q" in lowest terms with q > 0, or "p" for integers.
inline std::string rational_string(Rational q) {
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline json string_list(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(integer_string(x));
  return out;
}

inline json int_list(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

inline std::vector<std::string> names_from_json(const json& j, std::string_view what) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, std::string(what) + " must be an array of names");
  std::vector<std::string> out;
  for (const auto& n : j) {
    if (!n.is_string()) throw Error(ErrorCode::ParseError, std::string(what) + " entries must be strings");
    out.push_back(n.get<std::string>());
  }
  return out;
}

// rows x cols integer matrix; an absent/empty array is accepted when the
// expected shape has no entries.
inline IntMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, std::string_view what) {
  IntMatrix m(rows, cols);
  if (j.is_null() || (j.is_array() && j.empty() && rows * cols == 0)) {
    if (rows != 0 && cols != 0) throw Error(ErrorCode::BadDimensions, std::string(what) + " is missing");
    return m;
  }
  if (!j.is_array() || j.size() != rows)
    throw Error(ErrorCode::BadDimensions, std::string(what) + " must have " + std::to_string(rows) + " rows");
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw Error(ErrorCode::BadDimensions, std::string(what) + " row " + std::to_string(i) + " must have " +
                                                std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = integer_from_json(j[i][c]);
  }
  return m;
}

inline json matrix_to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_to_json(m(i, c)));
    out.push_back(row);
  }
  return out;
}

inline SurgeryPresentation presentation_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "input must be a JSON object");
  SurgeryPresentation p;
  json surgery = j.value("surgery", json::object());
  json link = j.value("link", json::object());
  p.surgery_names = names_from_json(surgery.value("components", json::array()), "surgery.components");
  p.knot_names = names_from_json(link.value("components", json::array()), "link.components");
  const std::size_t s = p.surgery_names.size(), r = p.knot_names.size();
  p.lambda = matrix_from_json(surgery.value("matrix", json()), s, s, "surgery.matrix");
  p.lk_with_surgery = matrix_from_json(link.value("lk_with_surgery", json()), r, s, "link.lk_with_surgery");
  p.lk_mutual = matrix_from_json(link.value("lk_mutual", json()), r, r, "link.lk_mutual");
  return p;
}

inline json presentation_to_json(const SurgeryPresentation& p) {
  return {{"surgery", {{"components", p.surgery_names}, {"matrix", matrix_to_json(p.lambda)}}},
          {"link",
           {{"components", p.knot_names},
            {"lk_with_surgery", matrix_to_json(p.lk_with_surgery)},
            {"lk_mutual", matrix_to_json(p.lk_mutual)}}}};
}

inline Idele idele_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "idele must be an object {\"K\": [x, y]}");
  Idele a;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_array() || v.size() != 2) throw Error(ErrorCode::ParseError, "idele component '" + k + "' must be [x, y]");
    a.set(k, integer_from_json(v[0]), integer_from_json(v[1]));
  }
  return a;
}

inline json idele_to_json(const Idele& a) {
  json out = json::object();
  for (const auto& [k, c] : a.support()) out[k] = {integer_to_json(c.x), integer_to_json(c.y)};
  return out;
}

inline Divisor divisor_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "divisor must be an object {\"K\": c}");
  Divisor d;
  for (const auto& [k, v] : j.items()) d.set(k, integer_from_json(v));
  return d;
}

inline json divisor_to_json(const Divisor& d) {
  json out = json::object();
  for (const auto& [k, c] : d.coeffs()) out[k] = integer_to_json(c);
  return out;
}

/// "K1=1,K2=-2"
inline Divisor divisor_from_string(std::string_view text) {
  Divisor d;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw Error(ErrorCode::ParseError, "divisor entries look like K=c: '" + std::string(item) + "'");
    Integer c;
    if (c.set_str(std::string(item.substr(eq + 1)), 10) != 0)
      throw Error(ErrorCode::ParseError, "bad coefficient in '" + std::string(item) + "'");
    std::string knot(item.substr(0, eq));
    d.set(knot, d.at(knot) + c);
    pos = end + 1;
  }
  return d;
}

inline json cover_to_json(const CoverSpec& h) {
  json phi = json::array();
  for (std::size_t g = 0; g < h.stage().generator_count(); ++g) phi.push_back(int_list(h.generator_value(g)));
  return {{"branch_link", h.branch_link()}, {"target", int_list(h.target().orders())}, {"phi", phi}};
}

inline CoverSpec cover_from_json(const Manifold& m, const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "cover must be an object");
  auto link = names_from_json(j.value("branch_link", json::array()), "branch_link");
  json target_json = j.value("target", json::array());
  if (!target_json.is_array()) throw Error(ErrorCode::ParseError, "target must be an array of orders");
  IntVector orders;
  for (const auto& n : target_json) orders.push_back(integer_from_json(n));
  json phi_json = j.value("phi", json::array());
  if (!phi_json.is_array()) throw Error(ErrorCode::ParseError, "phi must be an array of values");
  std::vector<IntVector> values;
  for (const auto& v : phi_json) {
    if (!v.is_array()) throw Error(ErrorCode::ParseError, "each phi value must be an array");
    IntVector val;
    for (const auto& x : v) val.push_back(integer_from_json(x));
    values.push_back(std::move(val));
  }
  return make_cover(m, std::move(link), FiniteAbelianGroup(std::move(orders)), values);
}

}  // namespace idelic::io
