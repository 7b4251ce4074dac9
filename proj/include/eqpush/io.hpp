#pragma once

/**
 * @file io.hpp
 * @brief Text rendering and JSON serialization of polynomials, results and reports.
 *
 * JSON polynomial format: an array of {"coeff": "p" | "p/q", "exp": [int, ...]}
 * records in canonical (descending lexicographic) order.
 */

#include <cstddef>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "eqpush/error.hpp"
#include "eqpush/localization.hpp"
#include "eqpush/partition.hpp"
#include "eqpush/pushforward.hpp"
#include "eqpush/scalar.hpp"
#include "eqpush/sparse_poly.hpp"

namespace eqpush {

using json = nlohmann::ordered_json;

/// "z1^2*z2 + z1*z2^2", "2*t1^2", "-t1^2 + t2^2", "0".
inline std::string format_poly(const SparsePoly& p, std::string_view var = "t") {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;

    const Scalar magnitude = abs(c);
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += std::string(var) + std::to_string(i + 1);
      if (m[i] != 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) out += format_scalar(magnitude);
    else if (magnitude == 1) out += mono;
    else out += format_scalar(magnitude) + "*" + mono;
  }
  return out;
}

inline json poly_to_json(const SparsePoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"coeff", format_scalar(c)}, {"exp", m.exponents}});
  return terms;
}

/// Inverse of poly_to_json. nvars is needed for the zero polynomial and is checked against every record.
inline SparsePoly poly_from_json(const json& j, std::size_t nvars) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "polynomial JSON must be an array");
  SparsePoly p(nvars);
  for (const auto& rec : j) {
    if (!rec.is_object() || !rec.contains("coeff") || !rec.contains("exp") || !rec["coeff"].is_string() ||
        !rec["exp"].is_array())
      throw Error(ErrorKind::ParseError, "polynomial term must be {\"coeff\": string, \"exp\": array}");
    std::vector<int> exps;
    for (const auto& e : rec["exp"]) {
      if (!e.is_number_integer()) throw Error(ErrorKind::ParseError, "exponent must be an integer");
      exps.push_back(e.get<int>());
    }
    if (exps.size() != nvars) throw Error(ErrorKind::VariableCountMismatch, "exponent vector length");
    p.add_term(Monomial(std::move(exps)), parse_scalar(rec["coeff"].get<std::string>()));
  }
  return p;
}

inline json partition_to_json(const Partition& p) { return p.parts(); }

inline json result_to_json(const PushforwardResult& r) {
  json out;
  out["value"] = poly_to_json(r.value);
  out["value_text"] = format_poly(r.value, "t");
  if (r.decomposition) {
    out["decomposition"] = {{"mu", partition_to_json(r.decomposition->mu)},
                            {"constant", format_scalar(r.decomposition->constant)}};
  } else {
    out["decomposition"] = nullptr;
  }
  return out;
}

inline json scalars_to_json(std::span<const Scalar> xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(format_scalar(x));
  return out;
}

inline json report_to_json(const CrossCheckReport& report) {
  json out = json::array();
  for (const auto& e : report.entries)
    out.push_back({{"point", scalars_to_json(e.point)},
                   {"lhs", format_scalar(e.lhs)},
                   {"rhs", format_scalar(e.rhs)},
                   {"match", e.match}});
  return out;
}

}  // namespace eqpush
