#pragma once

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>

#include "translie/identity_lab.hpp"
#include "translie/linear_system.hpp"
#include "translie/tp_params.hpp"
#include "translie/tp_structures.hpp"

namespace translie::json_io {

using Json = nlohmann::ordered_json;

/// Scalars travel as strings ("-3/4", "1/2+5i") so that they stay exact.
inline Json to_json(const Scalar& s) { return s.to_string(); }

inline Json to_json(const Element& e) {
  Json out = Json::object();
  for (const auto& [s, c] : e) out[s.to_string()] = c.to_string();
  return out;
}

inline Json to_json(const std::vector<BasisSymbol>& symbols) {
  Json out = Json::array();
  for (const auto& s : symbols) out.push_back(s.to_string());
  return out;
}

inline Json to_json(const Window& w) { return Json::array({w.lo(), w.hi()}); }

inline Json to_json(const FiniteFunctional& f) {
  Json out = Json::object();
  for (const auto& [r, v] : f.values()) out[std::to_string(r)] = v.to_string();
  return out;
}

inline Json to_json(const std::map<std::int64_t, Scalar>& m) {
  Json out = Json::object();
  for (const auto& [r, v] : m) out[std::to_string(r)] = v.to_string();
  return out;
}

inline Json to_json(const Violation& v) {
  return Json{{"inputs", to_json(v.inputs)},
              {"lhs", to_json(v.lhs)},
              {"rhs", to_json(v.rhs)},
              {"residual", to_json(v.residual)}};
}

/// Sparse form of a vector over named unknowns: {"a[0]": "1", ...}.
inline Json to_json(const std::vector<UnknownId>& unknowns, const DenseVector& v) {
  Json out = Json::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out[unknowns[i].to_string()] = v[i].to_string();
  return out;
}

/// {"alpha": "5", "c": {"1": "1"}, "d": [[0, 0, 0, "5"]], "f": {"0": "1"}, "k": 2}
inline Json to_json(const TPParams& p) {
  Json d = Json::array();
  for (const auto& [key, v] : p.d) d.push_back(Json::array({key[0], key[1], key[2], v.to_string()}));
  return Json{{"alpha", to_json(p.alpha)}, {"c", to_json(p.c)}, {"d", d}, {"f", to_json(p.f)}, {"k", p.k}};
}

inline Json to_json(const std::vector<ParamWitness>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(Json{{"indices", w.indices}, {"residual", w.residual.to_string()}});
  return out;
}

inline Json to_json(const TPValidationReport& r) {
  return Json{{"symmetry", to_json(r.symmetry)}, {"marginal", to_json(r.marginal)}, {"exchange", to_json(r.exchange)}};
}

// ---- reading ---------------------------------------------------------------

inline std::int64_t read_index_key(const std::string& key, const std::string& field) {
  std::size_t pos = 0;
  std::int64_t r = 0;
  try {
    r = std::stoll(key, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != key.size() || key.empty()) throw SchemaError(field + ": index key '" + key + "' is not an integer");
  return r;
}

inline Scalar read_scalar(const Json& j, const std::string& field) {
  if (j.is_string()) {
    try {
      return Scalar::parse(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(field + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Scalar(j.get<std::int64_t>());
  throw SchemaError(field + ": expected a scalar string");
}

inline std::int64_t read_int(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) throw SchemaError(field + ": expected an integer");
  return j.get<std::int64_t>();
}

inline Window read_window(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2) throw SchemaError(field + ": expected [lo, hi]");
  const auto lo = read_int(j[0], field + "[0]");
  const auto hi = read_int(j[1], field + "[1]");
  if (lo > hi) throw SchemaError(field + ": lower bound " + std::to_string(lo) + " exceeds upper bound " + std::to_string(hi));
  return {lo, hi};
}

inline std::map<std::int64_t, Scalar> read_index_map(const Json& j, const std::string& field) {
  if (!j.is_object()) throw SchemaError(field + ": expected an object {index: scalar}");
  std::map<std::int64_t, Scalar> out;
  for (const auto& [key, value] : j.items()) {
    Scalar v = read_scalar(value, field + "." + key);
    if (!v.is_zero()) out[read_index_key(key, field)] = v;
  }
  return out;
}

}  // namespace translie::json_io
