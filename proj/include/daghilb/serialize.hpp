// Copyright 2026 The daghilb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON encodings. Objects use nlohmann::json's default (sorted) key order,
// so encoding a decoded document reproduces it byte for byte.
//
//   Matrix     {"field": "R"|"C", "rows": m, "cols": n, "entries": [[re, im], ...]}
//   Mor        Matrix plus {"dom": d, "cod": c}
//   HObj       {"field": "R"|"C", "dim": d}
//   Fraction   {"num": Mor, "den": [re, im]}
//   ChainSpec  {"base": HObj, "scalars": [z1, ...], "sup": z}
//   Diagram    {"objects": [HObj, ...], "edges": [{"from": i, "to": j, "mor": Mor}, ...]}
//   Report     {"config": GenConfig, "checks": [CheckEntry, ...]}

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "daghilb/axiomsuite.hpp"
#include "daghilb/colimits.hpp"
#include "daghilb/concat.hpp"
#include "daghilb/fractions.hpp"
#include "daghilb/numkernel.hpp"

namespace daghilb {

using json = nlohmann::json;

/// Malformed or schema-violating input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline const json& member(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key '") + key + "'");
  return *it;
}

inline std::size_t as_size(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
    throw ParseError(std::string(what) + " must be a nonnegative integer");
  }
  return j.get<std::size_t>();
}

inline double as_double(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  return j.get<double>();
}

inline json encode_cplx(cplx z) { return json::array({z.real(), z.imag()}); }

inline cplx decode_cplx(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("complex entry must be [re, im]");
  return {as_double(j[0], "re"), as_double(j[1], "im")};
}

}  // namespace detail

inline Field field_from_json(const json& j) {
  if (j == "R") return Field::Real;
  if (j == "C") return Field::Complex;
  throw ParseError("field must be \"R\" or \"C\"");
}

// Matrix --------------------------------------------------------------------

inline json to_json(const Matrix& m) {
  json entries = json::array();
  for (const auto& z : m.entries()) entries.push_back(detail::encode_cplx(z));
  return {{"field", field_name(m.field())},
          {"rows", m.rows()},
          {"cols", m.cols()},
          {"entries", std::move(entries)}};
}

inline Matrix matrix_from_json(const json& j) {
  const Field f = field_from_json(detail::member(j, "field"));
  const std::size_t rows = detail::as_size(detail::member(j, "rows"), "rows");
  const std::size_t cols = detail::as_size(detail::member(j, "cols"), "cols");
  const json& e = detail::member(j, "entries");
  if (!e.is_array()) throw ParseError("entries must be an array");
  std::vector<cplx> data;
  data.reserve(e.size());
  for (const auto& z : e) data.push_back(detail::decode_cplx(z));
  if (data.size() != rows * cols) throw ParseError("entry count does not match rows x cols");
  try {
    return Matrix(f, rows, cols, std::move(data));
  } catch (const FieldMismatch& err) {
    throw ParseError(err.what());
  }
}

// HObj / Mor ----------------------------------------------------------------

inline json to_json(const HObj& h) { return {{"field", field_name(h.field)}, {"dim", h.dim}}; }

inline HObj hobj_from_json(const json& j) {
  return {field_from_json(detail::member(j, "field")),
          detail::as_size(detail::member(j, "dim"), "dim")};
}

inline json to_json(const Mor& m) {
  json j = to_json(m.mat());
  j["dom"] = m.dom().dim;
  j["cod"] = m.cod().dim;
  return j;
}

inline json to_json(const ConMor& m) { return to_json(m.mor()); }

inline Mor mor_from_json(const json& j) {
  Matrix mat = matrix_from_json(j);
  const std::size_t dom = detail::as_size(detail::member(j, "dom"), "dom");
  const std::size_t cod = detail::as_size(detail::member(j, "cod"), "cod");
  if (dom != mat.cols() || cod != mat.rows()) throw ParseError("dom/cod disagree with the matrix shape");
  const Field f = mat.field();
  return Mor(HObj{f, dom}, HObj{f, cod}, std::move(mat));
}

inline json to_json(const Factorization& f) { return {{"e", to_json(f.e)}, {"k", to_json(f.k)}}; }

// Fraction ------------------------------------------------------------------

inline json to_json(const Fraction& f) {
  return {{"num", to_json(f.num())}, {"den", detail::encode_cplx(f.den().value())}};
}

/// Throws ParseError on malformed input and Inadmissible if the numerator
/// is not a contraction or the denominator is out of range.
inline Fraction fraction_from_json(const json& j) {
  Mor num = mor_from_json(detail::member(j, "num"));
  const cplx den = detail::decode_cplx(detail::member(j, "den"));
  if (num.field() == Field::Real && den.imag() != 0.0) {
    throw ParseError("complex denominator on a real fraction");
  }
  const Field f = num.field();
  return Fraction(ConMor::admit(std::move(num)), Scalar(f, den));
}

// Colimit inputs --------------------------------------------------------------

inline json to_json(const ChainSpec& c) {
  return {{"base", to_json(c.base)}, {"scalars", c.scalars}, {"sup", c.sup}};
}

inline ChainSpec chain_spec_from_json(const json& j) {
  ChainSpec c;
  c.base = hobj_from_json(detail::member(j, "base"));
  const json& zs = detail::member(j, "scalars");
  if (!zs.is_array()) throw ParseError("scalars must be an array");
  for (const auto& z : zs) c.scalars.push_back(detail::as_double(z, "scalar"));
  c.sup = detail::as_double(detail::member(j, "sup"), "sup");
  return c;
}

inline json to_json(const FiniteDiagram& d) {
  json objects = json::array(), edges = json::array();
  for (const auto& h : d.objects()) objects.push_back(to_json(h));
  for (const auto& e : d.edges()) {
    edges.push_back({{"from", e.from}, {"to", e.to}, {"mor", to_json(e.mor)}});
  }
  return {{"objects", std::move(objects)}, {"edges", std::move(edges)}};
}

inline FiniteDiagram diagram_from_json(const json& j) {
  const json& objs = detail::member(j, "objects");
  const json& edges = detail::member(j, "edges");
  if (!objs.is_array() || !edges.is_array()) throw ParseError("objects and edges must be arrays");
  std::vector<HObj> objects;
  for (const auto& o : objs) objects.push_back(hobj_from_json(o));
  std::vector<FiniteDiagram::Edge> es;
  for (const auto& e : edges) {
    es.push_back({detail::as_size(detail::member(e, "from"), "from"),
                  detail::as_size(detail::member(e, "to"), "to"),
                  ConMor::admit(mor_from_json(detail::member(e, "mor")))});
  }
  return FiniteDiagram(std::move(objects), std::move(es));
}

// Reports -------------------------------------------------------------------

inline json to_json(const GenConfig& c) {
  json tol = json::object();
  for (const auto& [k, v] : c.tol_overrides) tol[k] = v;
  return {{"field", field_name(c.field)},
          {"dim_max", c.dim_max},
          {"trials", c.trials},
          {"seed", c.seed},
          {"tol_overrides", std::move(tol)}};
}

inline GenConfig gen_config_from_json(const json& j) {
  GenConfig c;
  c.field = field_from_json(detail::member(j, "field"));
  c.dim_max = detail::as_size(detail::member(j, "dim_max"), "dim_max");
  c.trials = detail::as_size(detail::member(j, "trials"), "trials");
  const json& seed = detail::member(j, "seed");
  if (!seed.is_number_integer()) throw ParseError("seed must be an integer");
  c.seed = seed.get<std::uint64_t>();
  const json& tol = detail::member(j, "tol_overrides");
  if (!tol.is_object()) throw ParseError("tol_overrides must be an object");
  for (const auto& [k, v] : tol.items()) c.tol_overrides[k] = detail::as_double(v, "tolerance");
  return c;
}

inline json to_json(const CheckEntry& e) {
  return {{"id", e.id},
          {"pass", e.pass},
          {"worst_residual", e.worst_residual},
          {"instance_digest", e.instance_digest},
          {"skipped", e.skipped},
          {"note", e.note}};
}

inline CheckEntry check_entry_from_json(const json& j) {
  CheckEntry e;
  e.id = detail::member(j, "id").get<std::string>();
  e.pass = detail::member(j, "pass").get<bool>();
  e.worst_residual = detail::as_double(detail::member(j, "worst_residual"), "worst_residual");
  e.instance_digest = detail::member(j, "instance_digest").get<std::string>();
  e.skipped = detail::member(j, "skipped").get<bool>();
  e.note = detail::member(j, "note").get<std::string>();
  return e;
}

inline json to_json(const AxiomReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"config", to_json(r.config)}, {"checks", std::move(checks)}};
}

inline AxiomReport report_from_json(const json& j) {
  AxiomReport r;
  r.config = gen_config_from_json(detail::member(j, "config"));
  for (const auto& c : detail::member(j, "checks")) r.checks.push_back(check_entry_from_json(c));
  return r;
}

/// Parses text, mapping syntax errors to ParseError.
inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace daghilb
