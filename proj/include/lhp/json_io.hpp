// JSON encodings shared by the library and the command-line tool.
//
//   Rational        "num/den" string ("num" for integers)
//   Polynomial      array of Rational strings, ascending exponent, no trailing zero
//   RootIsolation   {"polynomial": [...], "roots": [{"lo", "hi", "multiplicity"}]}
//   NXMatrix        grid of {"const": q} or {"x": q}
//   SectionSequence {"r": r, "sections": [poly, ...]}
//   complexes       {"vertices": [label, ...], "facets": [[label, ...], ...]}
//
// Matrix coordinates in certificates are 1-based.
#pragma once

#include "lhp/edgewise.hpp"
#include "lhp/interlacing.hpp"
#include "lhp/real_roots.hpp"
#include "lhp/subdivision.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

template <>
struct nlohmann::adl_serializer<lhp::Rational> {
  static void to_json(json& j, const lhp::Rational& q) { j = lhp::to_string(q); }
  static void from_json(const json& j, lhp::Rational& q) {
    if (j.is_number_integer()) {
      q = lhp::Rational(j.get<long long>());
      return;
    }
    q = lhp::parse_rational(j.get<std::string>());
  }
};

namespace lhp {

using nlohmann::json;

inline void to_json(json& j, const Polynomial& p) {
  j = json::array();
  for (const auto& c : p.coeffs()) j.push_back(c);
}

inline void from_json(const json& j, Polynomial& p) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array of coefficients");
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(c.get<Rational>());
  if (!coeffs.empty() && coeffs.back() == 0) throw std::invalid_argument("polynomial has a trailing zero coefficient");
  p = Polynomial(std::move(coeffs));
}

inline Polynomial parse_polynomial_json(const std::string& text) { return json::parse(text).get<Polynomial>(); }

inline void to_json(json& j, const Interval& iv) { j = json{{"lo", iv.lo}, {"hi", iv.hi}}; }
inline void from_json(const json& j, Interval& iv) {
  iv.lo = j.at("lo").get<Rational>();
  iv.hi = j.at("hi").get<Rational>();
  if (!(iv.lo < iv.hi)) throw std::invalid_argument("interval needs lo < hi");
}

inline void to_json(json& j, const RootIsolation& iso) {
  json roots = json::array();
  for (const auto& r : iso.roots)
    roots.push_back({{"lo", r.interval.lo}, {"hi", r.interval.hi}, {"multiplicity", r.multiplicity}});
  j = json{{"polynomial", iso.poly}, {"roots", roots}};
}

inline void from_json(const json& j, RootIsolation& iso) {
  iso.poly = j.at("polynomial").get<Polynomial>();
  iso.roots.clear();
  for (const auto& r : j.at("roots"))
    iso.roots.push_back({r.get<Interval>(), r.at("multiplicity").get<unsigned>()});
}

inline void to_json(json& j, const NXEntry& e) {
  j = json{{e.is_linear() ? "x" : "const", e.value()}};
}

inline void from_json(const json& j, NXEntry& e) {
  if (!j.is_object() || j.size() != 1) throw std::invalid_argument("NX entry must be {\"const\": q} or {\"x\": q}");
  if (j.contains("const")) {
    e = NXEntry::constant(j.at("const").get<Rational>());
  } else if (j.contains("x")) {
    e = NXEntry::linear(j.at("x").get<Rational>());
  } else {
    throw std::invalid_argument("NX entry must be {\"const\": q} or {\"x\": q}");
  }
}

inline void to_json(json& j, const NXMatrix& m) {
  j = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c));
    j.push_back(std::move(row));
  }
}

inline void from_json(const json& j, NXMatrix& m) {
  if (!j.is_array()) throw std::invalid_argument("NX matrix must be a JSON array of rows");
  std::vector<std::vector<NXEntry>> grid;
  for (const auto& row : j) {
    if (!row.is_array()) throw std::invalid_argument("NX matrix row must be an array");
    grid.push_back(row.get<std::vector<NXEntry>>());
  }
  m = NXMatrix(grid);
}

inline void to_json(json& j, const NXCheckResult& r) {
  j = json{{"pass", r.pass}};
  if (r.pass) return;
  j["condition"] = r.condition;
  j["rows"] = {r.rows.first + 1, r.rows.second + 1};
  j["cols"] = {r.cols.first + 1, r.cols.second + 1};
  if (r.determinant) j["determinant"] = *r.determinant;
}

inline void from_json(const json& j, NXCheckResult& r) {
  r = {};
  r.pass = j.at("pass").get<bool>();
  if (r.pass) return;
  r.condition = j.at("condition").get<int>();
  auto rows = j.at("rows").get<std::vector<std::size_t>>();
  auto cols = j.at("cols").get<std::vector<std::size_t>>();
  r.rows = {rows.at(0) - 1, rows.at(1) - 1};
  r.cols = {cols.at(0) - 1, cols.at(1) - 1};
  if (j.contains("determinant")) r.determinant = j.at("determinant").get<Rational>();
}

inline void to_json(json& j, const MergedRoot& m) {
  j = json{{"label", to_string(m.label())},
           {"location", m.location},
           {"multiplicity_f", m.multiplicity_f},
           {"multiplicity_g", m.multiplicity_g}};
}

inline void from_json(const json& j, MergedRoot& m) {
  m.location = j.at("location").get<Interval>();
  m.multiplicity_f = j.at("multiplicity_f").get<unsigned>();
  m.multiplicity_g = j.at("multiplicity_g").get<unsigned>();
}

inline void to_json(json& j, const InterlacingViolation& v) {
  j = json{{"kind", v.kind == InterlacingViolation::Kind::degree ? "degree" : "chain"}, {"detail", v.detail}};
  if (v.kind == InterlacingViolation::Kind::chain) {
    j["lower"] = v.lower_symbol;
    j["upper"] = v.upper_symbol;
    if (v.lower_root) j["lower_root"] = *v.lower_root;
    if (v.upper_root) j["upper_root"] = *v.upper_root;
  }
}

inline void from_json(const json& j, InterlacingViolation& v) {
  v = {};
  v.kind = j.at("kind").get<std::string>() == "degree" ? InterlacingViolation::Kind::degree
                                                       : InterlacingViolation::Kind::chain;
  v.detail = j.at("detail").get<std::string>();
  if (j.contains("lower")) v.lower_symbol = j.at("lower").get<std::string>();
  if (j.contains("upper")) v.upper_symbol = j.at("upper").get<std::string>();
  if (j.contains("lower_root")) v.lower_root = j.at("lower_root").get<Interval>();
  if (j.contains("upper_root")) v.upper_root = j.at("upper_root").get<Interval>();
}

inline void to_json(json& j, const InterlacingCertificate& c) {
  j = json{{"result", c.holds}, {"merged_order", c.merged_order}};
  if (c.violation) j["violation"] = *c.violation;
}

inline void from_json(const json& j, InterlacingCertificate& c) {
  c = {};
  c.holds = j.at("result").get<bool>();
  c.merged_order = j.at("merged_order").get<std::vector<MergedRoot>>();
  if (j.contains("violation")) c.violation = j.at("violation").get<InterlacingViolation>();
}

inline void to_json(json& j, const SectionSequence& s) { j = json{{"r", s.r}, {"sections", s.sections}}; }
inline void from_json(const json& j, SectionSequence& s) {
  s.r = j.at("r").get<unsigned>();
  s.sections = j.at("sections").get<std::vector<Polynomial>>();
}

inline json sequence_check_json(const SequenceCheck& c) {
  json j{{"interlacing", c.holds}};
  if (c.violating_pair) j["violating_pair"] = {c.violating_pair->first + 1, c.violating_pair->second + 1};
  if (c.certificate) j["certificate"] = *c.certificate;
  if (c.negative_entry) j["negative_entry"] = *c.negative_entry + 1;
  return j;
}

inline json counterexample_json(const FalsifierCounterexample& cx) {
  json j{{"condition", cx.condition}, {"detail", cx.detail}};
  j["row_k"] = cx.row_k + 1;
  j["col_i"] = cx.col_i + 1;
  if (cx.condition == 2) {
    j["row_l"] = cx.row_l + 1;
    j["col_j"] = cx.col_j + 1;
    j["lambda"] = cx.sample->lambda;
    j["mu"] = cx.sample->mu;
    j["g"] = cx.g;
    j["f"] = cx.f;
    if (cx.certificate) j["certificate"] = *cx.certificate;
  }
  return j;
}

template <typename Vertex>
json complex_json(const SimplicialComplex<Vertex>& k) {
  json facets = json::array();
  for (const auto& f : k.facets()) {
    json face = json::array();
    for (auto v : f) face.push_back(k.vertex(v));
    facets.push_back(std::move(face));
  }
  return json{{"vertices", k.vertices()}, {"facets", facets}};
}

template <typename Vertex>
SimplicialComplex<Vertex> complex_from_json(const json& j) {
  return SimplicialComplex<Vertex>(j.at("vertices").get<std::vector<Vertex>>(),
                                   j.at("facets").get<std::vector<std::vector<Vertex>>>());
}

}  // namespace lhp
