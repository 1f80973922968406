#pragma once

#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "ordk/bundle.hpp"
#include "ordk/complex.hpp"
#include "ordk/error.hpp"
#include "ordk/frames.hpp"
#include "ordk/ordered_group.hpp"
#include "ordk/sw_calculus.hpp"

// JSON encodings for complexes, cochains, groups, frames, bundles and total
// classes. Exact numbers travel as strings ("p/q", "p/q+r/s√D").

namespace ordk::io {

using nlohmann::json;

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Parse, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, "'" + path + "': " + e.what());
  }
}

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::Parse, std::string("missing field '") + key + "'");
  return j.at(key);
}

inline long long integer_field(const json& j) {
  if (!j.is_number_integer()) fail(ErrorCode::Parse, "expected an integer, got " + j.dump());
  return j.get<long long>();
}

inline Integer exact_integer(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  fail(ErrorCode::Parse, "expected an integer, got " + j.dump());
}

inline Simplex simplex(const json& j) {
  if (!j.is_array()) fail(ErrorCode::Parse, "simplex must be an array, got " + j.dump());
  Simplex s;
  for (const auto& v : j) s.push_back(static_cast<int>(integer_field(v)));
  return s;
}

inline std::string number_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  fail(ErrorCode::Parse, "expected an exact number string, got " + j.dump());
}

inline Simplex parse_edge_key(const std::string& key) {
  try {
    return simplex(json::parse(key));
  } catch (const json::exception&) {
    fail(ErrorCode::Parse, "edge key '" + key + "' is not of the form [u,v]");
  }
}

}  // namespace detail

// Complex: {"vertices": n, "simplices": [[0,1],[1,2],[0,2]]}

inline ValidatedComplex parse_complex(const json& j, bool strict) {
  const int n = static_cast<int>(detail::integer_field(detail::field(j, "vertices")));
  const json& list = detail::field(j, "simplices");
  if (!list.is_array()) fail(ErrorCode::Parse, "'simplices' must be an array");
  std::vector<Simplex> raw;
  for (const auto& s : list) raw.push_back(detail::simplex(s));
  return validate_complex(n, std::move(raw), strict);
}

inline json to_json(const SimplicialComplex& k) {
  json simplices = json::array();
  for (const auto& s : k.positive_dimensional_simplices()) simplices.push_back(s);
  return {{"vertices", k.vertex_count()}, {"simplices", simplices}};
}

// Cochain: {"dim": 1, "support": [[0,1],[1,2]]}

inline Z2Cochain parse_cochain(const json& j, const SimplicialComplex& k) {
  const int dim = static_cast<int>(detail::integer_field(detail::field(j, "dim")));
  if (dim < 0) fail(ErrorCode::Parse, "negative cochain dimension");
  const json& list = detail::field(j, "support");
  if (!list.is_array()) fail(ErrorCode::Parse, "'support' must be an array");
  std::vector<Simplex> support;
  for (const auto& s : list) support.push_back(detail::simplex(s));
  return cochain_from_support(k, dim, support);
}

inline json to_json(const SimplicialComplex& k, const Z2Cochain& c) {
  json support_list = json::array();
  for (const auto& s : support(k, c)) support_list.push_back(s);
  return {{"dim", c.dim}, {"support", support_list}};
}

// Group: {"rank": k, "cone": {"type": "hyperplane", "radicand": D, "normal": [...]}}
//    or  {"rank": k, "cone": {"type": "simplicial", "basis": [[...], ...]}}
// Each basis entry is one basis vector.

inline LinearFunctional parse_functional(const json& j, const Integer& radicand) {
  if (!j.is_array()) fail(ErrorCode::Parse, "functional must be an array of exact numbers");
  std::vector<QuadExact> coeffs;
  for (const auto& c : j) coeffs.push_back(parse_quad(detail::number_text(c), radicand));
  return LinearFunctional(std::move(coeffs), radicand);
}

/// Coefficient strings in the input format: "p/q" or "p/q+r/s√".
inline std::string coefficient_text(const QuadExact& q) {
  if (q.is_rational()) return to_string(q.rational_part());
  std::string s = q.str();
  return s.substr(0, s.rfind("√") + std::string("√").size());
}

inline json to_json(const LinearFunctional& f) {
  json out = json::array();
  for (const auto& c : f.coeffs()) out.push_back(coefficient_text(c));
  return out;
}

inline json to_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
      out.push_back(x.convert_to<long long>());
    else
      out.push_back(x.str());
  }
  return out;
}

inline IntVector parse_int_vector(const json& j) {
  if (!j.is_array()) fail(ErrorCode::Parse, "expected an integer array, got " + j.dump());
  IntVector v;
  for (const auto& x : j) v.push_back(detail::exact_integer(x));
  return v;
}

inline OrderedGroup parse_group(const json& j) {
  const long long rank = detail::integer_field(detail::field(j, "rank"));
  if (rank < 0) fail(ErrorCode::Parse, "negative rank");
  const json& cone = detail::field(j, "cone");
  const json& type = detail::field(cone, "type");
  if (type == "hyperplane") {
    const Integer d = cone.contains("radicand") ? detail::exact_integer(cone.at("radicand")) : Integer(0);
    if (!is_squarefree(d)) fail(ErrorCode::Parse, "radicand " + d.str() + " is not squarefree");
    LinearFunctional f = parse_functional(detail::field(cone, "normal"), d);
    if (static_cast<long long>(f.rank()) != rank) fail(ErrorCode::Parse, "normal length does not match rank");
    return OrderedGroup::hyperplane(std::move(f));
  }
  if (type == "simplicial") {
    const json& basis = detail::field(cone, "basis");
    if (!basis.is_array()) fail(ErrorCode::Parse, "'basis' must be an array");
    IntMatrix b;
    for (const auto& v : basis) b.push_back(parse_int_vector(v));
    if (static_cast<long long>(b.size()) != rank) fail(ErrorCode::Parse, "basis size does not match rank");
    return OrderedGroup::simplicial(std::move(b));
  }
  fail(ErrorCode::Parse, "unknown cone type " + type.dump());
}

inline json to_json(const OrderedGroup& g) {
  if (g.is_hyperplane()) {
    return {{"rank", g.rank()},
            {"cone",
             {{"type", "hyperplane"},
              {"radicand", g.functional().radicand().convert_to<long long>()},
              {"normal", to_json(g.functional())}}}};
  }
  json basis = json::array();
  for (const auto& b : g.basis()) basis.push_back(to_json(b));
  return {{"rank", g.rank()}, {"cone", {{"type", "simplicial"}, {"basis", basis}}}};
}

// Frame: {"k": 2, "vectors": [["2","0"],["1","3"]]}

inline Frame parse_frame(const json& j) {
  const long long k = detail::integer_field(detail::field(j, "k"));
  if (k <= 0) fail(ErrorCode::Parse, "frame dimension must be positive");
  const json& vectors = detail::field(j, "vectors");
  if (!vectors.is_array()) fail(ErrorCode::Parse, "'vectors' must be an array");
  RatMatrix rows;
  for (const auto& v : vectors) {
    if (!v.is_array()) fail(ErrorCode::Parse, "frame vector must be an array");
    RatVector row;
    for (const auto& x : v) row.push_back(parse_rational(detail::number_text(x)));
    rows.push_back(std::move(row));
  }
  return Frame(static_cast<std::size_t>(k), std::move(rows));
}

inline json to_json(const Frame& f) {
  json vectors = json::array();
  for (const auto& v : f.vectors()) {
    json row = json::array();
    for (const auto& x : v) row.push_back(to_string(x));
    vectors.push_back(row);
  }
  return {{"k", f.ambient()}, {"vectors", vectors}};
}

inline json to_json(const OrientedPlane& p) {
  json frame = json::array();
  for (const auto& v : p.canonical_frame) frame.push_back(to_json(v));
  return {{"canonical_frame", frame}, {"orientation", p.orientation}};
}

// Bundle: {"complex": {...}, "rank": k, "radicand": D,
//          "vertex_normals": {"0": ["1","0+1√"], ...}, "edge_signs": {"[0,1]": -1}}

inline RawBundle parse_raw_bundle(const json& j, bool strict) {
  RawBundle r;
  r.base = std::make_shared<const SimplicialComplex>(parse_complex(detail::field(j, "complex"), strict).complex);
  r.fiber_rank = static_cast<int>(detail::integer_field(detail::field(j, "rank")));
  r.radicand = j.contains("radicand") ? detail::exact_integer(j.at("radicand")) : Integer(0);
  if (!is_squarefree(r.radicand)) fail(ErrorCode::Parse, "radicand " + r.radicand.str() + " is not squarefree");
  const json& normals = detail::field(j, "vertex_normals");
  if (!normals.is_object()) fail(ErrorCode::Parse, "'vertex_normals' must be an object");
  for (const auto& [key, value] : normals.items()) {
    const int v = static_cast<int>(parse_integer(key).convert_to<long long>());
    r.vertex_normals.emplace(v, parse_functional(value, r.radicand));
  }
  if (j.contains("edge_signs")) {
    const json& signs = j.at("edge_signs");
    if (!signs.is_object()) fail(ErrorCode::Parse, "'edge_signs' must be an object");
    for (const auto& [key, value] : signs.items()) {
      Simplex e = detail::parse_edge_key(key);
      std::sort(e.begin(), e.end());
      r.edge_signs[e] = static_cast<int>(detail::integer_field(value));
    }
  }
  return r;
}

inline GroupBundle parse_bundle(const json& j, bool strict = false) {
  return validate_bundle(parse_raw_bundle(j, strict));
}

inline json to_json(const GroupBundle& b) {
  json normals = json::object();
  for (std::size_t v = 0; v < b.vertex_data().size(); ++v)
    normals[std::to_string(v)] = to_json(b.vertex_data()[v]);
  json signs = json::object();
  for (std::size_t e = 0; e < b.edge_signs().size(); ++e) {
    if (b.edge_signs()[e] == 1) continue;
    const Simplex& edge = b.base().simplices(1)[e];
    signs["[" + std::to_string(edge[0]) + "," + std::to_string(edge[1]) + "]"] = b.edge_signs()[e];
  }
  return {{"complex", to_json(b.base())},
          {"rank", b.fiber_rank()},
          {"radicand", b.radicand().convert_to<long long>()},
          {"vertex_normals", normals},
          {"edge_signs", signs}};
}

// Total class: {"rank": k, "classes": {"0": "unit", "1": {cochain}, ...}}

inline TotalSWClass parse_total_class(const json& j, const ComplexPtr& k) {
  const int rank = static_cast<int>(detail::integer_field(detail::field(j, "rank")));
  const json& classes = detail::field(j, "classes");
  if (!classes.is_object()) fail(ErrorCode::Parse, "'classes' must be an object");
  std::vector<Z2Cochain> graded;
  for (int p = 0; p <= k->dimension(); ++p) graded.push_back(zero_cochain(*k, p));
  bool has_unit = false;
  for (const auto& [key, value] : classes.items()) {
    const long long p = parse_integer(key).convert_to<long long>();
    if (p < 0) fail(ErrorCode::Parse, "negative degree " + key);
    if (p == 0) {
      if (value != "unit") fail(ErrorCode::Parse, "degree 0 must be \"unit\"");
      has_unit = true;
      continue;
    }
    if (p > k->dimension()) fail(ErrorCode::Input, "degree " + key + " exceeds the complex dimension");
    Z2Cochain c = parse_cochain(value, *k);
    if (c.dim != p) fail(ErrorCode::Parse, "degree " + key + " entry has dimension " + std::to_string(c.dim));
    graded[static_cast<std::size_t>(p)] = std::move(c);
  }
  if (!has_unit) fail(ErrorCode::Parse, "total class needs \"0\": \"unit\"");
  graded[0] = unit_cochain(*k);
  return TotalSWClass::make(k, std::move(graded), rank);
}

inline json to_json(const TotalSWClass& w) {
  json classes = json::object();
  classes["0"] = "unit";
  for (int p = 1; p <= w.top_degree(); ++p)
    if (!w[p].is_zero()) classes[std::to_string(p)] = to_json(w.complex(), w[p]);
  return {{"rank", w.rank_cap()}, {"classes", classes}};
}

}  // namespace ordk::io
