#pragma once
// JSON documents for algebras, groups, po-groups, diagrams and tensor candidates.
//
// Every top-level document carries "version" and "kind". Output is canonical:
// object keys sorted (nlohmann's default map), entry lists sorted, compact
// one-line form plus a trailing newline, so equal objects give equal bytes.
// Readers reject unknown fields and report the JSON path of the offence.

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "effalg/category.hpp"
#include "effalg/colimit.hpp"
#include "effalg/effect_algebra.hpp"
#include "effalg/fpab.hpp"
#include "effalg/pog.hpp"
#include "effalg/tensor_ea.hpp"

namespace effalg {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

/// Malformed or schema-violating input; maps to exit status 3.
class InputError : public std::runtime_error {
 public:
  InputError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

inline std::string canonical_dump(const Json& j) { return j.dump() + "\n"; }

/// Parses text; syntax errors report line and column.
inline Json parse_json(const std::string& text, const std::string& source = "<input>") {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col), "malformed JSON");
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

// ---------------------------------------------------------------- schema helpers

namespace json_detail {

inline void expect_object(const Json& j, const std::string& path, std::initializer_list<const char*> required,
                          std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) throw InputError(path, "expected an object");
  std::set<std::string> allowed;
  for (const char* k : required) {
    allowed.insert(k);
    if (!j.contains(k)) throw InputError(path, std::string("missing field \"") + k + "\"");
  }
  for (const char* k : optional) allowed.insert(k);
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) throw InputError(path + "." + it.key(), "unknown field");
}

inline const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) throw InputError(path, "expected an array");
  return j;
}

inline long get_long(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw InputError(path, "expected an integer");
  return j.get<long>();
}

inline std::string get_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw InputError(path, "expected a string");
  return j.get<std::string>();
}

inline Int get_int(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    Int x;
    if (x.set_str(j.get<std::string>(), 10) == 0) return x;
  }
  throw InputError(path, "expected an integer or a decimal string");
}

inline Json put_int(const Int& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

inline IntVec get_int_vec(const Json& j, const std::string& path) {
  array_at(j, path);
  IntVec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(get_int(j[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

inline Json put_int_vec(const IntVec& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(put_int(x));
  return a;
}

inline std::vector<Elem> get_elem_vec(const Json& j, const std::string& path) {
  array_at(j, path);
  std::vector<Elem> v;
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(static_cast<Elem>(get_long(j[i], path + "[" + std::to_string(i) + "]")));
  return v;
}

inline void check_header(const Json& j, const std::string& path, const std::string& kind) {
  const long v = get_long(j.at("version"), path + ".version");
  if (v != kFormatVersion)
    throw InputError(path + ".version", "unsupported version " + std::to_string(v) + " (expected " +
                                            std::to_string(kFormatVersion) + ")");
  const std::string k = get_string(j.at("kind"), path + ".kind");
  if (k != kind) throw InputError(path + ".kind", "expected \"" + kind + "\", got \"" + k + "\"");
}

inline Json with_header(Json body, const std::string& kind) {
  body["version"] = kFormatVersion;
  body["kind"] = kind;
  return body;
}

}  // namespace json_detail

/// Peeks at the kind of a top-level document.
inline std::string document_kind(const Json& j, const std::string& path = "$") {
  if (!j.is_object() || !j.contains("kind")) throw InputError(path, "missing field \"kind\"");
  return json_detail::get_string(j.at("kind"), path + ".kind");
}

// ---------------------------------------------------------------- effect algebras

/// {"size", "one", "sum": [[i,j,v],...]} with only defined entries, sorted.
inline Json table_body(const PartialTable& t) {
  Json sum = Json::array();
  for (Elem a = 0; a < t.size; ++a)
    for (Elem b = 0; b < t.size; ++b)
      if (const auto& v = t.at(a, b)) sum.push_back(Json::array({a, b, *v}));
  return Json{{"size", t.size}, {"one", t.one}, {"sum", sum}};
}

inline Json algebra_body(const EffectAlgebra& e) { return table_body(e.table()); }

inline Json to_json(const EffectAlgebra& e) { return json_detail::with_header(algebra_body(e), "effect_algebra"); }

/// Raw table; structural problems (ranges, conflicting entries) are input errors,
/// axiom violations are left to the validator.
inline PartialTable table_from_body(const Json& j, const std::string& path) {
  using namespace json_detail;
  const long n = get_long(j.at("size"), path + ".size");
  if (n < 1 || n > 4096) throw InputError(path + ".size", "size out of range");
  const long one = get_long(j.at("one"), path + ".one");
  if (one < 0 || one >= n) throw InputError(path + ".one", "element out of range");
  PartialTable t(static_cast<int>(n), static_cast<Elem>(one));
  const Json& sum = array_at(j.at("sum"), path + ".sum");
  for (std::size_t i = 0; i < sum.size(); ++i) {
    const std::string p = path + ".sum[" + std::to_string(i) + "]";
    const std::vector<Elem> e = get_elem_vec(sum[i], p);
    if (e.size() != 3) throw InputError(p, "expected [a, b, a+b]");
    for (Elem x : e)
      if (x < 0 || x >= n) throw InputError(p, "element out of range");
    auto& slot = t.at(e[0], e[1]);
    if (slot && *slot != e[2]) throw InputError(p, "conflicting entry");
    slot = e[2];
  }
  return t;
}

inline PartialTable table_from_json(const Json& j, const std::string& path = "$") {
  json_detail::expect_object(j, path, {"version", "kind", "size", "one", "sum"});
  json_detail::check_header(j, path, "effect_algebra");
  return table_from_body(j, path);
}

inline EffectAlgebra algebra_from_body(const Json& j, const std::string& path) {
  json_detail::expect_object(j, path, {"size", "one", "sum"});
  PartialTable t = table_from_body(j, path);
  const ValidationReport r = validate_effect_algebra(t);
  if (!r.valid()) throw InputError(path, "not an effect algebra: " + r.summary());
  return EffectAlgebra(std::move(t));
}

inline EffectAlgebra algebra_from_json(const Json& j, const std::string& path = "$") {
  PartialTable t = table_from_json(j, path);
  const ValidationReport r = validate_effect_algebra(t);
  if (!r.valid()) throw InputError(path, "not an effect algebra: " + r.summary());
  return EffectAlgebra(std::move(t));
}

// ---------------------------------------------------------------- groups and po-groups

inline Json group_body(const FpAbGroup& g) {
  Json rels = Json::array();
  for (std::size_t r = 0; r < g.relations().rows(); ++r) rels.push_back(json_detail::put_int_vec(g.relations().row(r)));
  return Json{{"gens", g.gens()}, {"rels", rels}};
}

inline Json to_json(const FpAbGroup& g) { return json_detail::with_header(group_body(g), "group"); }

inline FpAbGroup group_from_body(const Json& j, const std::string& path) {
  using namespace json_detail;
  const long n = get_long(j.at("gens"), path + ".gens");
  if (n < 0) throw InputError(path + ".gens", "negative generator count");
  const Json& rels = array_at(j.at("rels"), path + ".rels");
  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < rels.size(); ++i) {
    const std::string p = path + ".rels[" + std::to_string(i) + "]";
    rows.push_back(get_int_vec(rels[i], p));
    if (rows.back().size() != static_cast<std::size_t>(n)) throw InputError(p, "relation width differs from gens");
  }
  return FpAbGroup(static_cast<std::size_t>(n), IntMatrix::from_rows(rows, static_cast<std::size_t>(n)));
}

inline FpAbGroup group_from_json(const Json& j, const std::string& path = "$") {
  json_detail::expect_object(j, path, {"version", "kind", "gens", "rels"});
  json_detail::check_header(j, path, "group");
  return group_from_body(j, path);
}

inline Json pog_body(const UnitalPoGroup& a) {
  Json body = group_body(a.group);
  std::vector<IntVec> cone;
  for (const GroupElement& c : a.cone) cone.push_back(c.coords);
  std::sort(cone.begin(), cone.end());
  Json cj = Json::array();
  for (const IntVec& c : cone) cj.push_back(json_detail::put_int_vec(c));
  body["cone"] = cj;
  body["unit"] = json_detail::put_int_vec(a.unit.coords);
  return body;
}

inline Json to_json(const UnitalPoGroup& a) { return json_detail::with_header(pog_body(a), "pog"); }

inline UnitalPoGroup pog_from_body(const Json& j, const std::string& path) {
  using namespace json_detail;
  expect_object(j, path, {"gens", "rels", "cone", "unit"});
  const FpAbGroup g = group_from_body(j, path);
  const Json& cone = array_at(j.at("cone"), path + ".cone");
  std::vector<IntVec> gens;
  for (std::size_t i = 0; i < cone.size(); ++i) {
    const std::string p = path + ".cone[" + std::to_string(i) + "]";
    gens.push_back(get_int_vec(cone[i], p));
    if (gens.back().size() != g.gens()) throw InputError(p, "width differs from gens");
  }
  const IntVec unit = get_int_vec(j.at("unit"), path + ".unit");
  if (unit.size() != g.gens()) throw InputError(path + ".unit", "width differs from gens");
  return make_pog(g, gens, unit);
}

inline UnitalPoGroup pog_from_json(const Json& j, const std::string& path = "$") {
  json_detail::expect_object(j, path, {"version", "kind", "gens", "rels", "cone", "unit"});
  json_detail::check_header(j, path, "pog");
  Json body = j;
  body.erase("version");
  body.erase("kind");
  return pog_from_body(body, path);
}

inline Json hom_body(const GroupHom& f) {
  Json m = Json::array();
  for (std::size_t r = 0; r < f.matrix().rows(); ++r) m.push_back(json_detail::put_int_vec(f.matrix().row(r)));
  return Json{{"matrix", m}};
}

inline GroupHom hom_from_body(const Json& j, const std::string& path, const FpAbGroup& dom, const FpAbGroup& cod) {
  using namespace json_detail;
  expect_object(j, path, {"matrix"});
  const Json& m = array_at(j.at("matrix"), path + ".matrix");
  if (m.size() != dom.gens()) throw InputError(path + ".matrix", "row count differs from domain gens");
  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const std::string p = path + ".matrix[" + std::to_string(i) + "]";
    rows.push_back(get_int_vec(m[i], p));
    if (rows.back().size() != cod.gens()) throw InputError(p, "width differs from codomain gens");
  }
  return GroupHom(dom, cod, IntMatrix::from_rows(rows, cod.gens()));
}

// ---------------------------------------------------------------- diagrams

/// Index category presented as a free category on an acyclic graph.
struct GraphShape {
  int objects = 0;
  std::vector<Arrow> edges;
};

inline Json shape_body(const GraphShape& s) {
  Json edges = Json::array();
  for (const Arrow& a : s.edges) edges.push_back(Json{{"src", a.src}, {"dst", a.dst}, {"name", a.name}});
  return Json{{"objects", s.objects}, {"edges", edges}};
}

inline GraphShape shape_from_body(const Json& j, const std::string& path) {
  using namespace json_detail;
  expect_object(j, path, {"objects", "edges"});
  GraphShape s;
  const long n = get_long(j.at("objects"), path + ".objects");
  if (n < 0 || n > 64) throw InputError(path + ".objects", "object count out of range");
  s.objects = static_cast<int>(n);
  const Json& edges = array_at(j.at("edges"), path + ".edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string p = path + ".edges[" + std::to_string(i) + "]";
    expect_object(edges[i], p, {"src", "dst", "name"});
    Arrow a{static_cast<int>(get_long(edges[i].at("src"), p + ".src")),
            static_cast<int>(get_long(edges[i].at("dst"), p + ".dst")), get_string(edges[i].at("name"), p + ".name")};
    if (a.src < 0 || a.src >= s.objects || a.dst < 0 || a.dst >= s.objects)
      throw InputError(p, "object out of range");
    s.edges.push_back(std::move(a));
  }
  return s;
}

namespace json_detail {

// For each non-identity, non-edge arrow of a free category: (edge arrow g, arrow f) with g o f = it,
// f of smaller index, so maps can be filled in index order.
inline std::vector<std::pair<int, int>> path_factorizations(const FiniteCategory& c, std::size_t edges) {
  const int first_path = c.objects() + static_cast<int>(edges);
  std::vector<std::pair<int, int>> out(static_cast<std::size_t>(c.arrow_count()), {-1, -1});
  for (int h = first_path; h < c.arrow_count(); ++h)
    for (int g = c.objects(); g < first_path && out[h].first < 0; ++g)
      for (int f = c.objects(); f < h; ++f)
        if (c.compose(g, f) == h) {
          out[h] = {g, f};
          break;
        }
  return out;
}

}  // namespace json_detail

struct EaDiagramFile {
  GraphShape shape;
  EaDiagram diagram;
};

struct PogDiagramFile {
  GraphShape shape;
  PogDiagram diagram;
};

/// Edge maps only; identities and composites are derived.
inline Json to_json(const EaDiagramFile& d) {
  Json objs = Json::array(), maps = Json::array();
  for (const EffectAlgebra& e : d.diagram.objects) objs.push_back(algebra_body(e));
  for (std::size_t i = 0; i < d.shape.edges.size(); ++i)
    maps.push_back(d.diagram.arrows[static_cast<std::size_t>(d.shape.objects) + i]);
  return json_detail::with_header(Json{{"shape", shape_body(d.shape)}, {"objects", objs}, {"maps", maps}}, "ea_diagram");
}

inline EaDiagramFile ea_diagram_from_json(const Json& j, const std::string& path = "$") {
  using namespace json_detail;
  expect_object(j, path, {"version", "kind", "shape", "objects", "maps"});
  check_header(j, path, "ea_diagram");
  EaDiagramFile out;
  out.shape = shape_from_body(j.at("shape"), path + ".shape");
  EaDiagram& d = out.diagram;
  d.category = FiniteCategory::free_on(out.shape.objects, out.shape.edges);
  const Json& objs = array_at(j.at("objects"), path + ".objects");
  if (objs.size() != static_cast<std::size_t>(out.shape.objects))
    throw InputError(path + ".objects", "count differs from shape");
  for (std::size_t i = 0; i < objs.size(); ++i)
    d.objects.push_back(algebra_from_body(objs[i], path + ".objects[" + std::to_string(i) + "]"));
  const Json& maps = array_at(j.at("maps"), path + ".maps");
  if (maps.size() != out.shape.edges.size()) throw InputError(path + ".maps", "count differs from edges");
  d.arrows.resize(static_cast<std::size_t>(d.category.arrow_count()));
  for (int o = 0; o < out.shape.objects; ++o) d.arrows[d.category.identity(o)] = d.objects[o].elements();
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const std::string p = path + ".maps[" + std::to_string(i) + "]";
    const Arrow& a = out.shape.edges[i];
    auto m = get_elem_vec(maps[i], p);
    if (m.size() != static_cast<std::size_t>(d.objects[a.src].size())) throw InputError(p, "length differs from domain");
    for (Elem x : m)
      if (x < 0 || x >= d.objects[a.dst].size()) throw InputError(p, "element out of range");
    d.arrows[static_cast<std::size_t>(out.shape.objects) + i] = std::move(m);
  }
  const auto fact = path_factorizations(d.category, out.shape.edges.size());
  for (int h = out.shape.objects + static_cast<int>(out.shape.edges.size()); h < d.category.arrow_count(); ++h) {
    const auto [g, f] = fact[h];
    for (Elem x : d.arrows[f]) d.arrows[h].push_back(d.arrows[g][x]);
  }
  if (!d.functorial()) throw InputError(path + ".maps", "maps are not ea-homomorphisms");
  return out;
}

inline Json to_json(const PogDiagramFile& d) {
  Json objs = Json::array(), maps = Json::array();
  for (const UnitalPoGroup& a : d.diagram.objects) objs.push_back(pog_body(a));
  for (std::size_t i = 0; i < d.shape.edges.size(); ++i)
    maps.push_back(hom_body(d.diagram.arrows[static_cast<std::size_t>(d.shape.objects) + i]));
  return json_detail::with_header(Json{{"shape", shape_body(d.shape)}, {"objects", objs}, {"maps", maps}},
                                  "pog_diagram");
}

inline PogDiagramFile pog_diagram_from_json(const Json& j, const std::string& path = "$") {
  using namespace json_detail;
  expect_object(j, path, {"version", "kind", "shape", "objects", "maps"});
  check_header(j, path, "pog_diagram");
  PogDiagramFile out;
  out.shape = shape_from_body(j.at("shape"), path + ".shape");
  PogDiagram& d = out.diagram;
  d.category = FiniteCategory::free_on(out.shape.objects, out.shape.edges);
  const Json& objs = array_at(j.at("objects"), path + ".objects");
  if (objs.size() != static_cast<std::size_t>(out.shape.objects))
    throw InputError(path + ".objects", "count differs from shape");
  for (std::size_t i = 0; i < objs.size(); ++i)
    d.objects.push_back(pog_from_body(objs[i], path + ".objects[" + std::to_string(i) + "]"));
  const Json& maps = array_at(j.at("maps"), path + ".maps");
  if (maps.size() != out.shape.edges.size()) throw InputError(path + ".maps", "count differs from edges");
  std::vector<std::optional<GroupHom>> arrows(static_cast<std::size_t>(d.category.arrow_count()));
  for (int o = 0; o < out.shape.objects; ++o) arrows[d.category.identity(o)] = GroupHom::identity(d.objects[o].group);
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const Arrow& a = out.shape.edges[i];
    arrows[static_cast<std::size_t>(out.shape.objects) + i] =
        hom_from_body(maps[i], path + ".maps[" + std::to_string(i) + "]", d.objects[a.src].group, d.objects[a.dst].group);
  }
  const auto fact = path_factorizations(d.category, out.shape.edges.size());
  for (int h = out.shape.objects + static_cast<int>(out.shape.edges.size()); h < d.category.arrow_count(); ++h)
    arrows[h] = compose(*arrows[fact[h].first], *arrows[fact[h].second]);
  for (auto& a : arrows) d.arrows.push_back(std::move(*a));
  if (!d.functorial()) throw InputError(path + ".maps", "maps are not unital homomorphisms");
  return out;
}

// ---------------------------------------------------------------- tensor candidates

inline Json to_json(const TensorCandidate& c) {
  Json beta = Json::array();
  for (Elem a = 0; a < c.left.size(); ++a)
    for (Elem b = 0; b < c.right.size(); ++b) beta.push_back(Json::array({a, b, c.beta(a, b)}));
  return json_detail::with_header(Json{{"left", algebra_body(c.left)},
                                       {"right", algebra_body(c.right)},
                                       {"algebra", algebra_body(c.algebra)},
                                       {"beta", beta}},
                                  "tensor_candidate");
}

inline TensorCandidate tensor_candidate_from_json(const Json& j, const std::string& path = "$") {
  using namespace json_detail;
  expect_object(j, path, {"version", "kind", "left", "right", "algebra", "beta"});
  check_header(j, path, "tensor_candidate");
  const EffectAlgebra e = algebra_from_body(j.at("left"), path + ".left");
  const EffectAlgebra f = algebra_from_body(j.at("right"), path + ".right");
  const EffectAlgebra g = algebra_from_body(j.at("algebra"), path + ".algebra");
  std::vector<Elem> table(static_cast<std::size_t>(e.size()) * f.size(), -1);
  const Json& beta = array_at(j.at("beta"), path + ".beta");
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const std::string p = path + ".beta[" + std::to_string(i) + "]";
    const auto t = get_elem_vec(beta[i], p);
    if (t.size() != 3 || t[0] < 0 || t[0] >= e.size() || t[1] < 0 || t[1] >= f.size() || t[2] < 0 ||
        t[2] >= g.size())
      throw InputError(p, "expected [a, b, beta(a,b)] in range");
    table[static_cast<std::size_t>(t[0]) * f.size() + t[1]] = t[2];
  }
  if (std::find(table.begin(), table.end(), -1) != table.end()) throw InputError(path + ".beta", "table incomplete");
  Bimorphism b{e, f, g, std::move(table)};
  if (!validate_morphism(b).valid()) throw InputError(path + ".beta", "not a bimorphism");
  return TensorCandidate{e, f, g, std::move(b)};
}

// ---------------------------------------------------------------- morphisms

inline Json morphism_body(const std::vector<Elem>& map) { return Json{{"map", map}}; }

}  // namespace effalg
