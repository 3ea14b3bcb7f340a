#include "stratikit/io.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "stratikit/quiver.hpp"

namespace stratikit {

namespace {

void reject_unknown(const Json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw Error(ErrorKind::InvalidInput, where + " must be an object");
  for (const auto& [key, _] : obj.items())
    if (!allowed.count(key)) throw Error(ErrorKind::InvalidInput, "unknown field '" + key + "' in " + where);
}

const Json& require(const Json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw Error(ErrorKind::InvalidInput, where + " needs field '" + key + "'");
  return *it;
}

template <class K>
typename K::Elem scalar(const K& k, const Json& j) {
  if (j.is_number_integer()) return k.from_int(j.get<std::int64_t>());
  if (j.is_string()) return k.parse(j.get<std::string>());
  throw Error(ErrorKind::InvalidInput, "scalar must be an integer or a string such as \"3/2\"");
}

template <class K>
Vec<K> vector_of(const K& k, const Json& j, std::size_t dim) {
  if (!j.is_array() || j.size() != dim) throw Error(ErrorKind::InvalidInput, "vector of length " + std::to_string(dim) + " expected");
  Vec<K> v;
  v.reserve(dim);
  for (const auto& x : j) v.push_back(scalar(k, x));
  return v;
}

std::size_t vertex_index(const std::vector<std::string>& labels, const Json& j) {
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v < 1 || static_cast<std::size_t>(v) > labels.size())
      throw Error(ErrorKind::InvalidInput, "vertex number out of range");
    return static_cast<std::size_t>(v - 1);
  }
  if (j.is_string()) {
    auto it = std::find(labels.begin(), labels.end(), j.get<std::string>());
    if (it == labels.end()) throw Error(ErrorKind::InvalidInput, "unknown vertex '" + j.get<std::string>() + "'");
    return static_cast<std::size_t>(it - labels.begin());
  }
  throw Error(ErrorKind::InvalidInput, "vertex must be a label or a 1-based number");
}

template <class K>
AlgebraPtr<K> quiver_algebra(const Json& doc, const K& k) {
  Quiver q;
  for (const auto& v : require(doc, "vertices", "algebra")) {
    if (!v.is_string()) throw Error(ErrorKind::InvalidInput, "vertex labels must be strings");
    q.vertices.push_back(v.get<std::string>());
  }
  for (const auto& a : require(doc, "arrows", "algebra")) {
    if (!a.is_array() || a.size() != 3 || !a[0].is_string())
      throw Error(ErrorKind::InvalidInput, "arrow must be [label, source, target]");
    q.arrows.push_back({a[0].get<std::string>(), vertex_index(q.vertices, a[1]), vertex_index(q.vertices, a[2])});
  }
  std::vector<Relation<K>> rels;
  if (auto it = doc.find("relations"); it != doc.end()) {
    for (const auto& r : *it) {
      Relation<K> rel;
      for (const auto& term : r) {
        if (!term.is_array() || term.size() != 2 || !term[1].is_array())
          throw Error(ErrorKind::InvalidInput, "relation term must be [coefficient, [arrow labels]]");
        rel.push_back({scalar(k, term[0]), term[1].get<std::vector<std::string>>()});
      }
      rels.push_back(std::move(rel));
    }
  }
  return compile_bqa(q, rels, k);
}

template <class K>
AlgebraPtr<K> table_algebra(const Json& doc, const K& k) {
  const auto labels = require(doc, "basis", "algebra").get<std::vector<std::string>>();
  const std::size_t d = labels.size();
  const Vec<K> unit = vector_of(k, require(doc, "unit", "algebra"), d);
  std::vector<typename AlgebraTable<K>::Terms> products(d * d);
  for (const auto& p : require(doc, "products", "algebra")) {
    if (!p.is_array() || p.size() != 4) throw Error(ErrorKind::InvalidInput, "product entry must be [a, b, c, coefficient]");
    const auto a = p[0].get<std::size_t>(), b = p[1].get<std::size_t>(), c = p[2].get<std::size_t>();
    if (a >= d || b >= d || c >= d) throw Error(ErrorKind::InvalidInput, "product index out of range");
    const auto x = scalar(k, p[3]);
    if (!k.is_zero(x)) products[a * d + b].emplace_back(c, x);
  }
  for (auto& t : products) std::sort(t.begin(), t.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  AlgebraTable<K> table(k, labels, std::move(products), unit);
  std::vector<Vec<K>> idem;
  for (const auto& e : require(doc, "idempotents", "algebra")) idem.push_back(vector_of(k, e, d));
  std::vector<std::string> vlabels;
  if (auto it = doc.find("vertices"); it != doc.end()) vlabels = it->get<std::vector<std::string>>();
  else
    for (std::size_t i = 0; i < idem.size(); ++i) vlabels.push_back(std::to_string(i + 1));
  std::optional<std::vector<Arrow<K>>> arrows;
  if (auto it = doc.find("arrows"); it != doc.end()) {
    arrows.emplace();
    for (const auto& a : *it) {
      if (!a.is_array() || a.size() != 4) throw Error(ErrorKind::InvalidInput, "arrow must be [label, source, target, vector]");
      arrows->push_back({a[0].get<std::string>(), vertex_index(vlabels, a[1]), vertex_index(vlabels, a[2]),
                         vector_of(k, a[3], d)});
    }
  }
  return AssocAlgebra<K>::create(std::move(table), std::move(idem), std::move(arrows), vlabels);
}

}  // namespace

Json FieldSpec::to_json() const { return rational ? Json("Q") : Json{{"p", p}}; }

FieldSpec FieldSpec::from_json(const Json& j) {
  if (j.is_string()) return parse(j.get<std::string>());
  reject_unknown(j, {"p"}, "field");
  FieldSpec f;
  f.p = require(j, "p", "field").get<std::uint64_t>();
  if (f.p > 0x7fffffffu || !is_prime_u32(static_cast<std::uint32_t>(f.p)))
    throw Error(ErrorKind::InvalidInput, "field characteristic must be a prime below 2^31");
  return f;
}

FieldSpec FieldSpec::parse(const std::string& s) {
  FieldSpec f;
  if (s == "Q") {
    f.rational = true;
    return f;
  }
  std::string digits = s.rfind("F_", 0) == 0 ? s.substr(2) : s;
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 10)
    throw Error(ErrorKind::InvalidInput, "field must be Q, a prime, or F_<prime>");
  f.p = std::stoull(digits);
  if (f.p > 0x7fffffffu || !is_prime_u32(static_cast<std::uint32_t>(f.p)))
    throw Error(ErrorKind::InvalidInput, "field characteristic must be a prime below 2^31");
  return f;
}

FieldSpec field_spec(const PrimeField& k) {
  return FieldSpec{false, k.characteristic()};
}
FieldSpec field_spec(const RationalField&) {
  return FieldSpec{true, 0};
}

FieldSpec document_field(const Json& doc) {
  if (!doc.is_object()) throw Error(ErrorKind::InvalidInput, "algebra description must be an object");
  return FieldSpec::from_json(require(doc, "field", "algebra"));
}

template <class K>
LoadedAlgebra<K> algebra_from_json(const Json& doc, const K& k) {
  static const std::set<std::string> quiver_keys = {"schema", "field", "label", "order", "jordan",
                                                    "vertices", "arrows", "relations"};
  static const std::set<std::string> table_keys = {"schema", "field", "label", "order", "jordan", "vertices",
                                                   "arrows", "basis", "unit", "products", "idempotents"};
  if (!doc.is_object()) throw Error(ErrorKind::InvalidInput, "algebra description must be an object");
  const bool table = doc.contains("basis");
  reject_unknown(doc, table ? table_keys : quiver_keys, "algebra");
  const auto& schema = require(doc, "schema", "algebra");
  if (!schema.is_number_integer() || schema.get<int>() != kSchemaVersion)
    throw Error(ErrorKind::InvalidInput, "unsupported schema version");
  require(doc, "field", "algebra");

  LoadedAlgebra<K> out;
  out.algebra = table ? table_algebra(doc, k) : quiver_algebra(doc, k);
  if (auto it = doc.find("label"); it != doc.end()) out.label = it->get<std::string>();
  const std::size_t n = out.algebra->num_vertices();
  if (auto it = doc.find("order"); it != doc.end()) {
    for (const auto& v : *it) out.order.push_back(vertex_index(out.algebra->vertex_labels(), v));
    auto sorted = out.order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() != n || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorKind::InvalidInput, "order must list every vertex once");
  } else {
    out.order.resize(n);
    std::iota(out.order.begin(), out.order.end(), 0);
  }
  if (auto it = doc.find("jordan"); it != doc.end()) {
    reject_unknown(*it, {"n", "parts"}, "jordan");
    JordanType j{require(*it, "n", "jordan").get<std::size_t>(), require(*it, "parts", "jordan").get<std::vector<std::size_t>>()};
    j.validate();
    out.jordan = j;
  }
  return out;
}

template <class K>
Json algebra_to_json(const LoadedAlgebra<K>& la) {
  const auto& a = *la.algebra;
  const auto& t = a.table();
  const auto& k = a.field();
  const std::size_t d = a.dim();

  // Basis sorted by label when labels are distinct; pos[old] = new index.
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  const auto& labels = t.labels();
  if (std::set<std::string>(labels.begin(), labels.end()).size() == d)
    std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) { return labels[x] < labels[y]; });
  std::vector<std::size_t> pos(d);
  for (std::size_t i = 0; i < d; ++i) pos[perm[i]] = i;
  auto vec_json = [&](const Vec<K>& v) {
    Json out = Json::array();
    for (std::size_t i = 0; i < d; ++i) out.push_back(k.to_string(v[perm[i]]));
    return out;
  };

  Json j;
  j["schema"] = kSchemaVersion;
  j["field"] = field_spec(k).to_json();
  if (!la.label.empty()) j["label"] = la.label;
  j["vertices"] = a.vertex_labels();
  Json basis = Json::array();
  for (std::size_t i = 0; i < d; ++i) basis.push_back(labels[perm[i]]);
  j["basis"] = basis;
  j["unit"] = vec_json(t.unit());
  Json products = Json::array();
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      auto terms = t.product(perm[x], perm[y]);
      std::vector<std::pair<std::size_t, typename K::Elem>> mapped;
      for (const auto& [c, v] : terms) mapped.emplace_back(pos[c], v);
      std::sort(mapped.begin(), mapped.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
      for (const auto& [c, v] : mapped) products.push_back(Json::array({x, y, c, k.to_string(v)}));
    }
  j["products"] = products;
  Json idem = Json::array();
  for (const auto& e : a.idempotents()) idem.push_back(vec_json(e));
  j["idempotents"] = idem;
  Json arrows = Json::array();
  for (const auto& ar : a.arrows())
    arrows.push_back(Json::array({ar.label, a.vertex_labels()[ar.source], a.vertex_labels()[ar.target], vec_json(ar.element)}));
  j["arrows"] = arrows;
  Json order = Json::array();
  for (auto v : la.order) order.push_back(a.vertex_labels()[v]);
  j["order"] = order;
  if (la.jordan) j["jordan"] = Json{{"n", la.jordan->n}, {"parts", la.jordan->parts}};
  return j;
}

template <class K>
Json matrix_json(const Matrix<K>& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_strings(m.field(), m.row(i)));
  return out;
}

template <class K>
Module<K> module_from_json(const Json& doc, const AlgebraPtr<K>& a) {
  reject_unknown(doc, {"schema", "dimension", "actions"}, "module");
  const auto& schema = require(doc, "schema", "module");
  if (!schema.is_number_integer() || schema.get<int>() != kSchemaVersion)
    throw Error(ErrorKind::InvalidInput, "unsupported schema version");
  const auto dim = require(doc, "dimension", "module").get<std::size_t>();
  const auto& actions = require(doc, "actions", "module");
  if (!actions.is_object()) throw Error(ErrorKind::InvalidInput, "module actions must be an object");
  const K& k = a->field();
  std::vector<Matrix<K>> gens;
  for (std::size_t g = 0; g < a->num_generators(); ++g) {
    const auto label = a->generator_label(g);
    const auto& rows = require(actions, label, "module actions");
    if (!rows.is_array() || rows.size() != dim)
      throw Error(ErrorKind::InvalidInput, "action of " + label + " needs " + std::to_string(dim) + " rows");
    std::vector<Vec<K>> vs;
    for (const auto& r : rows) vs.push_back(vector_of(k, r, dim));
    gens.push_back(Matrix<K>::from_rows(k, vs, dim));
  }
  if (actions.size() != a->num_generators())
    throw Error(ErrorKind::InvalidInput, "module actions name a generator the algebra does not have");
  Module<K> m(a, std::move(gens));
  if (!m.is_valid()) throw Error(ErrorKind::InvalidInput, "actions do not satisfy the algebra's relations");
  return m;
}

template <class K>
Json module_to_json(const Module<K>& m) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["dimension"] = m.dim();
  Json actions = Json::object();
  for (std::size_t g = 0; g < m.gens().size(); ++g) actions[m.algebra().generator_label(g)] = matrix_json(m.gen(g));
  j["actions"] = actions;
  return j;
}

Json transcript_to_json(const Transcript& t) {
  auto checks = [](const std::vector<Check>& cs) {
    Json out = Json::array();
    for (const auto& c : cs) {
      Json e{{"name", c.name}, {"ok", c.ok}};
      if (!c.detail.empty()) e["detail"] = c.detail;
      out.push_back(e);
    }
    return out;
  };
  Json j;
  j["property"] = t.property;
  j["input"] = t.input;
  j["status"] = status_name(t.status);
  j["hypotheses"] = checks(t.hypotheses);
  j["steps"] = checks(t.steps);
  if (!t.witnesses.empty()) {
    Json w = Json::object();
    for (const auto& [name, rows] : t.witnesses) w[name] = rows;
    j["witnesses"] = w;
  }
  return j;
}

#define STRATIKIT_INSTANTIATE_IO(K)                                              \
  template LoadedAlgebra<K> algebra_from_json(const Json&, const K&);            \
  template Json algebra_to_json(const LoadedAlgebra<K>&);                        \
  template Json matrix_json(const Matrix<K>&);                                   \
  template Module<K> module_from_json(const Json&, const AlgebraPtr<K>&);        \
  template Json module_to_json(const Module<K>&);

STRATIKIT_INSTANTIATE_IO(PrimeField)
STRATIKIT_INSTANTIATE_IO(RationalField)

}  // namespace stratikit
