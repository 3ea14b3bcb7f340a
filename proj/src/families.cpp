#include "stratikit/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "stratikit/quiver.hpp"

namespace stratikit {

void JordanType::validate() const {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "Jordan type needs n >= 1");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1 || parts[i] >= n)
      throw Error(ErrorKind::InvalidInput, "part lengths must lie in [1, n-1]");
    if (i > 0 && parts[i] <= parts[i - 1]) throw Error(ErrorKind::InvalidInput, "parts must be strictly increasing");
  }
}

std::string JordanType::to_string() const {
  std::string s = "(" + std::to_string(n) + ",{";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + "})";
}

JordanType JordanType::from_partition(std::vector<std::size_t> blocks) {
  blocks.erase(std::remove(blocks.begin(), blocks.end(), 0), blocks.end());
  if (blocks.empty()) throw Error(ErrorKind::InvalidInput, "empty partition");
  JordanType j;
  j.n = *std::max_element(blocks.begin(), blocks.end());
  std::set<std::size_t> s(blocks.begin(), blocks.end());
  for (auto b : s)
    if (b < j.n) j.parts.push_back(b);
  return j;
}

template <class K>
JordanType jordan_type_of(const Matrix<K>& nil) {
  const std::size_t d = nil.rows();
  if (d == 0 || nil.cols() != d) throw Error(ErrorKind::InvalidInput, "nilpotent matrix must be square and nonempty");
  std::vector<std::size_t> ranks{d};
  Matrix<K> power = Matrix<K>::identity(nil.field(), d);
  while (ranks.back() > 0) {
    power = matmul(power, nil);
    std::size_t r = rank(power);
    if (r == ranks.back()) throw Error(ErrorKind::InvalidInput, "matrix is not nilpotent");
    ranks.push_back(r);
  }
  // Blocks of size >= k: ranks[k-1] - ranks[k].
  std::vector<std::size_t> blocks;
  for (std::size_t k = 1; k < ranks.size(); ++k) {
    std::size_t at_least = ranks[k - 1] - ranks[k];
    std::size_t at_least_next = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
    for (std::size_t c = 0; c < at_least - at_least_next; ++c) blocks.push_back(k);
  }
  return JordanType::from_partition(blocks);
}

bool centraliser_selfdual_criterion(const JordanType& j) {
  const std::size_t r = j.parts.size();
  for (std::size_t i = 0; i < r; ++i)
    if (j.parts[i] != j.n - j.parts[r - 1 - i]) return false;
  return true;
}

template <class K>
AlgebraPtr<K> truncated_polynomial(const K& k, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "K[x]/(x^0) is zero");
  if (n == 1) return compile_bqa<K>(Quiver{{"1"}, {}}, {}, k);
  Quiver q{{"1"}, {{"x", 0, 0}}};
  Relation<K> r{{k.one(), std::vector<std::string>(n, "x")}};
  return compile_bqa<K>(q, {r}, k);
}

template <class K>
Module<K> chain_module(const AlgebraPtr<K>& u, std::size_t t) {
  auto reg = regular_module(u);
  auto series = radical_series(reg);
  if (t >= series.size()) return reg;
  return quotient_module(reg, series[t].basis()).module;
}

template <class K>
std::vector<std::size_t> default_stratifying_order(const AlgebraPtr<K>& a, const std::vector<Module<K>>& summands) {
  std::vector<std::size_t> order(summands.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return summands[x].dim() > summands[y].dim(); });
  if (stratification_check(a, order).properly) return order;
  for (const auto& o : find_stratifying_orders(a))
    if (o.verdict.properly) return o.order;
  std::iota(order.begin(), order.end(), 0);
  return order;
}

template <class K>
EndomorphismConstruction<K> centraliser_algebra(const JordanType& j, const K& k) {
  j.validate();
  EndomorphismConstruction<K> c;
  c.base = truncated_polynomial(k, j.n);
  for (auto p : j.parts) c.summands.push_back(chain_module(c.base, p));
  c.summands.push_back(regular_module(c.base));
  c.algebra = endomorphism_algebra(c.summands);
  c.order = default_stratifying_order(c.algebra, c.summands);
  return c;
}

template <class K>
AlgebraPtr<K> schur_block(std::size_t m, const K& k) {
  if (m == 0) throw Error(ErrorKind::InvalidInput, "Schur block needs m >= 1");
  Quiver q;
  for (std::size_t i = 1; i <= m; ++i) q.vertices.push_back(std::to_string(i));
  for (std::size_t i = 1; i < m; ++i) {
    q.arrows.push_back({"a" + std::to_string(i), i - 1, i});
    q.arrows.push_back({"b" + std::to_string(i), i, i - 1});
  }
  auto a = [](std::size_t i) { return "a" + std::to_string(i); };
  auto b = [](std::size_t i) { return "b" + std::to_string(i); };
  std::vector<Relation<K>> rels;
  if (m >= 2) rels.push_back({{k.one(), {b(m - 1), a(m - 1)}}});
  for (std::size_t i = 2; i + 1 <= m; ++i) {
    rels.push_back({{k.one(), {b(i - 1), a(i - 1)}}, {k.neg(k.one()), {a(i), b(i)}}});
    rels.push_back({{k.one(), {a(i - 1), a(i)}}});
    rels.push_back({{k.one(), {b(i), b(i - 1)}}});
  }
  return compile_bqa<K>(q, rels, k);
}

template <class K>
AlgebraPtr<K> brauer_block(std::size_t n, const K& k) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "Brauer block needs n >= 1");
  auto a = schur_block(n + 1, k);
  std::vector<Module<K>> ps;
  for (std::size_t i = 0; i < n; ++i) ps.push_back(projective_module(a, i));
  return endomorphism_algebra(ps);
}

template <class K>
AlgebraPtr<K> kxy_algebra(const K& k) {
  // Monomials 1, x, y, y^2, x^2 = y^3 as exponent pairs; xy = 0, so x^3 = y^4 = 0.
  const std::vector<std::string> labels{"1", "x", "y", "y2", "x2"};
  const int ex[5][2] = {{0, 0}, {1, 0}, {0, 1}, {0, 2}, {2, 0}};
  auto table = AlgebraTable<K>::from_products(k, labels, unit_vec(k, 5, 0), [&](std::size_t s, std::size_t t) {
    Vec<K> v(5, k.zero());
    const int dx = ex[s][0] + ex[t][0], dy = ex[s][1] + ex[t][1];
    if ((dx > 0 && dy > 0) || dx >= 3 || dy >= 4) return v;
    const int idx = dx == 1 ? 1 : dx == 2 ? 4 : dy == 3 ? 4 : dy == 0 ? 0 : dy + 1;
    v[idx] = k.one();
    return v;
  });
  return AssocAlgebra<K>::create(std::move(table), {unit_vec(k, 5, 0)}, std::nullopt, {"1"});
}

template <class K>
EndomorphismConstruction<K> gigs_kxy(const K& k) {
  EndomorphismConstruction<K> c;
  c.base = kxy_algebra(k);
  auto reg = regular_module(c.base);
  auto principal = [&](std::size_t b) {
    Vec<K> w = c.base->word_coordinates(unit_vec(k, 5, b));
    return generated_submodule(reg, Matrix<K>::from_rows(k, {w}, reg.dim())).module;
  };
  c.summands = {principal(4), principal(1), principal(2), reg};
  c.algebra = endomorphism_algebra(c.summands);
  c.order = default_stratifying_order(c.algebra, c.summands);
  return c;
}

namespace {

const std::vector<std::pair<ExampleId, std::string>> kExampleNames = {
    {ExampleId::RadSquareZero2v, "rad-square-zero-2v"}, {ExampleId::Recollement3v, "recollement-3v"},
    {ExampleId::GigsKxy, "gigs-kxy"},                   {ExampleId::Cent31, "cent-3-1"},
    {ExampleId::SchurA, "schur-A"},                     {ExampleId::BrauerB, "brauer-B"}};

}  // namespace

ExampleSpec parse_example_id(const std::string& s) {
  for (const auto& [id, name] : kExampleNames) {
    if (s == name && id != ExampleId::SchurA && id != ExampleId::BrauerB) return {id, 0};
    if ((id == ExampleId::SchurA || id == ExampleId::BrauerB) && s.rfind(name, 0) == 0) {
      std::string rest = s.substr(name.size());
      if (!rest.empty() && (rest.front() == '(' || rest.front() == '-')) {
        if (rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
        else if (rest.front() == '-') rest = rest.substr(1);
        else throw Error(ErrorKind::InvalidInput, "malformed example id " + s);
        try {
          std::size_t used = 0;
          long v = std::stol(rest, &used);
          if (used == rest.size() && v >= 1) return {id, static_cast<std::size_t>(v)};
        } catch (const std::exception&) {
        }
      }
      throw Error(ErrorKind::InvalidInput, "example " + name + " needs a positive parameter, e.g. " + name + "(2)");
    }
  }
  throw Error(ErrorKind::InvalidInput, "unknown example id " + s);
}

std::string example_name(const ExampleSpec& e) {
  for (const auto& [id, name] : kExampleNames)
    if (id == e.id) {
      if (id == ExampleId::SchurA || id == ExampleId::BrauerB) return name + "(" + std::to_string(e.parameter) + ")";
      return name;
    }
  return "?";
}

std::vector<std::string> example_names() {
  return {"rad-square-zero-2v", "recollement-3v", "gigs-kxy", "cent-3-1", "schur-A(m)", "brauer-B(n)"};
}

template <class K>
NamedExample<K> named_example(const ExampleSpec& e, const K& k) {
  NamedExample<K> ex;
  auto one = [&](std::vector<std::string> p) { return RelationTerm<K>{k.one(), std::move(p)}; };
  switch (e.id) {
    case ExampleId::RadSquareZero2v: {
      Quiver q{{"1", "2"}, {{"alpha", 0, 0}, {"beta", 1, 0}}};
      ex.algebra = compile_bqa<K>(q, {{one({"alpha", "alpha"})}, {one({"beta", "alpha"})}}, k);
      ex.manifest = {{"dim", "4"},
                     {"properly_stratified", "true"},
                     {"gorenstein", "false"},
                     {"Delta(1)=P(1)", "true"},
                     {"ProperDelta(1)=S(1)", "true"},
                     {"End(Delta(1))", "local Frobenius, dim 2"}};
      break;
    }
    case ExampleId::Recollement3v: {
      Quiver q{{"1", "2", "3"}, {{"alpha1", 0, 1}, {"beta1", 1, 0}, {"alpha2", 1, 2}, {"beta2", 2, 1}}};
      std::vector<Relation<K>> rels{
          {one({"beta1", "alpha1", "alpha2"})},
          {one({"beta2", "beta1", "alpha1"})},
          {one({"beta2", "alpha2"})},
          {one({"alpha2", "beta2"}), {k.neg(k.one()), {"beta1", "alpha1", "beta1", "alpha1"}}}};
      ex.algebra = compile_bqa<K>(q, rels, k);
      ex.manifest = {{"injdim(A)", "2"},
                     {"Delta(3)=P(3)", "true"},
                     {"ProperDelta(3)=P(3)", "true"},
                     {"injdim(ProperDelta(2))", "AboveCutoff(12)"}};
      break;
    }
    case ExampleId::GigsKxy: {
      auto c = gigs_kxy(k);
      ex.algebra = c.algebra;
      ex.order = c.order;
      ex.manifest = {{"gordim", "4"}, {"domdim", "2"}, {"gldim", "AboveCutoff(12)"}, {"gendo_symmetric", "true"}};
      break;
    }
    case ExampleId::Cent31: {
      auto c = centraliser_algebra(JordanType{3, {1}}, k);
      ex.algebra = c.algebra;
      ex.order = c.order;
      ex.manifest = {{"dim", "6"},
                     {"gordim", "2"},
                     {"domdim", "2"},
                     {"minimal_auslander_gorenstein", "true"},
                     {"ringel_dual_dim", "9"}};
      break;
    }
    case ExampleId::SchurA: {
      ex.algebra = schur_block(e.parameter, k);
      std::string g = std::to_string(2 * (e.parameter - 1));
      ex.manifest = {{"gldim", g}, {"domdim", e.parameter == 1 ? "AboveCutoff(12)" : g}};
      break;
    }
    case ExampleId::BrauerB:
      ex.algebra = brauer_block(e.parameter, k);
      ex.manifest = {{"symmetric", "true"}};
      break;
  }
  if (ex.order.empty()) {
    ex.order.resize(ex.algebra->num_vertices());
    std::iota(ex.order.begin(), ex.order.end(), 0);
  }
  return ex;
}

template <class K>
GendoData<K> gendo_data(const AlgebraPtr<K>& a) {
  GendoData<K> g;
  auto pi = projective_injective_vertices(a);
  for (std::size_t i = 0; i < pi.size(); ++i)
    if (pi[i]) g.vertices.push_back(i);
  if (g.vertices.empty()) throw Error(ErrorKind::PreconditionUnverified, "no projective-injective vertices");
  g.base = a->corner(g.vertices);
  g.generator = corner_restriction(regular_module(a), g.base, g.vertices);
  return g;
}

#define STRATIKIT_INSTANTIATE_FAMILIES(K)                                                     \
  template JordanType jordan_type_of<K>(const Matrix<K>&);                                    \
  template AlgebraPtr<K> truncated_polynomial<K>(const K&, std::size_t);                      \
  template Module<K> chain_module<K>(const AlgebraPtr<K>&, std::size_t);                      \
  template std::vector<std::size_t> default_stratifying_order<K>(const AlgebraPtr<K>&, const std::vector<Module<K>>&); \
  template EndomorphismConstruction<K> centraliser_algebra<K>(const JordanType&, const K&);   \
  template AlgebraPtr<K> schur_block<K>(std::size_t, const K&);                               \
  template AlgebraPtr<K> brauer_block<K>(std::size_t, const K&);                              \
  template AlgebraPtr<K> kxy_algebra<K>(const K&);                                            \
  template EndomorphismConstruction<K> gigs_kxy<K>(const K&);                                 \
  template NamedExample<K> named_example<K>(const ExampleSpec&, const K&);                    \
  template GendoData<K> gendo_data<K>(const AlgebraPtr<K>&);

STRATIKIT_INSTANTIATE_FAMILIES(PrimeField)
STRATIKIT_INSTANTIATE_FAMILIES(RationalField)

}  // namespace stratikit
