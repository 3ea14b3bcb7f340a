#include "stratikit/strat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace stratikit {

const char* family_name(Family f) {
  switch (f) {
    case Family::Delta: return "Delta";
    case Family::ProperDelta: return "ProperDelta";
    case Family::Nabla: return "Nabla";
    case Family::ProperNabla: return "ProperNabla";
  }
  return "?";
}

template <class K>
const std::vector<Module<K>>& StratifiedData<K>::family(Family f) const {
  switch (f) {
    case Family::Delta: return delta;
    case Family::ProperDelta: return proper_delta;
    case Family::Nabla: return nabla;
    case Family::ProperNabla: return proper_nabla;
  }
  return delta;
}

namespace {

std::vector<std::size_t> identity_order(std::size_t n) {
  std::vector<std::size_t> o(n);
  std::iota(o.begin(), o.end(), 0);
  return o;
}

template <class K>
AlgebraPtr<K> apply_order(const AlgebraPtr<K>& a, const std::vector<std::size_t>& order) {
  if (order == identity_order(a->num_vertices())) return a;
  return a->reordered(order);
}

template <class K>
std::size_t top_count(const Module<K>& m) {
  return m.dim() == 0 ? 0 : m.presentation().top_vertices.size();
}

// First layer (from the top of the order) where A e A is not projective.
template <class K>
std::optional<std::size_t> standard_failure(const AlgebraPtr<K>& b) {
  AlgebraPtr<K> cur = b;
  for (std::size_t i = b->num_vertices(); i-- > 0;) {
    auto tr = projective_trace(regular_module(cur), {i});
    // The trace is a quotient of P(i)^m with m its number of top generators.
    if (tr.module.dim() != top_count(tr.module) * cur->projective_dim(i)) return i;
    if (i > 0) cur = cur->quotient_by_vertices({i});
  }
  return std::nullopt;
}

template <class K>
Module<K> quotient_by(const Module<K>& m, const Embedded<K>& sub) {
  return quotient_module(m, sub.inclusion).module;
}

template <class K>
void standards(const AlgebraPtr<K>& b, std::vector<Module<K>>& delta, std::vector<Module<K>>& proper) {
  const std::size_t n = b->num_vertices();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> higher;
    for (std::size_t j = i + 1; j < n; ++j) higher.push_back(j);
    auto p = projective_module(b, i);
    Module<K> d = higher.empty() ? p : quotient_by(p, projective_trace(p, higher));
    Matrix<K> rad = d.radical_space().basis();
    Module<K> pd = d;
    if (d.radical_space().dim() > 0) {
      Matrix<K> at_i = matmul(rad, d.gen(i));
      pd = quotient_by(d, generated_submodule(d, at_i));
    }
    delta.push_back(d);
    proper.push_back(pd);
  }
}

template <class K>
std::optional<std::vector<std::size_t>> peel(const Module<K>& m, const std::vector<Module<K>>& deltas) {
  const std::size_t n = deltas.size();
  std::vector<std::size_t> mult(n, 0);
  Module<K> cur = m;
  for (std::size_t j = n; j-- > 0;) {
    if (cur.dim() == 0) break;
    auto tr = projective_trace(cur, {j});
    const std::size_t t = top_count(tr.module);
    if (tr.module.dim() != t * deltas[j].dim()) return std::nullopt;
    mult[j] = t;
    if (t > 0) cur = quotient_by(cur, tr);
  }
  if (cur.dim() != 0) return std::nullopt;
  return mult;
}

template <class K>
bool ext1_vanishes_into(const Module<K>& m, const std::vector<Module<K>>& targets) {
  auto res = min_proj_resolution(m, 1);
  for (const auto& t : targets)
    if (ext_dim(res, t, 1) != 0) return false;
  return true;
}

template <class K>
bool ext1_vanishes_from(const std::vector<Module<K>>& sources, const Module<K>& m) {
  for (const auto& s : sources)
    if (ext_dim(s, m, 1) != 0) return false;
  return true;
}

}  // namespace

template <class K>
Embedded<K> projective_trace(const Module<K>& m, const std::vector<std::size_t>& vertices) {
  Matrix<K> rows(m.field(), 0, m.dim());
  for (auto v : vertices)
    for (const auto& r : m.vertex_space(v).accepted()) rows.append_row(r);
  return generated_submodule(m, rows);
}

template <class K>
StratificationVerdict stratification_check(const AlgebraPtr<K>& a, const std::vector<std::size_t>& order) {
  auto b = apply_order(a, order);
  StratificationVerdict v;
  v.failing_layer = standard_failure(b);
  v.standardly = !v.failing_layer;
  v.failing_layer_op = standard_failure(b->opposite());
  v.properly = v.standardly && !v.failing_layer_op;
  return v;
}

template <class K>
StratificationVerdict stratification_check(const AlgebraPtr<K>& a) {
  return stratification_check(a, identity_order(a->num_vertices()));
}

template <class K>
StratifiedData<K> standard_family(const AlgebraPtr<K>& a, const std::vector<std::size_t>& order) {
  StratifiedData<K> s;
  s.algebra = apply_order(a, order);
  s.order = order;
  standards(s.algebra, s.delta, s.proper_delta);
  auto op = s.algebra->opposite();
  standards(op, s.delta_op, s.proper_delta_op);
  for (const auto& d : s.delta_op) s.nabla.push_back(dual_module(d));
  for (const auto& d : s.proper_delta_op) s.proper_nabla.push_back(dual_module(d));
  s.verdict = stratification_check(s.algebra);
  return s;
}

template <class K>
StratifiedData<K> standard_family(const AlgebraPtr<K>& a) {
  return standard_family(a, identity_order(a->num_vertices()));
}

template <class K>
FiltrationResult in_filtration_category(const Module<K>& m, Family f, const StratifiedData<K>& s) {
  FiltrationResult r;
  if (s.verdict.properly) {
    switch (f) {
      case Family::Delta: r.ext_route = ext1_vanishes_into(m, s.proper_nabla); break;
      case Family::ProperDelta: r.ext_route = ext1_vanishes_into(m, s.nabla); break;
      case Family::Nabla: r.ext_route = ext1_vanishes_from(s.proper_delta, m); break;
      case Family::ProperNabla: r.ext_route = ext1_vanishes_from(s.delta, m); break;
    }
  }
  if (s.verdict.standardly && f == Family::Delta) {
    auto p = peel(m, s.delta);
    r.peel_route = p.has_value();
    if (p) r.multiplicities = *p;
  }
  if (s.verdict.properly && f == Family::Nabla) {
    auto p = peel(dual_module(m), s.delta_op);
    r.peel_route = p.has_value();
    if (p) r.multiplicities = *p;
  }
  if (r.ext_route && r.peel_route && *r.ext_route != *r.peel_route)
    throw Error(ErrorKind::RoutesDisagree, std::string("Ext and peeling routes disagree for F(") + family_name(f) + ")");
  if (!r.ext_route && !r.peel_route)
    throw Error(ErrorKind::PreconditionUnverified, std::string("no route decides F(") + family_name(f) + ")");
  r.member = r.ext_route ? *r.ext_route : *r.peel_route;
  return r;
}

template <class K>
std::vector<std::size_t> delta_multiplicities(const Module<K>& m, const StratifiedData<K>& s) {
  auto p = peel(m, s.delta);
  if (!p) throw Error(ErrorKind::NotFiltered, "module has no Delta filtration");
  return *p;
}

template <class K>
std::vector<Module<K>> tilting_summands(const StratifiedData<K>& s, Rng& rng, std::vector<std::string>* log) {
  if (!s.verdict.properly) throw Error(ErrorKind::PreconditionUnverified, "tilting module needs a properly stratified order");
  const std::size_t n = s.size();
  const std::size_t dimA = s.algebra->dim();
  const std::size_t bound = n * dimA * dimA;
  std::vector<Module<K>> out;
  for (std::size_t i = 0; i < n; ++i) {
    Module<K> x = s.delta[i];
    std::size_t steps = 0;
    for (std::size_t j = i; j-- > 0;)
      while (ext_dim(s.delta[j], x, 1) > 0) {
        x = universal_extension(x, s.delta[j]).module;
        if (++steps > bound) throw Error(ErrorKind::ConstructionDiverged, "universal extensions do not stabilise");
      }
    for (std::size_t j = 0; j < n; ++j)
      if (ext_dim(s.delta[j], x, 1) != 0)
        throw Error(ErrorKind::ConstructionDiverged, "Ext^1(Delta, T) does not vanish");
    std::vector<Module<K>> hits;
    for (const auto& part : decompose(x, rng)) {
      auto mult = delta_multiplicities(part.module, s);
      if (mult[i] > 0)
        for (std::size_t c = 0; c < part.multiplicity; ++c) hits.push_back(part.module);
    }
    if (hits.size() != 1)
      throw Error(ErrorKind::InternalInconsistency, "Delta(" + std::to_string(i + 1) + ") is not in exactly one summand");
    if (log)
      log->push_back("T(" + std::to_string(i + 1) + "): dim " + std::to_string(hits[0].dim()) + " after " +
                     std::to_string(steps) + " universal extensions");
    out.push_back(hits[0]);
  }
  return out;
}

template <class K>
TiltingData<K> characteristic_tilting(const StratifiedData<K>& s, Rng& rng, std::size_t cutoff) {
  TiltingData<K> t;
  t.tilting = tilting_summands(s, rng, &t.transcript);
  auto sop = standard_family(s.algebra->opposite());
  for (const auto& c : tilting_summands(sop, rng)) t.cotilting.push_back(dual_module(c));
  std::size_t pd = 0;
  bool finite = true;
  for (const auto& x : t.tilting) {
    auto r = projective_dimension(x, cutoff);
    if (!r.finite()) {
      finite = false;
      break;
    }
    pd = std::max(pd, *r.value);
  }
  t.pd = finite ? DimensionReport::of(pd, cutoff) : DimensionReport::above(cutoff);
  t.transcript.push_back("pd(T) = " + t.pd.to_string());
  auto basic = t.basic_tilting(s.algebra);
  for (std::size_t i = 0; i < t.tilting.size(); ++i) {
    if (!in_filtration_category(t.tilting[i], Family::Delta, s).member)
      throw Error(ErrorKind::InternalInconsistency, "T(" + std::to_string(i + 1) + ") is not Delta-filtered");
  }
  const std::size_t top = finite ? std::max<std::size_t>(pd, 1) : cutoff;
  auto res = min_proj_resolution(basic, top);
  for (std::size_t k = 1; k <= top; ++k) {
    auto e = ext_dim(res, basic, k);
    t.transcript.push_back("dim Ext^" + std::to_string(k) + "(T,T) = " + std::to_string(e));
    if (e != 0) throw Error(ErrorKind::InternalInconsistency, "T has self-extensions");
  }
  return t;
}

template <class K>
AlgebraPtr<K> ringel_dual(const StratifiedData<K>& s, const TiltingData<K>& t,
                          std::optional<std::vector<std::size_t>> order) {
  const std::size_t n = t.tilting.size();
  std::vector<std::size_t> ord(n);
  if (order) {
    ord = *order;
  } else {
    for (std::size_t i = 0; i < n; ++i) ord[i] = n - 1 - i;
  }
  std::vector<Module<K>> xs;
  for (auto i : ord) {
    if (i >= n) throw Error(ErrorKind::InvalidInput, "Ringel dual order out of range");
    xs.push_back(t.tilting[i]);
  }
  (void)s;
  return endomorphism_algebra(xs);
}

template <class K>
Verdict is_frobenius(const AlgebraPtr<K>& a, Rng& rng) {
  for (bool pi : projective_injective_vertices(a))
    if (!pi) return Verdict::No;
  auto da = dual_module(regular_module(a->opposite()));
  return is_isomorphic(regular_module(a), da, rng).verdict;
}

template <class K>
Verdict is_symmetric(const AlgebraPtr<K>& a, Rng& rng) {
  Verdict frob = is_frobenius(a, rng);
  if (frob != Verdict::Yes) return frob;
  const K& k = a->field();
  const auto& t = a->table();
  const std::size_t d = a->dim();
  std::vector<std::vector<Vec<K>>> prod(d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) prod[x].push_back(t.mul(t.basis_vector(x), t.basis_vector(y)));
  Matrix<K> comm(k, 0, d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = x + 1; y < d; ++y) {
      auto c = vec_sub(k, prod[x][y], prod[y][x]);
      if (!is_zero_vec(k, c)) comm.append_row(c);
    }
  std::vector<Vec<K>> forms;
  if (comm.rows() == 0) {
    for (std::size_t b = 0; b < d; ++b) forms.push_back(unit_vec(k, d, b));
  } else {
    forms = kernel_basis(comm);
  }
  std::vector<Matrix<K>> grams;
  for (const auto& l : forms) {
    Matrix<K> g(k, d, d);
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y) g(x, y) = dot(k, l, prod[x][y]);
    grams.push_back(std::move(g));
  }
  if (grams.empty()) return Verdict::No;
  return find_invertible(grams, rng).verdict;
}

namespace {

bool at_least(const DimensionReport& r, std::size_t v) { return !r.finite() || *r.value >= v; }

}  // namespace

template <class K>
ClassificationReport<K> classify(const AlgebraPtr<K>& a, Rng& rng, std::size_t cutoff) {
  ClassificationReport<K> c;
  auto pi = projective_injective_vertices(a);
  c.selfinjective = std::all_of(pi.begin(), pi.end(), [](bool b) { return b; });
  for (std::size_t i = 0; i < pi.size(); ++i)
    if (pi[i]) c.projective_injective.push_back(i);
  c.frobenius = c.selfinjective ? is_frobenius(a, rng) : Verdict::No;
  c.symmetric = c.frobenius == Verdict::Yes ? is_symmetric(a, rng) : c.frobenius;
  c.gorenstein = gorenstein_dim(a, cutoff);
  c.dominant = dominant_dim(a, cutoff);
  c.global = global_dim(a, cutoff);
  if (c.selfinjective) {
    c.gendo_symmetric = c.symmetric;
  } else if (!at_least(c.dominant, 2) || c.projective_injective.empty()) {
    c.gendo_symmetric = Verdict::No;
  } else {
    c.gendo_symmetric = is_symmetric(a->corner(c.projective_injective), rng);
  }
  c.minimal_auslander_gorenstein = c.gorenstein.dim.finite() && c.dominant.finite() &&
                                   *c.gorenstein.dim.value == *c.dominant.value && *c.dominant.value >= 2;
  return c;
}

template <class K>
std::string classification_flags(const AlgebraPtr<K>& a, Rng& rng, std::size_t cutoff) {
  auto c = classify(a, rng, cutoff);
  std::ostringstream os;
  os << "selfinjective=" << c.selfinjective << ";frobenius=" << verdict_name(c.frobenius)
     << ";symmetric=" << verdict_name(c.symmetric) << ";gendo=" << verdict_name(c.gendo_symmetric)
     << ";gordim=" << c.gorenstein.dim.to_string() << ";domdim=" << c.dominant.to_string()
     << ";gldim=" << c.global.to_string() << ";mag=" << c.minimal_auslander_gorenstein;
  return os.str();
}

template <class K>
AlgebraInvariants algebra_invariants(const AlgebraPtr<K>& a, const std::string& flags) {
  AlgebraInvariants inv;
  inv.dim = a->dim();
  inv.cartan = a->cartan();
  inv.radical_layers = radical_layers(*a);
  for (std::size_t i = 0; i < a->num_vertices(); ++i) {
    inv.projective_layers.push_back(radical_top_socle(projective_module(a, i)).radical_layers);
    inv.injective_layers.push_back(radical_top_socle(injective_module(a, i)).radical_layers);
  }
  auto s = standard_family(a);
  for (const auto& d : s.delta) inv.delta_dims.push_back(d.dim());
  for (const auto& d : s.proper_delta) inv.proper_delta_dims.push_back(d.dim());
  inv.properly_stratified = s.verdict.properly;
  inv.flags = flags;
  return inv;
}

template <class K>
InvariantIsoResult invariant_isomorphic(const AlgebraPtr<K>& a, const AlgebraPtr<K>& b, Rng& rng, std::size_t cutoff) {
  InvariantIsoResult r;
  if (a->dim() != b->dim()) {
    r.reason = "dimensions " + std::to_string(a->dim()) + " and " + std::to_string(b->dim());
    return r;
  }
  const std::size_t n = a->num_vertices();
  if (n != b->num_vertices()) {
    r.reason = "different numbers of vertices";
    return r;
  }
  if (radical_layers(*a) != radical_layers(*b)) {
    r.reason = "radical layers differ";
    return r;
  }
  std::string fa = classification_flags(a, rng, cutoff);
  std::string fb = classification_flags(b, rng, cutoff);
  if (fa != fb) {
    r.reason = "classification flags differ: " + fa + " vs " + fb;
    return r;
  }
  auto ia = algebra_invariants(a, fa);
  auto cb = b->cartan();
  auto perm = identity_order(n);
  do {
    bool cartan_ok = true;
    for (std::size_t i = 0; i < n && cartan_ok; ++i)
      for (std::size_t j = 0; j < n && cartan_ok; ++j) cartan_ok = cb[perm[i]][perm[j]] == ia.cartan[i][j];
    if (!cartan_ok) continue;
    if (algebra_invariants(apply_order(b, perm), fb) == ia) {
      r.isomorphic = true;
      r.permutation = perm;
      r.reason = "invariants agree";
      return r;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  r.reason = "no vertex order matches all invariants";
  return r;
}

template <class K>
std::vector<OrderVerdict> find_stratifying_orders(const AlgebraPtr<K>& a) {
  const std::size_t n = a->num_vertices();
  if (n > 7) throw Error(ErrorKind::TooManyIdempotents, "order search limited to 7 idempotents");
  std::vector<OrderVerdict> out;
  auto perm = identity_order(n);
  do {
    out.push_back({perm, stratification_check(a, perm)});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

template <class K>
Module<K> corner_restriction(const Module<K>& m, const AlgebraPtr<K>& corner, const std::vector<std::size_t>& vertices) {
  const auto& a = m.algebra();
  const K& k = m.field();
  std::vector<bool> in(a.num_vertices(), false);
  for (auto v : vertices) in[v] = true;
  // Corner basis element x is the word ws[x] of A (same selection as AssocAlgebra::corner).
  std::vector<std::size_t> ws;
  for (std::size_t w = 0; w < a.dim(); ++w)
    if (in[a.words()[w].start] && in[a.words()[w].end]) ws.push_back(w);
  if (ws.size() != corner->dim()) throw Error(ErrorKind::AlgebraMismatch, "corner algebra does not match the vertices");
  RowSpace<K> me(k, m.dim());
  for (auto v : vertices)
    for (const auto& r : m.vertex_space(v).accepted()) me.insert(r);
  Matrix<K> basis = me.dim() > 0 ? me.basis() : Matrix<K>(k, 0, m.dim());
  std::vector<Matrix<K>> gens;
  for (std::size_t g = 0; g < corner->num_generators(); ++g) {
    const Vec<K>& y = corner->generator(g);
    Vec<K> emb(a.dim(), k.zero());
    for (std::size_t x = 0; x < ws.size(); ++x)
      if (!k.is_zero(y[x])) axpy(k, emb, y[x], a.word_matrix().row(ws[x]));
    Matrix<K> act = m.element_action(emb);
    Matrix<K> g_mat(k, me.dim(), me.dim());
    for (std::size_t r = 0; r < me.dim(); ++r) {
      auto c = me.coordinates(vec_mat(basis.row(r), act));
      if (!c) throw Error(ErrorKind::InternalInconsistency, "corner action leaves M e");
      g_mat.set_row(r, *c);
    }
    gens.push_back(std::move(g_mat));
  }
  return Module<K>(corner, std::move(gens));
}

#define STRATIKIT_INSTANTIATE_STRAT(K)                                                                             \
  template struct StratifiedData<K>;                                                                               \
  template Embedded<K> projective_trace<K>(const Module<K>&, const std::vector<std::size_t>&);                     \
  template StratificationVerdict stratification_check<K>(const AlgebraPtr<K>&, const std::vector<std::size_t>&);   \
  template StratificationVerdict stratification_check<K>(const AlgebraPtr<K>&);                                    \
  template StratifiedData<K> standard_family<K>(const AlgebraPtr<K>&, const std::vector<std::size_t>&);            \
  template StratifiedData<K> standard_family<K>(const AlgebraPtr<K>&);                                             \
  template FiltrationResult in_filtration_category<K>(const Module<K>&, Family, const StratifiedData<K>&);         \
  template std::vector<std::size_t> delta_multiplicities<K>(const Module<K>&, const StratifiedData<K>&);           \
  template std::vector<Module<K>> tilting_summands<K>(const StratifiedData<K>&, Rng&, std::vector<std::string>*);  \
  template TiltingData<K> characteristic_tilting<K>(const StratifiedData<K>&, Rng&, std::size_t);                  \
  template AlgebraPtr<K> ringel_dual<K>(const StratifiedData<K>&, const TiltingData<K>&,                           \
                                        std::optional<std::vector<std::size_t>>);                                  \
  template Verdict is_frobenius<K>(const AlgebraPtr<K>&, Rng&);                                                    \
  template Verdict is_symmetric<K>(const AlgebraPtr<K>&, Rng&);                                                    \
  template ClassificationReport<K> classify<K>(const AlgebraPtr<K>&, Rng&, std::size_t);                           \
  template std::string classification_flags<K>(const AlgebraPtr<K>&, Rng&, std::size_t);                           \
  template AlgebraInvariants algebra_invariants<K>(const AlgebraPtr<K>&, const std::string&);                      \
  template InvariantIsoResult invariant_isomorphic<K>(const AlgebraPtr<K>&, const AlgebraPtr<K>&, Rng&,            \
                                                      std::size_t);                                                \
  template std::vector<OrderVerdict> find_stratifying_orders<K>(const AlgebraPtr<K>&);                             \
  template Module<K> corner_restriction<K>(const Module<K>&, const AlgebraPtr<K>&, const std::vector<std::size_t>&);

STRATIKIT_INSTANTIATE_STRAT(PrimeField)
STRATIKIT_INSTANTIATE_STRAT(RationalField)

}  // namespace stratikit
