#include "stratikit/verify.hpp"

#include <algorithm>
#include <map>

#include "stratikit/error.hpp"

namespace stratikit {

namespace {

const std::map<std::string, PropertyId>& property_table() {
  static const std::map<std::string, PropertyId> t = {
      {"MAIN", PropertyId::Main},         {"FROB_ENDO", PropertyId::FrobEndo},
      {"GP_FILT", PropertyId::GpFilt},    {"PFIN_CAP", PropertyId::PfinCap},
      {"MAZOV", PropertyId::Mazov},       {"DOMDIM_T", PropertyId::DomdimT},
      {"RINGEL_GIGS", PropertyId::RingelGigs}, {"SELF_DUAL_CENT", PropertyId::SelfDualCent},
  };
  return t;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

template <class K>
std::vector<std::vector<std::string>> matrix_strings(const Matrix<K>& m) {
  std::vector<std::vector<std::string>> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_strings(m.field(), m.row(i)));
  return out;
}

// Lazily computed data shared by the checks of one property.
template <class K>
class Context {
 public:
  Context(const VerifyInput<K>& in, const VerifyOptions& opt)
      : in_(in), opt_(opt), rng_(opt.seed), s_(standard_family(in.algebra, in.order)) {}

  const StratifiedData<K>& strat() const { return s_; }
  const AlgebraPtr<K>& algebra() const { return s_.algebra; }
  Rng& rng() { return rng_; }
  std::size_t cutoff() const { return opt_.cutoff; }
  bool witnesses() const { return opt_.witnesses; }

  const GorensteinReport& gorenstein() {
    if (!gor_) gor_ = gorenstein_dim(s_.algebra, opt_.cutoff);
    return *gor_;
  }
  const TiltingData<K>& tilting() {
    if (!tilt_) tilt_ = characteristic_tilting(s_, rng_, opt_.cutoff);
    return *tilt_;
  }
  const ClassificationReport<K>& classification() {
    if (!cls_) cls_ = classify(s_.algebra, rng_, opt_.cutoff);
    return *cls_;
  }

 private:
  const VerifyInput<K>& in_;
  VerifyOptions opt_;
  Rng rng_;
  StratifiedData<K> s_;
  std::optional<GorensteinReport> gor_;
  std::optional<TiltingData<K>> tilt_;
  std::optional<ClassificationReport<K>> cls_;
};

void hypothesis(Transcript& t, const std::string& name, bool ok, const std::string& detail = "") {
  t.hypotheses.push_back({name, ok, detail});
  if (!ok && t.status == Status::Pass) t.status = Status::HypothesisNotMet;
}

bool hypotheses_met(const Transcript& t) {
  return std::all_of(t.hypotheses.begin(), t.hypotheses.end(), [](const Check& c) { return c.ok; });
}

void step(Transcript& t, const std::string& name, bool ok, const std::string& detail = "") {
  t.steps.push_back({name, ok, detail});
  if (!ok && t.status == Status::Pass) t.status = Status::Fail;
}

void inconclusive(Transcript& t, const std::string& name, const std::string& detail) {
  t.steps.push_back({name, false, detail});
  if (t.status == Status::Pass || t.status == Status::Fail) t.status = Status::Inconclusive;
}

template <class K>
void require_properly(Transcript& t, Context<K>& c) {
  const auto& v = c.strat().verdict;
  std::string detail;
  if (v.failing_layer) detail = "fails at layer " + std::to_string(*v.failing_layer);
  else if (v.failing_layer_op) detail = "opposite fails at layer " + std::to_string(*v.failing_layer_op);
  hypothesis(t, "properly stratified in the given order", v.properly, detail);
}

template <class K>
std::optional<std::size_t> require_gorenstein(Transcript& t, Context<K>& c) {
  const auto& g = c.gorenstein();
  hypothesis(t, "Gorenstein", g.dim.finite(), "gordim " + g.dim.to_string());
  return g.dim.value;
}

// Symmetric Cartan matrix and dim Delta(i) = dim Nabla(i) for every i.
template <class K>
void require_duality(Transcript& t, Context<K>& c) {
  const auto& a = *c.algebra();
  const auto cartan = a.cartan();
  bool sym = true;
  for (std::size_t i = 0; i < cartan.size(); ++i)
    for (std::size_t j = 0; j < cartan.size(); ++j) sym = sym && cartan[i][j] == cartan[j][i];
  bool dims = true;
  const auto& s = c.strat();
  for (std::size_t i = 0; i < s.size(); ++i) dims = dims && s.delta[i].dim() == s.nabla[i].dim();
  hypothesis(t, "duality: symmetric Cartan matrix", sym);
  hypothesis(t, "duality: dim Delta(i) = dim Nabla(i)", dims);
}

template <class K>
void require_gendo(Transcript& t, Context<K>& c) {
  const auto v = c.classification().gendo_symmetric;
  hypothesis(t, "gendo-symmetric", v == Verdict::Yes, verdict_name(v));
}

template <class K>
void run_main(Transcript& t, Context<K>& c) {
  require_properly(t, c);
  if (!hypotheses_met(t)) return;
  const auto& g = c.gorenstein();
  const auto& td = c.tilting();
  const auto& a = c.algebra();
  const auto iso = is_isomorphic(td.basic_tilting(a), td.basic_cotilting(a), c.rng());
  if (iso.verdict == Verdict::Inconclusive) {
    inconclusive(t, "T isomorphic to C", iso.reason);
    return;
  }
  bool t_in_nabla = true;
  for (const auto& ti : td.tilting) t_in_nabla = t_in_nabla && in_filtration_category(ti, Family::Nabla, c.strat()).member;
  const bool gor = g.dim.finite();
  const bool tc = iso.verdict == Verdict::Yes;
  step(t, "A Gorenstein", true, yes_no(gor) + " (gordim " + g.dim.to_string() + ")");
  step(t, "T isomorphic to C", true, yes_no(tc));
  step(t, "T in F(Nabla)", true, yes_no(t_in_nabla));
  step(t, "the three conditions agree", gor == tc && tc == t_in_nabla);
  if (c.witnesses() && iso.witness) t.witnesses.push_back({"T -> C", matrix_strings(*iso.witness)});
}

template <class K>
void run_frob_endo(Transcript& t, Context<K>& c) {
  require_properly(t, c);
  if (!hypotheses_met(t)) return;
  const auto& s = c.strat();
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto e = endomorphism_algebra(std::vector<Module<K>>{s.delta[i]});
    const auto v = is_frobenius(e, c.rng());
    const std::string name = "End(Delta(" + std::to_string(i + 1) + ")) Frobenius";
    if (v == Verdict::Inconclusive) inconclusive(t, name, "isomorphism search inconclusive");
    else step(t, name, v == Verdict::Yes, "dim " + std::to_string(e->dim()));
  }
  const auto& g = c.gorenstein();
  if (!g.dim.finite()) {
    step(t, "quotient chain", true, "skipped, A not Gorenstein");
    return;
  }
  const std::size_t n = s.size();
  for (std::size_t cut = n - 1; cut >= 1; --cut) {
    std::vector<std::size_t> killed;
    for (std::size_t v = cut; v < n; ++v) killed.push_back(v);
    const auto q = c.algebra()->quotient_by_vertices(killed);
    const auto qv = stratification_check(q);
    const auto qg = gorenstein_dim(q, c.cutoff());
    const std::string name = "A/A(e_" + std::to_string(cut + 1) + "+...+e_" + std::to_string(n) + ")A";
    step(t, name + " properly stratified", qv.properly);
    step(t, name + " Gorenstein", qg.dim.finite(), "gordim " + qg.dim.to_string());
  }
}

template <class K>
void run_gp_filt(Transcript& t, Context<K>& c) {
  require_properly(t, c);
  const auto g = require_gorenstein(t, c);
  if (!hypotheses_met(t)) return;
  const auto& s = c.strat();
  for (const auto& [name, m] : sampling_set(s)) {
    const auto x = syzygy(m, *g);
    const bool in_pd = x.is_zero() || in_filtration_category(x, Family::ProperDelta, s).member;
    step(t, "syz^" + std::to_string(*g) + "(" + name + ") in F(ProperDelta)", in_pd, "dim " + std::to_string(x.dim()));
    const auto y = cosyzygy(m, *g);
    const bool in_pn = y.is_zero() || in_filtration_category(y, Family::ProperNabla, s).member;
    step(t, "cosyz^" + std::to_string(*g) + "(" + name + ") in F(ProperNabla)", in_pn, "dim " + std::to_string(y.dim()));
  }
}

template <class K>
void run_pfin_cap(Transcript& t, Context<K>& c) {
  require_properly(t, c);
  if (!hypotheses_met(t)) return;
  const auto& s = c.strat();
  auto samples = sampling_set(s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    samples.push_back({"Delta(" + std::to_string(i + 1) + ")", s.delta[i]});
    samples.push_back({"P(" + std::to_string(i + 1) + ")", projective_module(s.algebra, i)});
  }
  for (const auto& [name, m] : samples) {
    const bool in_d = in_filtration_category(m, Family::Delta, s).member;
    const bool in_pd = in_filtration_category(m, Family::ProperDelta, s).member;
    const bool pfin = projective_dimension(m, c.cutoff()).finite();
    step(t, name + ": F(Delta) = F(ProperDelta) with finite pd", in_d == (in_pd && pfin),
         "F(Delta) " + yes_no(in_d) + ", F(ProperDelta) " + yes_no(in_pd) + ", pd finite " + yes_no(pfin));
  }
}

template <class K>
void run_mazov(Transcript& t, Context<K>& c) {
  require_properly(t, c);
  const auto g = require_gorenstein(t, c);
  if (hypotheses_met(t)) require_duality(t, c);
  if (!hypotheses_met(t)) return;
  const auto& pd = c.tilting().pd;
  step(t, "gordim = 2 pd(T)", pd.finite() && *g == 2 * *pd.value,
       "gordim " + std::to_string(*g) + ", pd(T) " + pd.to_string());
}

template <class K>
void run_domdim_t(Transcript& t, Context<K>& c) {
  require_properly(t, c);
  require_gorenstein(t, c);
  if (hypotheses_met(t)) require_gendo(t, c);
  if (hypotheses_met(t)) require_duality(t, c);
  if (!hypotheses_met(t)) return;
  const auto& td = c.tilting();
  const auto dt = dominant_dim(td.basic_tilting(c.algebra()), c.cutoff());
  const auto da = c.classification().dominant;
  bool ok;
  if (dt.finite() && da.finite()) ok = *da.value == 2 * *dt.value;
  else ok = !dt.finite() && !da.finite();
  step(t, "domdim A = 2 domdim T", ok, "domdim A " + da.to_string() + ", domdim T " + dt.to_string());
}

template <class K>
void run_ringel_gigs(Transcript& t, Context<K>& c) {
  require_properly(t, c);
  const auto g = require_gorenstein(t, c);
  if (hypotheses_met(t)) require_gendo(t, c);
  if (hypotheses_met(t)) require_duality(t, c);
  if (hypotheses_met(t)) {
    const auto& cl = c.classification();
    hypothesis(t, "minimal Auslander-Gorenstein", cl.minimal_auslander_gorenstein,
               "gordim " + std::to_string(*g) + ", domdim " + cl.dominant.to_string());
    hypothesis(t, "gordim = 2d with d >= 1", *g >= 2 && *g % 2 == 0, std::to_string(*g));
  }
  if (!hypotheses_met(t)) return;
  const auto r = ringel_dual(c.strat(), c.tilting());
  const auto gd = gendo_data(c.algebra());
  const auto b = syzygy_endomorphism_algebra(gd, *g / 2, c.rng());
  step(t, "Ringel dual", true, "dim " + std::to_string(r->dim()));
  step(t, "End_U(U + syz^d M)", true, "dim " + std::to_string(b->dim()) + ", d = " + std::to_string(*g / 2));
  const auto iso = invariant_isomorphic(r, b, c.rng(), c.cutoff());
  step(t, "invariant-level isomorphism", iso.isomorphic, iso.reason);
}

template <class K>
void run_self_dual_cent(Transcript& t, VerifyInput<K> const& in, Context<K>& c) {
  hypothesis(t, "centraliser algebra with known Jordan type", in.jordan.has_value());
  if (!hypotheses_met(t)) return;
  require_properly(t, c);
  if (!hypotheses_met(t)) return;
  const bool criterion = centraliser_selfdual_criterion(*in.jordan);
  const auto r = ringel_dual(c.strat(), c.tilting());
  const auto iso = invariant_isomorphic(c.algebra(), r, c.rng(), c.cutoff());
  step(t, "Jordan type", true, in.jordan->to_string());
  step(t, "criterion p_i = n - p_(r-i)", true, yes_no(criterion));
  step(t, "A isomorphic to its Ringel dual", true, yes_no(iso.isomorphic) + (iso.reason.empty() ? "" : ", " + iso.reason));
  step(t, "criterion matches self-duality", criterion == iso.isomorphic);
}

}  // namespace

PropertyId parse_property_id(const std::string& s) {
  const auto& t = property_table();
  auto it = t.find(s);
  if (it == t.end()) throw Error(ErrorKind::InvalidInput, "unknown property '" + s + "'");
  return it->second;
}

const char* property_name(PropertyId p) {
  for (const auto& [name, id] : property_table())
    if (id == p) return name.c_str();
  return "?";
}

std::vector<PropertyId> all_properties() {
  return {PropertyId::Main,  PropertyId::FrobEndo, PropertyId::GpFilt,     PropertyId::PfinCap,
          PropertyId::Mazov, PropertyId::DomdimT,  PropertyId::RingelGigs, PropertyId::SelfDualCent};
}

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "Pass";
    case Status::Fail: return "Fail";
    case Status::HypothesisNotMet: return "HypothesisNotMet";
    case Status::Inconclusive: return "Inconclusive";
  }
  return "?";
}

template <class K>
Module<K> syzygy(const Module<K>& m, std::size_t k) {
  if (k == 0) return m;
  const auto res = min_proj_resolution(m, k - 1);
  if (res.syzygies.size() > k) return res.syzygies[k];
  return zero_module(m.algebra_ptr());
}

template <class K>
Module<K> cosyzygy(const Module<K>& m, std::size_t k) {
  if (k == 0) return m;
  return dual_module(syzygy(dual_module(m), k));
}

template <class K>
std::vector<std::pair<std::string, Module<K>>> sampling_set(const StratifiedData<K>& s) {
  std::vector<std::pair<std::string, Module<K>>> base;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const std::string idx = std::to_string(i + 1);
    base.push_back({"S(" + idx + ")", simple_module(s.algebra, i)});
    base.push_back({"ProperDelta(" + idx + ")", s.proper_delta[i]});
    const auto p = projective_module(s.algebra, i);
    const auto rad = submodule(p, p.radical_space().basis()).module;
    if (!rad.is_zero()) base.push_back({"rad P(" + idx + ")", rad});
  }
  std::vector<std::pair<std::string, Module<K>>> out;
  for (const auto& [name, m] : base) {
    out.push_back({name, m});
    const auto res = min_proj_resolution(m, 2);
    for (std::size_t k = 1; k < res.syzygies.size() && k <= 3; ++k)
      if (!res.syzygies[k].is_zero()) out.push_back({"syz^" + std::to_string(k) + "(" + name + ")", res.syzygies[k]});
  }
  return out;
}

template <class K>
AlgebraPtr<K> syzygy_endomorphism_algebra(const GendoData<K>& g, std::size_t d, Rng& rng) {
  const auto& u = g.base;
  std::vector<Module<K>> parts;
  for (std::size_t v = 0; v < u->num_vertices(); ++v) parts.push_back(projective_module(u, v));
  for (const auto& m : basic_summands(g.generator, rng)) {
    if (is_projective(m)) continue;
    const auto x = syzygy(m, d);
    if (!x.is_zero()) parts.push_back(x);
  }
  return endomorphism_algebra(basic_summands(direct_sum(u, parts), rng));
}

template <class K>
Transcript verify(PropertyId p, const VerifyInput<K>& in, const VerifyOptions& opt) {
  Transcript t;
  t.property = property_name(p);
  t.input = in.label;
  Context<K> c(in, opt);
  try {
    switch (p) {
      case PropertyId::Main: run_main(t, c); break;
      case PropertyId::FrobEndo: run_frob_endo(t, c); break;
      case PropertyId::GpFilt: run_gp_filt(t, c); break;
      case PropertyId::PfinCap: run_pfin_cap(t, c); break;
      case PropertyId::Mazov: run_mazov(t, c); break;
      case PropertyId::DomdimT: run_domdim_t(t, c); break;
      case PropertyId::RingelGigs: run_ringel_gigs(t, c); break;
      case PropertyId::SelfDualCent: run_self_dual_cent(t, in, c); break;
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DecompositionFailed) throw;
    inconclusive(t, "decomposition", e.what());
  }
  return t;
}

#define STRATIKIT_INSTANTIATE_VERIFY(K)                                                            \
  template Module<K> syzygy(const Module<K>&, std::size_t);                                        \
  template Module<K> cosyzygy(const Module<K>&, std::size_t);                                      \
  template std::vector<std::pair<std::string, Module<K>>> sampling_set(const StratifiedData<K>&);  \
  template AlgebraPtr<K> syzygy_endomorphism_algebra(const GendoData<K>&, std::size_t, Rng&);      \
  template Transcript verify(PropertyId, const VerifyInput<K>&, const VerifyOptions&);

STRATIKIT_INSTANTIATE_VERIFY(PrimeField)
STRATIKIT_INSTANTIATE_VERIFY(RationalField)

}  // namespace stratikit
