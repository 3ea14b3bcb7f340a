#include "stratikit/suite.hpp"

#include <regex>

#include "stratikit/util.hpp"

namespace stratikit {

namespace {

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::size_t index_of(const std::smatch& m, std::size_t g) { return std::stoul(m[g].str()) - 1; }

template <class K>
const Module<K>& family_member(const StratifiedData<K>& s, const std::string& name, std::size_t i) {
  if (name == "Delta") return s.delta.at(i);
  if (name == "ProperDelta") return s.proper_delta.at(i);
  if (name == "Nabla") return s.nabla.at(i);
  return s.proper_nabla.at(i);
}

template <class K>
Module<K> named_module(const StratifiedData<K>& s, const std::string& name, std::size_t i) {
  if (name == "P") return projective_module(s.algebra, i);
  if (name == "I") return injective_module(s.algebra, i);
  if (name == "S") return simple_module(s.algebra, i);
  return family_member(s, name, i);
}

}  // namespace

std::vector<CatalogueEntry> suite_catalogue(std::size_t max_n) {
  std::vector<CatalogueEntry> out;
  for (const char* id : {"rad-square-zero-2v", "recollement-3v", "gigs-kxy", "cent-3-1"}) {
    const auto spec = parse_example_id(id);
    out.push_back({"example:" + example_name(spec), spec, std::nullopt});
  }
  for (std::size_t m = 1; m <= 3; ++m) {
    const ExampleSpec spec{ExampleId::SchurA, m};
    out.push_back({"example:" + example_name(spec), spec, std::nullopt});
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    const ExampleSpec spec{ExampleId::BrauerB, n};
    out.push_back({"example:" + example_name(spec), spec, std::nullopt});
  }
  for (std::size_t n = 2; n <= max_n; ++n)
    for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
      JordanType j{n, {}};
      for (std::size_t p = 1; p < n; ++p)
        if (mask >> (p - 1) & 1) j.parts.push_back(p);
      out.push_back({"cent" + j.to_string(), std::nullopt, j});
    }
  return out;
}

template <class K>
LoadedAlgebra<K> build_entry(const CatalogueEntry& e, const K& k) {
  LoadedAlgebra<K> out;
  out.label = e.label;
  if (e.example) {
    auto ex = named_example(*e.example, k);
    out.algebra = ex.algebra;
    out.order = ex.order;
    if (e.example->id == ExampleId::Cent31) out.jordan = JordanType{3, {1}};
  } else {
    auto c = centraliser_algebra(*e.jordan, k);
    out.algebra = c.algebra;
    out.order = c.order;
    out.jordan = e.jordan;
  }
  return out;
}

template <class K>
std::map<std::string, std::string> observe_manifest(const NamedExample<K>& ex, Rng& rng, std::size_t cutoff) {
  static const std::regex iso_re(R"((\w+)\((\d+)\)=(\w+)\((\d+)\))");
  static const std::regex injdim_re(R"(injdim\((\w+)\((\d+)\)\))");
  static const std::regex end_re(R"(End\((\w+)\((\d+)\)\))");
  const auto s = standard_family(ex.algebra, ex.order);
  const auto& a = s.algebra;
  std::optional<ClassificationReport<K>> cls;
  auto classification = [&]() -> const ClassificationReport<K>& {
    if (!cls) cls = classify(a, rng, cutoff);
    return *cls;
  };

  std::map<std::string, std::string> out;
  for (const auto& [key, _] : ex.manifest) {
    std::smatch m;
    std::string v;
    if (key == "dim") v = std::to_string(a->dim());
    else if (key == "properly_stratified") v = bool_text(s.verdict.properly);
    else if (key == "gorenstein") v = bool_text(classification().gorenstein.dim.finite());
    else if (key == "gordim") v = classification().gorenstein.dim.to_string();
    else if (key == "domdim") v = classification().dominant.to_string();
    else if (key == "gldim") v = classification().global.to_string();
    else if (key == "gendo_symmetric") v = bool_text(classification().gendo_symmetric == Verdict::Yes);
    else if (key == "symmetric") v = bool_text(classification().symmetric == Verdict::Yes);
    else if (key == "minimal_auslander_gorenstein") v = bool_text(classification().minimal_auslander_gorenstein);
    else if (key == "injdim(A)") v = injective_dimension(regular_module(a), cutoff).to_string();
    else if (key == "ringel_dual_dim") v = std::to_string(ringel_dual(s, characteristic_tilting(s, rng, cutoff))->dim());
    else if (std::regex_match(key, m, iso_re)) {
      const auto x = named_module(s, m[1].str(), index_of(m, 2));
      const auto y = named_module(s, m[3].str(), index_of(m, 4));
      const auto r = is_isomorphic(x, y, rng);
      v = r.verdict == Verdict::Inconclusive ? "inconclusive" : bool_text(r.verdict == Verdict::Yes);
    } else if (std::regex_match(key, m, injdim_re)) {
      v = injective_dimension(named_module(s, m[1].str(), index_of(m, 2)), cutoff).to_string();
    } else if (std::regex_match(key, m, end_re)) {
      const auto e = endomorphism_algebra(std::vector<Module<K>>{named_module(s, m[1].str(), index_of(m, 2))});
      const auto f = is_frobenius(e, rng);
      v = std::string(e->num_vertices() == 1 ? "local" : "not local") + (f == Verdict::Yes ? " Frobenius" : " non-Frobenius") +
          ", dim " + std::to_string(e->dim());
    } else {
      v = "unknown key";
    }
    out[key] = v;
  }
  return out;
}

bool SuiteReport::any_fail() const {
  for (const auto& r : manifest)
    if (!r.ok()) return true;
  for (const auto& r : verdicts)
    if (r.status == Status::Fail) return true;
  return false;
}

bool SuiteReport::any_inconclusive() const {
  for (const auto& r : verdicts)
    if (r.status == Status::Inconclusive) return true;
  return false;
}

std::uint64_t derived_seed(std::uint64_t seed, const std::string& input, const std::string& property) {
  return seed ^ fnv1a(input + "/" + property);
}

template <class K>
SuiteReport run_suite(const K& k, std::uint64_t seed, std::size_t cutoff, std::size_t max_n) {
  SuiteReport rep;
  rep.field = field_spec(k);
  rep.seed = seed;
  rep.cutoff = cutoff;
  const auto cat = suite_catalogue(max_n);
  const auto props = all_properties();

  std::vector<std::vector<ManifestRow>> manifest(cat.size());
  std::vector<std::vector<VerdictRow>> verdicts(cat.size());
  std::vector<std::string> errors(cat.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t e = 0; e < cat.size(); ++e) {
    try {
      if (cat[e].example) {
        Rng rng(derived_seed(seed, cat[e].label, "manifest"));
        const auto ex = named_example(*cat[e].example, k);
        const auto observed = observe_manifest(ex, rng, cutoff);
        for (const auto& [key, expected] : ex.manifest)
          manifest[e].push_back({cat[e].label, key, expected, observed.at(key)});
      }
      const auto la = build_entry(cat[e], k);
      for (auto p : props) {
        const VerifyInput<K> in{la.label, la.algebra, la.order, la.jordan};
        const VerifyOptions opt{cutoff, derived_seed(seed, la.label, property_name(p)), false};
        verdicts[e].push_back({la.label, property_name(p), verify(p, in, opt).status});
      }
    } catch (const std::exception& ex) {
      errors[e] = cat[e].label + ": " + ex.what();
    }
  }
  for (const auto& err : errors)
    if (!err.empty()) throw Error(ErrorKind::InternalInconsistency, "suite entry failed: " + err);
  for (std::size_t e = 0; e < cat.size(); ++e) {
    rep.manifest.insert(rep.manifest.end(), manifest[e].begin(), manifest[e].end());
    rep.verdicts.insert(rep.verdicts.end(), verdicts[e].begin(), verdicts[e].end());
  }
  return rep;
}

Json suite_to_json(const SuiteReport& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = "suite";
  j["field"] = r.field.to_json();
  j["seed"] = r.seed;
  j["cutoff"] = r.cutoff;
  Json man = Json::array();
  for (const auto& m : r.manifest)
    man.push_back({{"input", m.input}, {"key", m.key}, {"expected", m.expected}, {"observed", m.observed}, {"ok", m.ok()}});
  j["manifest"] = man;
  Json table = Json::array();
  for (const auto& v : r.verdicts) table.push_back({{"input", v.input}, {"property", v.property}, {"status", status_name(v.status)}});
  j["verdicts"] = table;
  std::map<std::string, std::size_t> counts;
  for (const auto& v : r.verdicts) ++counts[status_name(v.status)];
  Json summary = Json::object();
  for (const auto& [name, c] : counts) summary[name] = c;
  std::size_t manifest_ok = 0;
  for (const auto& m : r.manifest) manifest_ok += m.ok();
  summary["manifest_ok"] = manifest_ok;
  summary["manifest_total"] = r.manifest.size();
  j["summary"] = summary;
  return j;
}

#define STRATIKIT_INSTANTIATE_SUITE(K)                                                                         \
  template LoadedAlgebra<K> build_entry(const CatalogueEntry&, const K&);                                     \
  template std::map<std::string, std::string> observe_manifest(const NamedExample<K>&, Rng&, std::size_t);   \
  template SuiteReport run_suite(const K&, std::uint64_t, std::size_t, std::size_t);

STRATIKIT_INSTANTIATE_SUITE(PrimeField)
STRATIKIT_INSTANTIATE_SUITE(RationalField)

}  // namespace stratikit
