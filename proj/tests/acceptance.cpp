// Acceptance battery: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "stratikit/families.hpp"
#include "stratikit/io.hpp"
#include "stratikit/strat.hpp"
#include "stratikit/suite.hpp"
#include "stratikit/verify.hpp"

#ifndef STRATIKIT_CLI_PATH
#error "STRATIKIT_CLI_PATH must name the CLI binary"
#endif

using namespace stratikit;

namespace {

// Collects failed sub-checks of one criterion.
struct Log {
  std::vector<std::string> failures;
  std::size_t checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

template <class K>
bool iso(const Module<K>& m, const Module<K>& n, Rng& rng) {
  return is_isomorphic(m, n, rng).verdict == Verdict::Yes;
}

template <class K>
NamedExample<K> example(const std::string& id, const K& k) {
  return named_example(parse_example_id(id), k);
}

template <class K>
VerifyInput<K> input_of(const std::string& label, const NamedExample<K>& ex) {
  return {label, ex.algebra, ex.order, std::nullopt};
}

std::vector<JordanType> jordan_types(std::size_t n) {
  std::vector<JordanType> out;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    JordanType j{n, {}};
    for (std::size_t p = 1; p < n; ++p)
      if (mask >> (p - 1) & 1) j.parts.push_back(p);
    out.push_back(j);
  }
  return out;
}

std::string dims(const DimensionReport& d) { return d.to_string(); }

// ---------------------------------------------------------------------------

template <class K>
void hom_oracle(Log& log, const K& k) {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto u = truncated_polynomial(k, n);
    for (std::size_t a = 1; a <= n; ++a)
      for (std::size_t b = 1; b <= n; ++b) {
        const auto d = hom_space(chain_module(u, a), chain_module(u, b)).dim();
        log.expect(d == std::min(a, b), k.name() + " n=" + std::to_string(n) + " Hom(U/J^" + std::to_string(a) +
                                            ", U/J^" + std::to_string(b) + ") = " + std::to_string(d));
      }
  }
}

void criterion_1(Log& log) {
  hom_oracle(log, PrimeField());
  hom_oracle(log, RationalField());
}

void criterion_2(Log& log) {
  PrimeField k;
  Rng rng(2);
  auto ex = example("rad-square-zero-2v", k);
  auto s = standard_family(ex.algebra, ex.order);
  log.expect(s.verdict.properly, "properly stratified");
  auto g = gorenstein_dim(s.algebra, 12);
  log.expect(!g.dim.finite() && g.dim.cutoff == 12, "not Gorenstein at cutoff 12: " + dims(g.dim));
  log.expect(iso(s.delta[0], projective_module(s.algebra, 0), rng), "Delta(1) = e1 A");
  log.expect(iso(s.proper_delta[0], simple_module(s.algebra, 0), rng), "ProperDelta(1) = S1");
  auto e = endomorphism_algebra(std::vector<Module<PrimeField>>{s.delta[0]});
  log.expect(e->dim() == 2 && e->num_vertices() == 1, "End(Delta(1)) local of dimension 2");
  log.expect(is_frobenius(e, rng) == Verdict::Yes, "End(Delta(1)) Frobenius");

  // the three equivalent conditions, each evaluated directly
  auto t = characteristic_tilting(s, rng);
  const bool t_iso_c = iso(t.basic_tilting(s.algebra), t.basic_cotilting(s.algebra), rng);
  bool t_in_nabla = true;
  for (const auto& ti : t.tilting) t_in_nabla = t_in_nabla && in_filtration_category(ti, Family::Nabla, s).member;
  log.expect(!t_iso_c, "T not isomorphic to C");
  log.expect(!t_in_nabla, "some T(i) outside F(Nabla)");
  auto tr = verify(PropertyId::Main, input_of("rad-square-zero-2v", ex), VerifyOptions{});
  log.expect(tr.status == Status::Pass, std::string("MAIN ") + status_name(tr.status));
}

void criterion_3(Log& log) {
  PrimeField k;
  Rng rng(3);
  auto ex = example("recollement-3v", k);
  auto s = standard_family(ex.algebra, ex.order);
  auto id = injective_dimension(regular_module(s.algebra), 12);
  log.expect(id.value == std::optional<std::size_t>(2), "injdim A_A = 2: " + dims(id));
  auto p3 = projective_module(s.algebra, 2);
  log.expect(iso(s.delta[2], p3, rng), "Delta(3) = e3 A");
  log.expect(iso(s.proper_delta[2], p3, rng), "ProperDelta(3) = e3 A");
  auto pd2 = injective_dimension(s.proper_delta[1], 12);
  log.expect(dims(pd2) == "AboveCutoff(12)", "injdim ProperDelta(2): " + dims(pd2));
}

void criterion_4(Log& log) {
  PrimeField k;
  Rng rng(4);
  auto ex = example("gigs-kxy", k);
  auto c = classify(ex.algebra, rng, 12);
  log.expect(c.gorenstein.dim.value == std::optional<std::size_t>(4), "gordim 4: " + dims(c.gorenstein.dim));
  log.expect(c.dominant.value == std::optional<std::size_t>(2), "domdim 2: " + dims(c.dominant));
  log.expect(dims(c.global) == "AboveCutoff(12)", "gldim: " + dims(c.global));
  log.expect(c.gendo_symmetric == Verdict::Yes, "gendo-symmetric");

  auto s = standard_family(ex.algebra, ex.order);
  auto t = characteristic_tilting(s, rng, 12);
  log.expect(t.pd.value == std::optional<std::size_t>(2), "pd T = 2: " + dims(t.pd));
  auto dt = dominant_dim(t.basic_tilting(s.algebra), 12);
  log.expect(dt.value == std::optional<std::size_t>(1), "domdim T = 1: " + dims(dt));
  auto in = input_of("gigs-kxy", ex);
  auto mz = verify(PropertyId::Mazov, in, VerifyOptions{});
  log.expect(mz.status == Status::Pass, std::string("MAZOV ") + status_name(mz.status));
  auto dd = verify(PropertyId::DomdimT, in, VerifyOptions{});
  log.expect(dd.status == Status::Pass, std::string("DOMDIM_T ") + status_name(dd.status));
}

void criterion_5(Log& log) {
  PrimeField k;
  Rng rng(5);
  const JordanType j{3, {1}};
  auto c = centraliser_algebra(j, k);
  log.expect(c.algebra->dim() == 6, "dim 6");
  std::vector<std::size_t> len;
  for (const auto& m : c.summands) len.push_back(m.dim());
  std::vector<std::vector<std::size_t>> table(len.size(), std::vector<std::size_t>(len.size()));
  for (std::size_t a = 0; a < len.size(); ++a)
    for (std::size_t b = 0; b < len.size(); ++b) table[a][b] = std::min(len[a], len[b]);
  log.expect(c.algebra->cartan() == table, "Cartan matrix is the min table");

  auto cls = classify(c.algebra, rng, 12);
  log.expect(cls.gorenstein.dim.value == std::optional<std::size_t>(2), "gordim 2");
  log.expect(cls.dominant.value == std::optional<std::size_t>(2), "domdim 2");
  log.expect(cls.minimal_auslander_gorenstein, "minimal Auslander-Gorenstein");

  // End_U(U + Omega(U/J)) = End_U(U + U/J^2): min table on lengths {3, 2}
  std::size_t expected = 0;
  for (std::size_t a : {3u, 2u})
    for (std::size_t b : {3u, 2u}) expected += std::min(a, b);
  auto s = standard_family(c.algebra, c.order);
  auto r = ringel_dual(s, characteristic_tilting(s, rng, 12));
  log.expect(r->dim() == expected, "Ringel dual dim " + std::to_string(r->dim()) + " vs " + std::to_string(expected));
  const std::size_t d = *cls.gorenstein.dim.value / 2;
  log.expect(d == 1, "d = 1");
  VerifyInput<PrimeField> in{"cent" + j.to_string(), c.algebra, c.order, j};
  auto tr = verify(PropertyId::RingelGigs, in, VerifyOptions{});
  log.expect(tr.status == Status::Pass, std::string("RINGEL_GIGS ") + status_name(tr.status));
}

void criterion_6(Log& log) {
  PrimeField k;
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& j : jordan_types(n)) {
      auto c = centraliser_algebra(j, k);
      VerifyInput<PrimeField> in{"cent" + j.to_string(), c.algebra, c.order, j};
      auto tr = verify(PropertyId::SelfDualCent, in, VerifyOptions{});
      log.expect(tr.status == Status::Pass, j.to_string() + " SELF_DUAL_CENT " + status_name(tr.status));
    }
  const std::vector<std::pair<JordanType, bool>> named{
      {{2, {1}}, true}, {{4, {1, 3}}, true}, {{3, {1}}, false}, {{3, {2}}, false}};
  Rng rng(6);
  for (const auto& [j, self_dual] : named) {
    log.expect(centraliser_selfdual_criterion(j) == self_dual, j.to_string() + " criterion");
    auto c = centraliser_algebra(j, k);
    auto s = standard_family(c.algebra, c.order);
    auto r = ringel_dual(s, characteristic_tilting(s, rng));
    log.expect(invariant_isomorphic(s.algebra, r, rng).isomorphic == self_dual, j.to_string() + " Ringel self-duality");
  }
}

void criterion_7(Log& log) {
  PrimeField k;
  Rng rng(7);
  auto a2 = schur_block(2, k), a3 = schur_block(3, k);
  log.expect(global_dim(a2).value == std::optional<std::size_t>(2), "A2 gldim");
  log.expect(dominant_dim(a2).value == std::optional<std::size_t>(2), "A2 domdim");
  log.expect(global_dim(a3).value == std::optional<std::size_t>(4), "A3 gldim");
  log.expect(dominant_dim(a3).value == std::optional<std::size_t>(4), "A3 domdim");
  for (std::size_t n = 1; n <= 2; ++n) {
    auto b = brauer_block(n, k);
    auto res = min_proj_resolution(simple_module(b, n - 1), n);
    const bool ok = res.syzygies.size() > n && iso(res.syzygies[n], simple_module(b, 0), rng);
    log.expect(ok, "B" + std::to_string(n) + ": Omega^n(S_n) = S_1");
  }
  for (std::size_t n = 1; n <= 3; ++n)
    log.expect(is_symmetric(brauer_block(n, k), rng) == Verdict::Yes, "B" + std::to_string(n) + " symmetric");
  for (std::size_t n = 1; n <= 2; ++n) {
    auto ex = named_example(ExampleSpec{ExampleId::SchurA, n + 1}, k);
    auto s = standard_family(ex.algebra, ex.order);
    auto r = ringel_dual(s, characteristic_tilting(s, rng));
    log.expect(invariant_isomorphic(s.algebra, r, rng).isomorphic, "A" + std::to_string(n + 1) + " Ringel self-dual");
  }
}

struct SuiteRuns {
  std::optional<SuiteReport> fp, f101, q;
};

SuiteRuns& suite_runs() {
  static SuiteRuns r;
  return r;
}

constexpr std::uint64_t kSuiteSeed = 2024;

void criterion_8(Log& log) {
  PrimeField k;
  auto& runs = suite_runs();
  if (!runs.fp) runs.fp = run_suite(k, kSuiteSeed);
  std::map<std::pair<std::string, std::string>, Status> table;
  for (const auto& v : runs.fp->verdicts) table[{v.input, v.property}] = v.status;

  for (const auto& e : suite_catalogue()) {
    auto la = build_entry(e, k);
    auto s = standard_family(la.algebra, la.order);
    const bool properly = s.verdict.properly;
    const bool gorenstein = properly && gorenstein_dim(la.algebra).dim.finite();
    if (gorenstein)
      log.expect(table.at({e.label, "FROB_ENDO"}) == Status::Pass, e.label + " FROB_ENDO");
    const bool cent_like = e.jordan.has_value() || e.label == "example:gigs-kxy" || e.label == "example:cent-3-1";
    if (cent_like) log.expect(table.at({e.label, "GP_FILT"}) == Status::Pass, e.label + " GP_FILT");
    if (properly) log.expect(table.at({e.label, "PFIN_CAP"}) == Status::Pass, e.label + " PFIN_CAP");
  }
}

// Random modules over one algebra: building blocks, direct sums and
// quotients of projectives by random cyclic submodules.
template <class K>
struct Pool {
  std::string label;
  StratifiedData<K> s;
  std::vector<Module<K>> base;

  Module<K> random_module(Rng& rng) const {
    const auto& a = s.algebra;
    switch (rng() % 3) {
      case 0: return base[rng() % base.size()];
      case 1: return direct_sum(a, {base[rng() % base.size()], base[rng() % base.size()]});
      default: {
        auto p = projective_module(a, rng() % a->num_vertices());
        Vec<K> v(p.dim());
        for (auto& x : v) x = a->field().from_int(static_cast<std::int64_t>(rng() % 5) - 2);
        auto sub = generated_submodule(p, Matrix<K>::from_rows(a->field(), {v}, p.dim()));
        return quotient_module(p, sub.inclusion).module;
      }
    }
  }
};

template <class K>
std::vector<Pool<K>> build_pools(const K& k) {
  std::vector<Pool<K>> out;
  for (const auto& e : suite_catalogue(4)) {
    auto la = build_entry(e, k);
    Pool<K> p{e.label, standard_family(la.algebra, la.order), {}};
    auto cat = module_catalogue(p.s.algebra);
    for (auto* v : {&cat.projectives, &cat.simples, &cat.injectives}) p.base.insert(p.base.end(), v->begin(), v->end());
    if (p.s.verdict.properly)
      for (auto* v : {&p.s.delta, &p.s.nabla, &p.s.proper_delta, &p.s.proper_nabla})
        p.base.insert(p.base.end(), v->begin(), v->end());
    for (const auto& sm : cat.simples) {
      auto r = min_proj_resolution(sm, 2);
      for (std::size_t i = 1; i < r.syzygies.size(); ++i)
        if (r.syzygies[i].dim() > 0) p.base.push_back(r.syzygies[i]);
    }
    out.push_back(std::move(p));
  }
  return out;
}

template <class K>
std::string instance_check(const Pool<K>& p, std::size_t kind, Rng& rng) {
  const auto& a = p.s.algebra;
  switch (kind) {
    case 0: {
      auto m = p.random_module(rng), n = p.random_module(rng);
      const std::size_t i = 1 + rng() % 2;
      const auto lhs = ext_dim(m, n, i), rhs = ext_dim(dual_module(n), dual_module(m), i);
      if (lhs != rhs) return "Ext duality " + std::to_string(lhs) + " vs " + std::to_string(rhs);
      return {};
    }
    case 1: {
      if (!p.s.verdict.properly) return instance_check(p, 0, rng);
      auto m = p.random_module(rng);
      for (Family f : {Family::Delta, Family::Nabla}) {
        auto r = in_filtration_category(m, f, p.s);
        if (!r.ext_route || !r.peel_route) return std::string("route missing for ") + family_name(f);
        if (*r.ext_route != *r.peel_route) return std::string("routes disagree for ") + family_name(f);
      }
      return {};
    }
    case 2: {
      auto m = p.random_module(rng);
      auto parts = decompose(m, rng);
      std::vector<Module<K>> copies;
      std::vector<Matrix<K>> images;
      for (const auto& sm : parts)
        for (std::size_t c = 0; c < sm.multiplicity; ++c) {
          copies.push_back(sm.module);
          images.push_back(sm.inclusions.at(c));
          if (!is_homomorphism(sm.module, m, sm.inclusions[c])) return "summand inclusion is not a homomorphism";
        }
      std::size_t total = 0;
      for (const auto& c : copies) total += c.dim();
      if (total != m.dim()) return "summand dimensions do not add up";
      if (rank(vstack(a->field(), images, m.dim())) != m.dim()) return "inclusions do not span";
      if (!iso(direct_sum(a, copies), m, rng)) return "reassembly not isomorphic";
      return {};
    }
    default: {
      const auto cartan = a->cartan();
      const std::size_t i = rng() % a->num_vertices(), j = rng() % a->num_vertices();
      const auto h = hom_space(projective_module(a, j), projective_module(a, i)).dim();
      if (h != cartan[i][j]) return "Cartan entry differs from dim Hom(P(j), P(i))";
      if (projective_module(a, i).dimension_vector()[j] != cartan[i][j]) return "Cartan entry differs from P(i) e_j";
      return {};
    }
  }
}

void criterion_9(Log& log) {
  PrimeField k;
  const auto pools = build_pools(k);
  Rng rng(9);
  for (std::size_t n = 0; n < 1000; ++n) {
    const auto& p = pools[rng() % pools.size()];
    const std::size_t kind = n % 4;
    std::string err;
    try {
      err = instance_check(p, kind, rng);
    } catch (const std::exception& e) {
      err = e.what();
    }
    log.expect(err.empty(), "instance " + std::to_string(n) + " on " + p.label + ": " + err);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void criterion_10(Log& log) {
  const std::string cli = STRATIKIT_CLI_PATH;
  std::vector<std::string> outs;
  for (int run = 0; run < 2; ++run) {
    const std::string path = "acceptance_suite_" + std::to_string(run) + ".json";
    const std::string cmd = "\"" + cli + "\" suite --seed 11 -o " + path;
    const int rc = std::system(cmd.c_str());
    log.expect(rc == 0, "suite run exit code " + std::to_string(rc));
    outs.push_back(read_file(path));
    std::remove(path.c_str());
  }
  log.expect(!outs[0].empty() && outs[0] == outs[1], "suite reports byte-identical");

  auto& runs = suite_runs();
  if (!runs.fp) runs.fp = run_suite(PrimeField(), kSuiteSeed);
  runs.f101 = run_suite(PrimeField(101), kSuiteSeed);
  runs.q = run_suite(RationalField(), kSuiteSeed);
  auto table = [](const SuiteReport& r) {
    std::vector<std::tuple<std::string, std::string, Status>> t;
    for (const auto& v : r.verdicts) t.emplace_back(v.input, v.property, v.status);
    return t;
  };
  log.expect(table(*runs.fp) == table(*runs.f101), "verdicts F_32003 vs F_101");
  log.expect(table(*runs.fp) == table(*runs.q), "verdicts F_32003 vs Q");
  auto manifest = [](const SuiteReport& r) {
    std::vector<std::string> t;
    for (const auto& m : r.manifest) t.push_back(m.input + m.key + m.observed);
    return t;
  };
  log.expect(manifest(*runs.fp) == manifest(*runs.q), "manifest observations F_32003 vs Q");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Log&)>>> criteria{
      {"1 Hom dimensions of chain modules equal min(k,t)", criterion_1},
      {"2 rad-square example", criterion_2},
      {"3 recollement example", criterion_3},
      {"4 gigs-kxy example", criterion_4},
      {"5 cent(3,{1}) example", criterion_5},
      {"6 centraliser self-duality sweep", criterion_6},
      {"7 Schur and Brauer blocks", criterion_7},
      {"8 property suites on the catalogue", criterion_8},
      {"9 randomized consistency battery", criterion_9},
      {"10 determinism across runs and fields", criterion_10},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Log log;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      run(log);
    } catch (const std::exception& e) {
      log.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = log.failures.empty();
    failed += !ok;
    std::cout << (ok ? "PASS " : "FAIL ") << name << " (" << log.checks << " checks, " << std::fixed
              << std::setprecision(1) << secs << " s)\n";
    for (std::size_t i = 0; i < log.failures.size() && i < 10; ++i) std::cout << "    " << log.failures[i] << "\n";
    std::cout.flush();
  }
  return failed == 0 ? 0 : 1;
}
