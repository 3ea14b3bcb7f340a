#include <catch_amalgamated.hpp>

#include "stratikit/families.hpp"
#include "stratikit/quiver.hpp"
#include "stratikit/strat.hpp"

using namespace stratikit;

namespace {

template <class K>
NamedExample<K> example(const char* id, const K& k) {
  return named_example(parse_example_id(id), k);
}

template <class K>
bool iso(const Module<K>& m, const Module<K>& n, Rng& rng) {
  return is_isomorphic(m, n, rng).verdict == Verdict::Yes;
}

// Cartan matrix entries c_ij = dim e_i A e_j, read from projective dimension vectors.
template <class K>
std::vector<std::vector<std::size_t>> cartan_from_projectives(const AlgebraPtr<K>& a) {
  std::vector<std::vector<std::size_t>> c;
  for (std::size_t i = 0; i < a->num_vertices(); ++i) c.push_back(projective_module(a, i).dimension_vector());
  return c;
}

}  // namespace

TEMPLATE_TEST_CASE("rad-square example: standard modules", "", PrimeField, RationalField) {
  TestType k;
  Rng rng(1);
  auto ex = example("rad-square-zero-2v", k);
  auto s = standard_family(ex.algebra, ex.order);
  CHECK(s.verdict.properly);
  CHECK(iso(s.delta[0], projective_module(s.algebra, 0), rng));
  CHECK(iso(s.proper_delta[0], simple_module(s.algebra, 0), rng));
  // the last position always has Delta = P
  const auto n = s.size();
  CHECK(iso(s.delta[n - 1], projective_module(s.algebra, n - 1), rng));
}

TEMPLATE_TEST_CASE("standard modules have the expected tops and socles", "", PrimeField, RationalField) {
  TestType k;
  for (const char* id : {"recollement-3v", "cent-3-1", "gigs-kxy"}) {
    auto ex = example(id, k);
    auto s = standard_family(ex.algebra, ex.order);
    REQUIRE(s.verdict.properly);
    for (std::size_t i = 0; i < s.size(); ++i) {
      auto top = radical_top_socle(s.delta[i]);
      std::vector<std::size_t> expect(s.size(), 0);
      expect[i] = 1;
      CHECK(top.top == expect);
      CHECK(radical_top_socle(s.nabla[i]).socle == expect);
      CHECK(radical_top_socle(s.proper_delta[i]).top == expect);
      CHECK(radical_top_socle(s.proper_nabla[i]).socle == expect);
      // composition factors of Delta(i) other than the top sit at lower positions
      auto dv = s.delta[i].dimension_vector();
      for (std::size_t j = i + 1; j < s.size(); ++j) CHECK(dv[j] == 0);
      CHECK(dv[i] >= 1);
    }
  }
}

TEMPLATE_TEST_CASE("BGG reciprocity: Delta multiplicities of projectives", "", PrimeField, RationalField) {
  TestType k;
  for (const char* id : {"rad-square-zero-2v", "recollement-3v", "cent-3-1", "gigs-kxy"}) {
    auto ex = example(id, k);
    auto s = standard_family(ex.algebra, ex.order);
    REQUIRE(s.verdict.properly);
    for (std::size_t i = 0; i < s.size(); ++i) {
      auto mult = delta_multiplicities(projective_module(s.algebra, i), s);
      for (std::size_t j = 0; j < s.size(); ++j) CHECK(mult[j] == s.proper_nabla[j].dimension_vector()[i]);
    }
  }
}

TEMPLATE_TEST_CASE("filtration routes agree on the sampled modules", "", PrimeField, RationalField) {
  TestType k;
  for (const char* id : {"rad-square-zero-2v", "recollement-3v", "cent-3-1"}) {
    auto ex = example(id, k);
    auto s = standard_family(ex.algebra, ex.order);
    auto cat = module_catalogue(s.algebra);
    std::vector<Module<TestType>> ms;
    for (auto* v : {&cat.projectives, &cat.simples, &cat.injectives, &s.delta, &s.nabla, &s.proper_delta})
      ms.insert(ms.end(), v->begin(), v->end());
    for (const auto& m : ms)
      for (Family f : {Family::Delta, Family::Nabla}) {
        auto r = in_filtration_category(m, f, s);
        REQUIRE(r.ext_route.has_value());
        REQUIRE(r.peel_route.has_value());
        CHECK(*r.ext_route == *r.peel_route);
        CHECK(r.member == *r.ext_route);
      }
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(in_filtration_category(projective_module(s.algebra, i), Family::Delta, s).member);
      CHECK(in_filtration_category(injective_module(s.algebra, i), Family::Nabla, s).member);
      CHECK(in_filtration_category(s.proper_delta[i], Family::ProperDelta, s).member);
    }
  }
}

TEMPLATE_TEST_CASE("characteristic tilting summands", "", PrimeField, RationalField) {
  TestType k;
  Rng rng(7);
  for (const char* id : {"rad-square-zero-2v", "recollement-3v", "cent-3-1"}) {
    auto ex = example(id, k);
    auto s = standard_family(ex.algebra, ex.order);
    auto t = characteristic_tilting(s, rng);
    REQUIRE(t.tilting.size() == s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(in_filtration_category(t.tilting[i], Family::Delta, s).member);
      CHECK(in_filtration_category(t.tilting[i], Family::ProperNabla, s).member);
      CHECK(in_filtration_category(t.cotilting[i], Family::Nabla, s).member);
      CHECK(in_filtration_category(t.cotilting[i], Family::ProperDelta, s).member);
      // Delta(i) embeds in T(i) with the top weight at position i
      CHECK(t.tilting[i].dimension_vector()[i] >= s.delta[i].dimension_vector()[i]);
    }
    auto tt = t.basic_tilting(s.algebra);
    for (std::size_t e = 1; e <= 3; ++e) CHECK(ext_dim(tt, tt, e) == 0);
  }
}

TEST_CASE("ringel dual of the centraliser example") {
  PrimeField k;
  Rng rng(3);
  auto ex = example("cent-3-1", k);
  auto s = standard_family(ex.algebra, ex.order);
  auto t = characteristic_tilting(s, rng);
  auto r = ringel_dual(s, t);
  CHECK(r->dim() == 9);
  CHECK(r->num_vertices() == s.size());
  CHECK(standard_family(r).verdict.properly);
}

TEST_CASE("classification of the named examples") {
  PrimeField k;
  Rng rng(11);
  auto rad = classify(example("rad-square-zero-2v", k).algebra, rng);
  CHECK_FALSE(rad.gorenstein.dim.finite());
  CHECK_FALSE(rad.selfinjective);

  auto cent = classify(example("cent-3-1", k).algebra, rng);
  CHECK(cent.gorenstein.dim.value == std::optional<std::size_t>(2));
  CHECK(cent.dominant.value == std::optional<std::size_t>(2));
  CHECK(cent.gendo_symmetric == Verdict::Yes);
  CHECK(cent.minimal_auslander_gorenstein);

  auto gigs = classify(example("gigs-kxy", k).algebra, rng);
  CHECK(gigs.gorenstein.dim.value == std::optional<std::size_t>(4));
  CHECK(gigs.dominant.value == std::optional<std::size_t>(2));
  CHECK_FALSE(gigs.minimal_auslander_gorenstein);

  auto u = truncated_polynomial(k, 3);
  auto cu = classify(u, rng);
  CHECK(cu.selfinjective);
  CHECK(cu.frobenius == Verdict::Yes);
  CHECK(cu.symmetric == Verdict::Yes);

  auto b1 = classify(brauer_block(1, k), rng);
  CHECK(b1.symmetric == Verdict::Yes);
}

TEST_CASE("a non-symmetric Frobenius algebra") {
  // cyclic quiver 1 <-> 2 with all paths of length two zero: Nakayama permutes the vertices
  PrimeField k;
  Rng rng(5);
  Quiver q{{"1", "2"}, {{"a", 0, 1}, {"b", 1, 0}}};
  std::vector<Relation<PrimeField>> rel{{{k.one(), {"a", "b"}}}, {{k.one(), {"b", "a"}}}};
  auto a = compile_bqa<PrimeField>(q, rel, k);
  CHECK(is_frobenius(a, rng) == Verdict::Yes);
  CHECK(is_symmetric(a, rng) == Verdict::No);
}

TEMPLATE_TEST_CASE("invariant isomorphism detects reordering", "", PrimeField, RationalField) {
  TestType k;
  Rng rng(2);
  auto a = example("recollement-3v", k).algebra;
  auto b = a->reordered({2, 0, 1});
  auto r = invariant_isomorphic(a, b, rng);
  CHECK(r.isomorphic);
  CHECK(r.permutation.size() == 3);
  auto c = example("cent-3-1", k).algebra;
  CHECK_FALSE(invariant_isomorphic(a, c, rng).isomorphic);
}

TEST_CASE("order search is limited to seven idempotents") {
  PrimeField k;
  Quiver q;
  for (int i = 0; i < 8; ++i) q.vertices.push_back(std::to_string(i + 1));
  auto a = compile_bqa<PrimeField>(q, {}, k);
  try {
    find_stratifying_orders(a);
    FAIL("expected TooManyIdempotents");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooManyIdempotents);
  }
}

TEST_CASE("order search on a hereditary algebra") {
  PrimeField k;
  Quiver q{{"1", "2"}, {{"a", 0, 1}}};
  auto a = compile_bqa<PrimeField>(q, {}, k);
  auto orders = find_stratifying_orders(a);
  REQUIRE(orders.size() == 2);
  // quasi-hereditary for every order
  for (const auto& o : orders) CHECK(o.verdict.properly);
}

TEST_CASE("Brauer block with two projectives is not stratified") {
  PrimeField k;
  auto b = brauer_block(2, k);
  for (const auto& o : find_stratifying_orders(b)) CHECK_FALSE(o.verdict.standardly);
}

TEMPLATE_TEST_CASE("Cartan matrix agrees with projective dimension vectors", "", PrimeField, RationalField) {
  TestType k;
  for (const char* id : {"rad-square-zero-2v", "recollement-3v", "cent-3-1", "gigs-kxy"}) {
    auto a = example(id, k).algebra;
    CHECK(a->cartan() == cartan_from_projectives(a));
    std::size_t total = 0;
    for (const auto& row : a->cartan())
      for (auto c : row) total += c;
    CHECK(total == a->dim());
  }
}
