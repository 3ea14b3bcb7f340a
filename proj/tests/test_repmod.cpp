#include <catch_amalgamated.hpp>

#include "stratikit/hom.hpp"
#include "stratikit/quiver.hpp"

using namespace stratikit;

namespace {

template <class K>
Relation<K> rel(const K& k, std::vector<std::pair<long, std::vector<std::string>>> terms) {
  Relation<K> r;
  for (auto& [c, p] : terms) r.push_back({k.from_int(c), p});
  return r;
}

template <class K>
AlgebraPtr<K> truncated_poly(const K& k, int n) {
  Quiver q{{"1"}, {{"x", 0, 0}}};
  std::vector<std::string> p(n, "x");
  return compile_bqa<K>(q, {rel(k, {{1, p}})}, k);
}

template <class K>
AlgebraPtr<K> loop_square(const K& k) {
  Quiver q{{"1", "2"}, {{"alpha", 0, 0}, {"beta", 1, 0}}};
  return compile_bqa<K>(q, {rel(k, {{1, {"alpha", "alpha"}}}), rel(k, {{1, {"beta", "alpha"}}})}, k);
}

template <class K>
AlgebraPtr<K> cent_presentation(const K& k) {
  Quiver q{{"1", "2"}, {{"b1", 0, 1}, {"b2", 1, 0}, {"b3", 1, 1}}};
  return compile_bqa<K>(q,
                        {rel(k, {{1, {"b1", "b2"}}}), rel(k, {{1, {"b1", "b3"}}}), rel(k, {{1, {"b3", "b2"}}}),
                         rel(k, {{1, {"b2", "b1"}}, {-1, {"b3", "b3"}}})},
                        k);
}

// U / U x^t as a quotient of the regular module.
template <class K>
Module<K> truncation(const AlgebraPtr<K>& a, std::size_t t) {
  auto u = regular_module(a);
  auto series = radical_series(u);
  return quotient_module(u, series[t].basis()).module;
}

// Oracle: brute-force Hom dimension by solving f R(g) = R'(g) f for all generators.
template <class K>
std::size_t brute_hom_dim(const Module<K>& m, const Module<K>& n) {
  const K& k = m.field();
  const std::size_t dm = m.dim(), dn = n.dim();
  const std::size_t gens = m.gens().size();
  Matrix<K> eqs(k, gens * dm * dn, dm * dn);
  std::size_t row = 0;
  for (std::size_t g = 0; g < gens; ++g)
    for (std::size_t i = 0; i < dm; ++i)
      for (std::size_t j = 0; j < dn; ++j, ++row) {
        // (R_M(g) F)_{ij} - (F R_N(g))_{ij}
        for (std::size_t s = 0; s < dm; ++s) {
          auto& x = eqs(row, s * dn + j);
          x = k.add(x, m.gen(g)(i, s));
        }
        for (std::size_t s = 0; s < dn; ++s) {
          auto& x = eqs(row, i * dn + s);
          x = k.sub(x, n.gen(g)(s, j));
        }
      }
  return dm * dn - rank(eqs);
}

}  // namespace

TEMPLATE_TEST_CASE("hom between truncations of a truncated polynomial ring", "", PrimeField, RationalField) {
  TestType k;
  auto a = truncated_poly(k, 5);
  for (std::size_t s = 1; s <= 5; ++s)
    for (std::size_t t = 1; t <= 5; ++t) {
      auto ms = truncation(a, s);
      auto mt = truncation(a, t);
      auto h = hom_space(ms, mt);
      CHECK(h.dim() == std::min(s, t));
      for (const auto& f : h.basis()) CHECK(is_homomorphism(ms, mt, f));
    }
}

TEMPLATE_TEST_CASE("hom dimensions agree with brute force", "", PrimeField, RationalField) {
  TestType k;
  for (auto a : {loop_square(k), cent_presentation(k)}) {
    auto cat = module_catalogue(a);
    std::vector<Module<TestType>> all;
    for (auto* v : {&cat.projectives, &cat.simples, &cat.injectives})
      for (auto& m : *v) {
        CHECK(m.is_valid());
        all.push_back(m);
      }
    for (const auto& m : all)
      for (const auto& n : all) CHECK(hom_space(m, n).dim() == brute_hom_dim(m, n));
  }
}

TEST_CASE("hom from a simple into a projective") {
  RationalField k;
  auto a = loop_square(k);
  auto s1 = simple_module(a, 0);
  auto p1 = projective_module(a, 0);
  CHECK(hom_space(s1, p1).dim() == 1);
  // Cartan entries c_ij = dim Hom(P(i), P(j)) with P(i) = e_i A.
  auto c = a->cartan();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(hom_space(projective_module(a, i), projective_module(a, j)).dim() == c[j][i]);
}

TEMPLATE_TEST_CASE("coordinates invert combinations", "", PrimeField, RationalField) {
  TestType k;
  auto a = cent_presentation(k);
  auto u = regular_module(a);
  auto h = hom_space(u, u);
  CHECK(h.dim() == a->dim());
  Rng rng(7);
  Vec<TestType> c(h.dim());
  for (auto& x : c) x = k.random(rng);
  auto back = h.coordinates(h.combination(c));
  REQUIRE(back);
  CHECK(*back == c);
  CHECK(!h.coordinates(Matrix<TestType>(k, u.dim(), u.dim() + 1)));
}

TEMPLATE_TEST_CASE("endomorphisms and decomposition", "", PrimeField, RationalField) {
  TestType k;
  auto a = truncated_poly(k, 3);
  auto u = regular_module(a);
  auto s = simple_module(a, 0);
  auto sum = direct_sum(a, {u, s});
  CHECK(hom_space(sum, sum).dim() == 6);
  Rng rng(11);
  auto parts = decompose(sum, rng);
  REQUIRE(parts.size() == 2);
  std::size_t total = 0;
  for (const auto& p : parts) {
    total += p.module.dim() * p.multiplicity;
    for (const auto& inc : p.inclusions) CHECK(is_homomorphism(p.module, sum, inc));
  }
  CHECK(total == sum.dim());
  // The copies span the whole module.
  std::vector<Matrix<TestType>> blocks;
  for (const auto& p : parts)
    for (const auto& inc : p.inclusions) blocks.push_back(inc);
  CHECK(rank(vstack(k, blocks, sum.dim())) == sum.dim());

  auto twice = direct_sum(a, {s, s, u});
  auto groups = decompose(twice, rng);
  REQUIRE(groups.size() == 2);
  std::size_t mult_s = 0;
  for (const auto& g : groups)
    if (g.module.dim() == 1) mult_s = g.multiplicity;
  CHECK(mult_s == 2);

  // repeated copies of a non-simple summand embed from the representative
  auto uu = direct_sum(a, {u, truncation(a, 2), u, truncation(a, 2)});
  for (const auto& g : decompose(uu, rng)) {
    CHECK(g.multiplicity == 2);
    for (const auto& inc : g.inclusions) {
      CHECK(is_homomorphism(g.module, uu, inc));
      CHECK(rank(inc) == g.module.dim());
    }
  }
}

TEMPLATE_TEST_CASE("isomorphism verdicts", "", PrimeField, RationalField) {
  TestType k;
  auto a = cent_presentation(k);
  Rng rng(3);
  auto p2 = projective_module(a, 1);
  auto u = regular_module(a);
  auto sub = generated_submodule(u, Matrix<TestType>::from_rows(k, {a->idempotents()[1]}, a->dim()));
  auto iso = is_isomorphic(p2, sub.module, rng);
  CHECK(iso.verdict == Verdict::Yes);
  REQUIRE(iso.witness);
  CHECK(is_homomorphism(p2, sub.module, *iso.witness));
  CHECK(is_isomorphic(p2, injective_module(a, 1), rng).verdict == Verdict::Yes);
  CHECK(is_isomorphic(projective_module(a, 0), injective_module(a, 0), rng).verdict == Verdict::No);
  CHECK(is_isomorphic(simple_module(a, 0), simple_module(a, 1), rng).verdict == Verdict::No);
}

TEST_CASE("isomorphism over a tiny field uses exhaustive search") {
  PrimeField k(2);
  auto a = truncated_poly(k, 2);
  Rng rng(1);
  auto u = regular_module(a);
  auto v = direct_sum(a, {simple_module(a, 0), simple_module(a, 0)});
  auto res = is_isomorphic(u, v, rng);
  CHECK(res.verdict == Verdict::No);
}

TEMPLATE_TEST_CASE("endomorphism algebra of projectives recovers the algebra", "", PrimeField, RationalField) {
  TestType k;
  auto a = cent_presentation(k);
  auto e = endomorphism_algebra<TestType>({projective_module(a, 0), projective_module(a, 1)});
  CHECK(e->dim() == a->dim());
  CHECK(e->cartan() == a->cartan());
  CHECK(e->table().is_associative());
}

TEMPLATE_TEST_CASE("trace of the first projective in the regular module", "", PrimeField, RationalField) {
  TestType k;
  auto a = cent_presentation(k);
  auto tr = trace_submodule(projective_module(a, 0), regular_module(a));
  // A e_1 A is spanned by paths through vertex 1.
  CHECK(tr.module.dim() == 4);
}
