#include <catch_amalgamated.hpp>

#include "stratikit/families.hpp"
#include "stratikit/quiver.hpp"

using namespace stratikit;

namespace {

template <class K>
RelationTerm<K> path(const K& k, long c, std::vector<std::string> p) {
  return {k.from_int(c), std::move(p)};
}

// 1 -> 2 -> 3 with no relations.
template <class K>
AlgebraPtr<K> linear_a3(const K& k) {
  Quiver q{{"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}}};
  return compile_bqa<K>(q, {}, k);
}

template <class K>
AlgebraPtr<K> loop_square(const K& k) {
  Quiver q{{"1", "2"}, {{"alpha", 0, 0}, {"beta", 1, 0}}};
  return compile_bqa<K>(q, {{path(k, 1, {"alpha", "alpha"})}, {path(k, 1, {"beta", "alpha"})}}, k);
}

template <class K>
std::vector<Module<K>> small_modules(const AlgebraPtr<K>& a) {
  auto cat = module_catalogue(a);
  std::vector<Module<K>> out;
  for (auto* v : {&cat.projectives, &cat.simples, &cat.injectives}) out.insert(out.end(), v->begin(), v->end());
  return out;
}

}  // namespace

TEMPLATE_TEST_CASE("Ext^1 and Ext^2 between simples count arrows and relations", "", PrimeField, RationalField) {
  TestType k;
  auto a = loop_square(k);
  auto s1 = simple_module(a, 0), s2 = simple_module(a, 1);
  // arrows: alpha 1->1, beta 2->1
  CHECK(ext_dim(s1, s1, 1) == 1);
  CHECK(ext_dim(s2, s1, 1) == 1);
  CHECK(ext_dim(s1, s2, 1) == 0);
  CHECK(ext_dim(s2, s2, 1) == 0);
  // relations: alpha alpha at 1->1, beta alpha at 2->1
  CHECK(ext_dim(s1, s1, 2) == 1);
  CHECK(ext_dim(s2, s1, 2) == 1);
  CHECK(ext_dim(s1, s2, 2) == 0);
}

TEMPLATE_TEST_CASE("Ext^0 is Hom", "", PrimeField, RationalField) {
  TestType k;
  auto a = named_example(parse_example_id("recollement-3v"), k).algebra;
  auto ms = small_modules(a);
  for (const auto& m : ms)
    for (const auto& n : ms) CHECK(ext_dim(m, n, 0) == hom_space(m, n).dim());
}

TEMPLATE_TEST_CASE("Ext duality against the opposite algebra", "", PrimeField, RationalField) {
  TestType k;
  for (const char* id : {"rad-square-zero-2v", "recollement-3v", "cent-3-1"}) {
    auto a = named_example(parse_example_id(id), k).algebra;
    auto ms = small_modules(a);
    for (const auto& m : ms)
      for (const auto& n : ms)
        for (std::size_t i = 1; i <= 3; ++i)
          CHECK(ext_dim(m, n, i) == ext_dim(dual_module(n), dual_module(m), i));
  }
}

TEST_CASE("minimal resolutions have vanishing consecutive differentials") {
  PrimeField k;
  auto a = named_example(parse_example_id("recollement-3v"), k).algebra;
  for (const auto& m : small_modules(a)) {
    auto res = min_proj_resolution(m, 4);
    for (std::size_t i = 2; i < res.terms.size(); ++i) {
      auto d = matmul(res.differential(i), res.differential(i - 1));
      CHECK(rank(d) == 0);
    }
    for (std::size_t i = 0; i < res.terms.size(); ++i) CHECK(is_projective(res.terms[i]));
  }
}

TEST_CASE("hereditary algebra has global dimension one") {
  PrimeField k;
  auto a = linear_a3(k);
  CHECK(global_dim(a).value == std::optional<std::size_t>(1));
  CHECK(projective_dimension(simple_module(a, 2)).value == std::optional<std::size_t>(0));
  CHECK(projective_dimension(simple_module(a, 0)).value == std::optional<std::size_t>(1));
  CHECK(ext_dim(simple_module(a, 0), simple_module(a, 1), 1) == 1);
  CHECK(ext_dim(simple_module(a, 0), simple_module(a, 2), 1) == 0);
}

TEST_CASE("truncated polynomial rings are selfinjective of infinite global dimension") {
  PrimeField k;
  for (std::size_t n = 2; n <= 5; ++n) {
    auto u = truncated_polynomial(k, n);
    auto g = gorenstein_dim(u);
    CHECK(g.dim.value == std::optional<std::size_t>(0));
    CHECK_FALSE(global_dim(u).finite());
    CHECK_FALSE(dominant_dim(u).finite());
    CHECK(global_dim(u).to_string() == "AboveCutoff(12)");
  }
}

TEST_CASE("the cutoff is honoured and reported") {
  PrimeField k;
  auto a = loop_square(k);
  auto pd = projective_dimension(simple_module(a, 0), 5);
  CHECK_FALSE(pd.finite());
  CHECK(pd.cutoff == 5);
  CHECK(pd.to_string() == "AboveCutoff(5)");
}

TEST_CASE("Schur blocks: global and dominant dimension") {
  PrimeField k;
  auto a2 = schur_block(2, k), a3 = schur_block(3, k);
  CHECK(global_dim(a2).value == std::optional<std::size_t>(2));
  CHECK(dominant_dim(a2).value == std::optional<std::size_t>(2));
  CHECK(global_dim(a3).value == std::optional<std::size_t>(4));
  CHECK(dominant_dim(a3).value == std::optional<std::size_t>(4));
  CHECK(codominant_dim(regular_module(a3)).value == std::optional<std::size_t>(0));
  CHECK(codominant_dim(dual_module(regular_module(a3))).value == std::optional<std::size_t>(4));
}

TEMPLATE_TEST_CASE("recollement example: injective dimension two", "", PrimeField, RationalField) {
  TestType k;
  auto a = named_example(parse_example_id("recollement-3v"), k).algebra;
  CHECK(injective_dimension(regular_module(a)).value == std::optional<std::size_t>(2));
  auto g = gorenstein_dim(a);
  CHECK(g.dim.value == std::optional<std::size_t>(2));
  CHECK(g.left == g.right);
}

TEST_CASE("Gorenstein projectivity needs a known Gorenstein dimension") {
  PrimeField k;
  auto a = named_example(parse_example_id("cent-3-1"), k).algebra;
  auto m = simple_module(a, 0);
  CHECK_THROWS_AS(is_gorenstein_projective(m, std::nullopt), Error);
  CHECK(is_gorenstein_projective(projective_module(a, 1), 2));
}

TEST_CASE("universal extension kills Ext^1") {
  PrimeField k;
  auto a = linear_a3(k);
  auto s1 = simple_module(a, 0), s2 = simple_module(a, 1);
  auto u = universal_extension(s2, s1);
  CHECK(u.t == 1);
  CHECK(u.module.dim() == 2);
  CHECK(ext_dim(s1, u.module, 1) == 0);
  CHECK(is_homomorphism(s2, u.module, u.inclusion));
  CHECK(rank(u.inclusion) == 1);
}

TEST_CASE("ext_space representatives have the stated dimension") {
  PrimeField k;
  auto a = loop_square(k);
  auto s1 = simple_module(a, 0);
  auto e = ext_space(s1, s1, 1);
  CHECK(e.dim == 1);
  CHECK(e.representatives.size() == 1);
}
