#include <catch_amalgamated.hpp>

#include <algorithm>

#include "stratikit/families.hpp"
#include "stratikit/strat.hpp"

using namespace stratikit;

namespace {

std::vector<JordanType> all_jordan_types(std::size_t n) {
  std::vector<JordanType> out;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    JordanType j{n, {}};
    for (std::size_t p = 1; p < n; ++p)
      if (mask >> (p - 1) & 1) j.parts.push_back(p);
    out.push_back(j);
  }
  return out;
}

// dim Hom_U(U/J^a, U/J^b) = min(a, b) over U = K[x]/(x^n).
std::size_t end_dim_oracle(const JordanType& j) {
  std::vector<std::size_t> lengths = j.parts;
  lengths.push_back(j.n);
  std::size_t d = 0;
  for (auto a : lengths)
    for (auto b : lengths) d += std::min(a, b);
  return d;
}

template <class K>
Matrix<K> nilpotent_block(const K& k, std::size_t n) {
  Matrix<K> m(k, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = k.one();
  return m;
}

template <class K>
Matrix<K> random_invertible(const K& k, std::size_t n, Rng& rng) {
  for (;;) {
    Matrix<K> m(k, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = k.from_int(static_cast<std::int64_t>(rng() % 7) - 3);
    if (is_invertible(m)) return m;
  }
}

}  // namespace

TEST_CASE("centraliser algebras have the expected dimension over F_p") {
  PrimeField k;
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& j : all_jordan_types(n)) {
      INFO(j.to_string());
      auto c = centraliser_algebra(j, k);
      CHECK(c.algebra->dim() == end_dim_oracle(j));
      CHECK(c.algebra->num_vertices() == j.parts.size() + 1);
      // U first, the rest by decreasing length, with no fallback search
      std::vector<std::size_t> expect(j.parts.size() + 1);
      for (std::size_t i = 0; i < expect.size(); ++i) expect[i] = expect.size() - 1 - i;
      CHECK(c.order == expect);
      CHECK(stratification_check(c.algebra, c.order).properly);
    }
}

TEST_CASE("centraliser algebras have the expected dimension over Q") {
  RationalField k;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& j : all_jordan_types(n)) {
      INFO(j.to_string());
      CHECK(centraliser_algebra(j, k).algebra->dim() == end_dim_oracle(j));
    }
}

TEMPLATE_TEST_CASE("Cartan matrix of the (3,{1}) centraliser", "", PrimeField, RationalField) {
  TestType k;
  auto c = centraliser_algebra(JordanType{3, {1}}, k);
  std::vector<std::vector<std::size_t>> expect{{1, 1}, {1, 3}};
  CHECK(c.algebra->cartan() == expect);
  CHECK(standard_family(c.algebra, c.order).verdict.properly);
}

TEST_CASE("syzygies of chain modules over the truncated polynomial ring") {
  PrimeField k;
  Rng rng(4);
  for (std::size_t n = 2; n <= 6; ++n) {
    auto u = truncated_polynomial(k, n);
    CHECK(u->dim() == n);
    for (std::size_t t = 1; t < n; ++t) {
      auto m = chain_module(u, t);
      CHECK(m.dim() == t);
      auto pc = projective_cover_and_syzygy(m);
      CHECK(is_isomorphic(pc.syzygy.module, chain_module(u, n - t), rng).verdict == Verdict::Yes);
    }
  }
}

TEMPLATE_TEST_CASE("jordan_type_of recovers conjugated block sizes", "", PrimeField, RationalField) {
  TestType k;
  Rng rng(9);
  const std::vector<std::vector<std::size_t>> partitions{{3, 1}, {2, 2, 1}, {4}, {4, 3, 1, 1}, {1, 1}, {5, 2}};
  for (const auto& p : partitions) {
    std::vector<Matrix<TestType>> blocks;
    std::size_t size = 0;
    for (auto b : p) {
      blocks.push_back(nilpotent_block(k, b));
      size += b;
    }
    auto n = block_diag(k, blocks);
    auto g = random_invertible(k, size, rng);
    auto conj = matmul(matmul(*inverse(g), n), g);
    CHECK(jordan_type_of(conj) == JordanType::from_partition(p));
  }
}

TEST_CASE("self-duality criterion") {
  CHECK_FALSE(centraliser_selfdual_criterion(JordanType{3, {1}}));
  CHECK(centraliser_selfdual_criterion(JordanType{2, {1}}));
  CHECK(centraliser_selfdual_criterion(JordanType{4, {1, 3}}));
  CHECK(centraliser_selfdual_criterion(JordanType{4, {2}}));
  CHECK(centraliser_selfdual_criterion(JordanType{5, {}}));
  CHECK_FALSE(centraliser_selfdual_criterion(JordanType{4, {1, 2}}));
}

TEST_CASE("Jordan type validation and partitions") {
  CHECK_THROWS_AS((JordanType{3, {2, 1}}.validate()), Error);
  CHECK_THROWS_AS((JordanType{3, {3}}.validate()), Error);
  CHECK_NOTHROW((JordanType{3, {1, 2}}.validate()));
  CHECK(JordanType::from_partition({1, 3, 1, 0}) == (JordanType{3, {1}}));
  CHECK(JordanType{4, {1, 3}}.to_string() == "(4,{1,3})");
}

TEMPLATE_TEST_CASE("small Schur and Brauer blocks", "", PrimeField, RationalField) {
  TestType k;
  auto s1 = schur_block(1, k);
  CHECK(s1->dim() == 1);
  CHECK(s1->num_vertices() == 1);
  auto b1 = brauer_block(1, k);
  CHECK(b1->dim() == 2);
  CHECK(b1->num_vertices() == 1);
  for (std::size_t m = 1; m <= 3; ++m) CHECK(schur_block(m, k)->num_vertices() == m);
}

TEST_CASE("Brauer block with two projectives is periodic on simples") {
  PrimeField k;
  Rng rng(8);
  auto b = brauer_block(2, k);
  REQUIRE(b->num_vertices() == 2);
  auto res = min_proj_resolution(simple_module(b, 1), 2);
  REQUIRE(res.syzygies.size() > 2);
  CHECK(is_isomorphic(res.syzygies[2], simple_module(b, 0), rng).verdict == Verdict::Yes);
}

TEST_CASE("example identifiers") {
  CHECK(parse_example_id("cent-3-1").id == ExampleId::Cent31);
  CHECK(parse_example_id("schur-A(2)").id == ExampleId::SchurA);
  CHECK(parse_example_id("schur-A(2)").parameter == 2);
  CHECK(parse_example_id("schur-A-3").parameter == 3);
  CHECK(parse_example_id("brauer-B(1)").id == ExampleId::BrauerB);
  CHECK_THROWS_AS(parse_example_id("schur-A"), Error);
  CHECK_THROWS_AS(parse_example_id("schur-A(0)"), Error);
  CHECK_THROWS_AS(parse_example_id("no-such-example"), Error);
  for (const auto& name : example_names()) {
    if (name.rfind("schur-A", 0) == 0 || name.rfind("brauer-B", 0) == 0) continue;
    CHECK(example_name(parse_example_id(name)) == name);
  }
  CHECK(example_name(ExampleSpec{ExampleId::SchurA, 2}) == "schur-A(2)");
}

TEST_CASE("gendo data recovers the base ring") {
  PrimeField k;
  auto c = centraliser_algebra(JordanType{4, {1, 2}}, k);
  auto g = gendo_data(c.algebra);
  CHECK(g.vertices.size() == 1);
  CHECK(g.base->dim() == 4);
  CHECK(g.generator.dim() == 1 + 2 + 4);
}

TEST_CASE("stratifying orders of the (3,{1}) centraliser") {
  PrimeField k;
  auto c = centraliser_algebra(JordanType{3, {1}}, k);
  // idempotents: 0 = U/J, 1 = U; the last position is maximal
  CHECK_FALSE(stratification_check(c.algebra, {0, 1}).standardly);
  CHECK(stratification_check(c.algebra, {1, 0}).properly);
  CHECK(c.order == (std::vector<std::size_t>{1, 0}));
}
