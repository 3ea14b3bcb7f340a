#include <catch_amalgamated.hpp>

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

template <class K>
AlgebraPtr<K> truncated_poly(const K& k, int n) {
  Quiver q{{"1"}, {{"x", 0, 0}}};
  std::vector<std::string> p(n, "x");
  return compile_bqa<K>(q, {rel(k, {{1, p}})}, k);
}

// Oracle: the span of positive-length paths is the set of basis labels containing an arrow.
template <class K>
void check_radical_is_path_ideal(const AssocAlgebra<K>& a) {
  RowSpace<K> expect(a.field(), a.dim());
  for (std::size_t b = 0; b < a.dim(); ++b)
    if (a.table().labels()[b][0] != 'e') expect.insert(a.table().basis_vector(b));
  CHECK(expect.dim() == a.radical().dim());
  for (const auto& v : a.radical().accepted()) CHECK(expect.contains(v));
}

}  // namespace

TEMPLATE_TEST_CASE("compiled quiver algebras have the expected dimensions", "", PrimeField, RationalField) {
  TestType k;
  auto a = loop_square(k);
  CHECK(a->dim() == 4);
  CHECK(a->num_vertices() == 2);
  CHECK(a->cartan() == std::vector<std::vector<std::size_t>>{{2, 0}, {1, 1}});
  auto c = cent_presentation(k);
  CHECK(c->dim() == 6);
  CHECK(c->cartan() == std::vector<std::vector<std::size_t>>{{1, 1}, {1, 3}});
  CHECK(truncated_poly(k, 3)->dim() == 3);
  check_radical_is_path_ideal(*a);
  check_radical_is_path_ideal(*c);
}

TEST_CASE("radical in small characteristic equals the path ideal") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    PrimeField k(p);
    check_radical_is_path_ideal(*loop_square(k));
    check_radical_is_path_ideal(*cent_presentation(k));
    check_radical_is_path_ideal(*truncated_poly(k, 6));
  }
}

TEST_CASE("opposite of opposite is structurally the same algebra") {
  PrimeField k;
  auto a = cent_presentation(k);
  auto op = a->opposite();
  CHECK(op->opposite().get() == a.get());
  CHECK(op->table().opposite().canonical_text() == a->table().canonical_text());
  CHECK(op->cartan() == std::vector<std::vector<std::size_t>>{{1, 1}, {1, 3}});
  CHECK(!op->same_as(*a));
}

TEST_CASE("inadmissible and malformed relations are rejected") {
  RationalField k;
  Quiver loop{{"1"}, {{"x", 0, 0}}};
  try {
    compile_bqa<RationalField>(loop, {}, k, 10);
    FAIL("expected NotAdmissible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAdmissible);
  }
  Quiver two{{"1", "2"}, {{"a", 0, 1}, {"b", 1, 0}}};
  try {
    compile_bqa<RationalField>(two, {rel(k, {{1, {"a", "b"}}, {1, {"b", "a"}}})}, k);
    FAIL("expected InvalidRelation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidRelation);
  }
  try {
    compile_bqa<RationalField>(two, {rel(k, {{1, {"a", "a"}}})}, k);
    FAIL("expected InvalidRelation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidRelation);
  }
}

TEST_CASE("non-homogeneous relation") {
  // a: 1->2, b: 2->1, with ab = abab as a relation at vertex 1 and ba = 0.
  RationalField k;
  Quiver q{{"1", "2"}, {{"a", 0, 1}, {"b", 1, 0}}};
  auto alg = compile_bqa<RationalField>(q, {rel(k, {{1, {"b", "a"}}})}, k);
  CHECK(alg->dim() == 5);
  CHECK(alg->table().is_associative());
}

TEMPLATE_TEST_CASE("primitive idempotents of a product of matrix algebras", "", PrimeField, RationalField) {
  TestType k;
  // M_2(K) x K[x]/(x^2): basis E11 E12 E21 E22 1' x'.
  std::vector<std::string> labels{"E11", "E12", "E21", "E22", "u", "x"};
  Vec<TestType> unit{k.one(), k.zero(), k.zero(), k.one(), k.one(), k.zero()};
  auto table = AlgebraTable<TestType>::from_products(k, labels, unit, [&](std::size_t a, std::size_t b) {
    Vec<TestType> v(6, k.zero());
    if (a < 4 && b < 4) {
      std::size_t i = a / 2, j = a % 2, s = b / 2, t = b % 2;
      if (j == s) v[2 * i + t] = k.one();
    } else if (a >= 4 && b >= 4) {
      std::size_t deg = (a - 4) + (b - 4);
      if (deg < 2) v[4 + deg] = k.one();
    }
    return v;
  });
  REQUIRE(table.is_associative());
  auto rad = radical_basis(table);
  CHECK(rad.dim() == 1);
  Rng rng(42);
  auto idem = lift_primitive_idempotents(table, rad, rng);
  CHECK(idem.size() == 3);
  Vec<TestType> sum(6, k.zero());
  for (std::size_t i = 0; i < idem.size(); ++i) {
    CHECK(table.mul(idem[i], idem[i]) == idem[i]);
    CHECK(corner_residue_dim(table, rad, idem[i]) == 1);
    for (std::size_t j = 0; j < idem.size(); ++j)
      if (i != j) CHECK(is_zero_vec(k, table.mul(idem[i], idem[j])));
    sum = vec_add(k, sum, idem[i]);
  }
  CHECK(sum == unit);
  try {
    AssocAlgebra<TestType>::create(table, {unit});
    FAIL("expected NotBasic");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotBasic);
  }
}

TEST_CASE("quotient and corner algebras") {
  RationalField k;
  auto c = cent_presentation(k);
  auto quo = c->quotient_by_vertices({0});
  CHECK(quo->dim() == 2);  // K[b3]/(b3^2) after killing paths through vertex 1
  auto cor = c->corner({1});
  CHECK(cor->dim() == 3);
  auto re = c->reordered({1, 0});
  CHECK(re->cartan() == std::vector<std::vector<std::size_t>>{{3, 1}, {1, 1}});
}
