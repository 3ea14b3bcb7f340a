#pragma once

#include <map>
#include <string>
#include <vector>

#include "stratikit/strat.hpp"

namespace stratikit {

/// N = U + sum_i U/J^(p_i) over U = K[x]/(x^n), with 1 <= p_0 < ... < p_r <= n-1.
struct JordanType {
  std::size_t n = 1;
  std::vector<std::size_t> parts;

  void validate() const;
  std::string to_string() const;
  /// Block sizes of a nilpotent matrix (any order, repeats allowed); the largest is n.
  static JordanType from_partition(std::vector<std::size_t> blocks);
  bool operator==(const JordanType& o) const = default;
};

/// Jordan block sizes of a nilpotent matrix from the ranks of its powers.
template <class K>
JordanType jordan_type_of(const Matrix<K>& nilpotent);

/// p_i = n - p_(r-i) for all i.
bool centraliser_selfdual_criterion(const JordanType& j);

/// K[x]/(x^n) as a one-vertex algebra.
template <class K>
AlgebraPtr<K> truncated_polynomial(const K& k, std::size_t n);

/// U / U J^t for the truncated polynomial ring U.
template <class K>
Module<K> chain_module(const AlgebraPtr<K>& u, std::size_t t);

template <class K>
struct EndomorphismConstruction {
  AlgebraPtr<K> base;             // U
  std::vector<Module<K>> summands;  // ordered as the idempotents of the result
  AlgebraPtr<K> algebra;          // End_U(sum of summands)
  /// Stratifying order: U first, then the other summands by decreasing
  /// dimension; replaced by the first properly stratifying order if that fails.
  std::vector<std::size_t> order;
};

/// Order used for endomorphism algebras of generators, validated by stratification_check.
template <class K>
std::vector<std::size_t> default_stratifying_order(const AlgebraPtr<K>& a, const std::vector<Module<K>>& summands);

/// End_U(N) with the non-projective summands by increasing length and U last.
template <class K>
EndomorphismConstruction<K> centraliser_algebra(const JordanType& j, const K& k);

/// The representation-finite Schur block with m simples.
template <class K>
AlgebraPtr<K> schur_block(std::size_t m, const K& k);

/// End(P(1) + ... + P(n)) over the Schur block with n+1 simples.
template <class K>
AlgebraPtr<K> brauer_block(std::size_t n, const K& k);

/// K[x,y]/(xy, x^2 - y^3) on the basis 1, x, y, y^2, x^2.
template <class K>
AlgebraPtr<K> kxy_algebra(const K& k);

/// End_A(A + xA + yA + x^2 A) over K[x,y]/(xy, x^2 - y^3), ordered x^2A, xA, yA, A.
template <class K>
EndomorphismConstruction<K> gigs_kxy(const K& k);

enum class ExampleId { RadSquareZero2v, Recollement3v, GigsKxy, Cent31, SchurA, BrauerB };

struct ExampleSpec {
  ExampleId id;
  std::size_t parameter = 0;  // m for schur-A, n for brauer-B
};

ExampleSpec parse_example_id(const std::string& s);
std::string example_name(const ExampleSpec& e);
std::vector<std::string> example_names();

template <class K>
struct NamedExample {
  AlgebraPtr<K> algebra;
  std::vector<std::size_t> order;
  /// Invariants stated for the example, keyed by name.
  std::map<std::string, std::string> manifest;
};

template <class K>
NamedExample<K> named_example(const ExampleSpec& e, const K& k);

/// Inverse of a basic GIGS-type construction: U = e A e for the
/// projective-injective vertices, and N = A e as a right U-module.
template <class K>
struct GendoData {
  std::vector<std::size_t> vertices;
  AlgebraPtr<K> base;
  Module<K> generator;
};

template <class K>
GendoData<K> gendo_data(const AlgebraPtr<K>& a);

}  // namespace stratikit
