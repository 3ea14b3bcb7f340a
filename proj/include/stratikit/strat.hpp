#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stratikit/homology.hpp"

namespace stratikit {

enum class Family { Delta, ProperDelta, Nabla, ProperNabla };
const char* family_name(Family f);

struct StratificationVerdict {
  bool standardly = false;
  bool properly = false;
  /// Position in the order (0-based) of the first layer where A e A is not projective.
  std::optional<std::size_t> failing_layer;
  /// Same for the opposite algebra.
  std::optional<std::size_t> failing_layer_op;
};

/// Standard, proper standard, costandard and proper costandard modules for a
/// given idempotent order. `algebra` is the input reordered so that position i
/// of the order is vertex i; all modules live over it.
template <class K>
struct StratifiedData {
  AlgebraPtr<K> algebra;
  std::vector<std::size_t> order;
  std::vector<Module<K>> delta, proper_delta, nabla, proper_nabla;
  /// Standard and proper standard modules of the opposite algebra.
  std::vector<Module<K>> delta_op, proper_delta_op;
  StratificationVerdict verdict;

  std::size_t size() const { return delta.size(); }
  const std::vector<Module<K>>& family(Family f) const;
};

/// Sum of images of all maps from P(v), v in `vertices`, into M.
template <class K>
Embedded<K> projective_trace(const Module<K>& m, const std::vector<std::size_t>& vertices);

/// Recursive test: A e_n A projective as a right module (certified by its top
/// and dimension) and A / A e_n A standardly stratified for the truncated order.
template <class K>
StratificationVerdict stratification_check(const AlgebraPtr<K>& a, const std::vector<std::size_t>& order);
template <class K>
StratificationVerdict stratification_check(const AlgebraPtr<K>& a);

template <class K>
StratifiedData<K> standard_family(const AlgebraPtr<K>& a, const std::vector<std::size_t>& order);
template <class K>
StratifiedData<K> standard_family(const AlgebraPtr<K>& a);

struct FiltrationResult {
  bool member = false;
  std::optional<bool> ext_route;
  std::optional<bool> peel_route;
  /// Multiplicities from the peeling route, by position in the order.
  std::vector<std::size_t> multiplicities;
};

/// Membership in F(family). The Ext route needs a properly stratified order;
/// the peeling route exists for Delta and Nabla. When both run they must agree.
template <class K>
FiltrationResult in_filtration_category(const Module<K>& m, Family f, const StratifiedData<K>& s);

/// Delta multiplicities of M from the peeling route; NotFiltered if M is not in F(Delta).
template <class K>
std::vector<std::size_t> delta_multiplicities(const Module<K>& m, const StratifiedData<K>& s);

template <class K>
struct TiltingData {
  std::vector<Module<K>> tilting;    // T(i)
  std::vector<Module<K>> cotilting;  // C(i)
  DimensionReport pd;
  std::vector<std::string> transcript;

  Module<K> basic_tilting(const AlgebraPtr<K>& a) const { return direct_sum(a, tilting); }
  Module<K> basic_cotilting(const AlgebraPtr<K>& a) const { return direct_sum(a, cotilting); }
};

/// Indecomposable tilting summands T(i) built by iterated universal extensions of Delta(i).
template <class K>
std::vector<Module<K>> tilting_summands(const StratifiedData<K>& s, Rng& rng, std::vector<std::string>* log = nullptr);

template <class K>
TiltingData<K> characteristic_tilting(const StratifiedData<K>& s, Rng& rng, std::size_t cutoff = kDefaultCutoff);

/// End(T) with idempotents ordered by `order` over the T(i) (default: reversed).
template <class K>
AlgebraPtr<K> ringel_dual(const StratifiedData<K>& s, const TiltingData<K>& t,
                          std::optional<std::vector<std::size_t>> order = std::nullopt);

template <class K>
struct ClassificationReport {
  bool selfinjective = false;
  Verdict frobenius = Verdict::No;
  Verdict symmetric = Verdict::No;
  Verdict gendo_symmetric = Verdict::No;
  GorensteinReport gorenstein;
  DimensionReport dominant;
  DimensionReport global;
  bool minimal_auslander_gorenstein = false;
  std::vector<std::size_t> projective_injective;
};

template <class K>
ClassificationReport<K> classify(const AlgebraPtr<K>& a, Rng& rng, std::size_t cutoff = kDefaultCutoff);

/// Frobenius: A_A isomorphic to D(A)_A.
template <class K>
Verdict is_frobenius(const AlgebraPtr<K>& a, Rng& rng);
/// Symmetric: some symmetric linear form on A has a nondegenerate trace pairing.
template <class K>
Verdict is_symmetric(const AlgebraPtr<K>& a, Rng& rng);

/// Invariants compared for invariant-level isomorphism.
struct AlgebraInvariants {
  std::size_t dim = 0;
  std::vector<std::vector<std::size_t>> cartan;
  std::vector<std::size_t> radical_layers;
  std::vector<std::vector<std::size_t>> projective_layers;
  std::vector<std::vector<std::size_t>> injective_layers;
  std::vector<std::size_t> delta_dims, proper_delta_dims;
  bool properly_stratified = false;
  std::string flags;

  bool operator==(const AlgebraInvariants& o) const = default;
};

template <class K>
AlgebraInvariants algebra_invariants(const AlgebraPtr<K>& a, const std::string& flags);
template <class K>
std::string classification_flags(const AlgebraPtr<K>& a, Rng& rng, std::size_t cutoff = kDefaultCutoff);

struct InvariantIsoResult {
  bool isomorphic = false;
  /// Vertex permutation of the second algebra that matched, if any.
  std::vector<std::size_t> permutation;
  std::string reason;
};

/// Compares the first algebra in its given order with every reordering of the second.
template <class K>
InvariantIsoResult invariant_isomorphic(const AlgebraPtr<K>& a, const AlgebraPtr<K>& b, Rng& rng,
                                        std::size_t cutoff = kDefaultCutoff);

struct OrderVerdict {
  std::vector<std::size_t> order;
  StratificationVerdict verdict;
};

template <class K>
std::vector<OrderVerdict> find_stratifying_orders(const AlgebraPtr<K>& a);

/// M e as a right module over the corner algebra e A e (built by AssocAlgebra::corner).
template <class K>
Module<K> corner_restriction(const Module<K>& m, const AlgebraPtr<K>& corner, const std::vector<std::size_t>& vertices);

}  // namespace stratikit
