#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stratikit/module.hpp"

namespace stratikit {

/// Hom_A(M, N) with an explicit basis of morphism matrices (dim M x dim N).
template <class K>
class HomSpace {
 public:
  HomSpace() = default;
  HomSpace(Module<K> src, Module<K> tgt, std::vector<Matrix<K>> basis, std::vector<std::size_t> offsets,
           RowSpace<K> params);

  const Module<K>& source() const { return src_; }
  const Module<K>& target() const { return tgt_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Matrix<K>>& basis() const { return basis_; }
  const Matrix<K>& operator[](std::size_t i) const { return basis_[i]; }

  /// Coordinates of a morphism in the basis; nullopt if f is not in the space.
  std::optional<Vec<K>> coordinates(const Matrix<K>& f) const;
  /// Coordinates of the morphism sending top generator k of the source to images[k].
  std::optional<Vec<K>> coordinates_from_images(const std::vector<Vec<K>>& images) const;
  Matrix<K> combination(const Vec<K>& c) const;

 private:
  Module<K> src_, tgt_;
  std::vector<Matrix<K>> basis_;
  std::vector<std::size_t> offsets_;  // unknown block per top generator of the source
  RowSpace<K> params_;                // images of top generators, as parameter vectors
};

template <class K>
HomSpace<K> hom_space(const Module<K>& m, const Module<K>& n);

enum class Verdict { Yes, No, Inconclusive };
const char* verdict_name(Verdict v);

template <class K>
struct IsoResult {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Matrix<K>> witness;
  std::string reason;
};

/// Searches Hom(M, N) for an invertible element: basis elements and pairwise
/// sums, then 200 seeded random combinations, then exhaustive enumeration when
/// |K|^dim Hom <= 10^6. Over fields larger than twice dim M a failed random
/// search is a negative verdict (each trial misses with probability at most
/// dim M / |K|); over smaller fields it is Inconclusive unless hom-dimension
/// invariants separate the modules.
template <class K>
IsoResult<K> is_isomorphic(const Module<K>& m, const Module<K>& n, Rng& rng);

/// Finds an invertible element of a linear space of square matrices, using
/// the same search strategy as is_isomorphic.
template <class K>
IsoResult<K> find_invertible(const std::vector<Matrix<K>>& space, Rng& rng);

template <class K>
struct Summand {
  Module<K> module;
  std::size_t multiplicity = 1;
  /// Inclusions of each copy into the decomposed module.
  std::vector<Matrix<K>> inclusions;
};

/// Krull-Schmidt decomposition via primitive idempotents of End(M).
/// Summands are grouped by isomorphism in order of first appearance.
template <class K>
std::vector<Summand<K>> decompose(const Module<K>& m, Rng& rng);

/// Indecomposable summands with multiplicity one (the basic version).
template <class K>
std::vector<Module<K>> basic_summands(const Module<K>& m, Rng& rng);

/// End(X_1 + ... + X_r) with idempotent i the projection onto X_i. The
/// product is composition, x y = x o y (y first), so e_i E e_j = Hom(X_j, X_i)
/// and the projective e_i E is Hom(X, X_i).
template <class K>
AlgebraPtr<K> endomorphism_algebra(const std::vector<Module<K>>& summands);

/// End(M) as a structure-constant table with product x y = x o y.
template <class K>
AlgebraTable<K> endomorphism_table(const HomSpace<K>& end);

/// Sum of images of all maps X -> M.
template <class K>
Embedded<K> trace_submodule(const Module<K>& x, const Module<K>& m);

}  // namespace stratikit
