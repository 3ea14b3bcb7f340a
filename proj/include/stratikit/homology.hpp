#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stratikit/hom.hpp"

namespace stratikit {

constexpr std::size_t kDefaultCutoff = 12;

/// A dimension that is either a value or known only to exceed the cutoff.
struct DimensionReport {
  std::optional<std::size_t> value;
  std::size_t cutoff = kDefaultCutoff;

  bool finite() const { return value.has_value(); }
  std::string to_string() const;
  bool operator==(const DimensionReport& o) const { return value == o.value; }
  static DimensionReport of(std::size_t v, std::size_t cutoff) { return {v, cutoff}; }
  static DimensionReport above(std::size_t cutoff) { return {std::nullopt, cutoff}; }
};

/// Minimal projective resolution ... -> P_1 -> P_0 -> M -> 0, built from
/// iterated projective covers. syzygies[0] = M and syzygies[i+1] = ker(P_i -> syzygies[i]).
template <class K>
struct ProjResolution {
  Module<K> module;
  std::vector<Module<K>> terms;
  std::vector<std::vector<std::size_t>> term_vertices;
  std::vector<Module<K>> syzygies;
  /// covers[i]: P_i -> syzygies[i]; inclusions[i]: syzygies[i+1] -> P_i.
  std::vector<Matrix<K>> covers;
  std::vector<Matrix<K>> inclusions;
  /// True when the last computed syzygy is zero, so the resolution is finite.
  bool complete = false;

  std::size_t length() const { return terms.empty() ? 0 : terms.size() - 1; }
  /// Differential P_i -> P_(i-1) for i >= 1.
  Matrix<K> differential(std::size_t i) const { return matmul(covers[i], inclusions[i - 1]); }
};

/// Computes P_0 .. P_k (fewer if a syzygy vanishes) and the syzygy after P_k.
template <class K>
ProjResolution<K> min_proj_resolution(const Module<K>& m, std::size_t k);

template <class K>
struct ExtSpace {
  std::size_t degree = 0;
  std::size_t dim = 0;
  /// Morphisms syzygy^degree(M) -> N, independent modulo those that extend to P_(degree-1).
  std::vector<Matrix<K>> representatives;
  Module<K> syzygy;
};

/// Ext^i(M, N) from a resolution of M that has at least i terms.
template <class K>
ExtSpace<K> ext_space(const ProjResolution<K>& res, const Module<K>& n, std::size_t i);
template <class K>
ExtSpace<K> ext_space(const Module<K>& m, const Module<K>& n, std::size_t i);
/// dim Ext^i(M, N) using the dimension count Hom(syz^i, N) - restrictions.
template <class K>
std::size_t ext_dim(const ProjResolution<K>& res, const Module<K>& n, std::size_t i);
template <class K>
std::size_t ext_dim(const Module<K>& m, const Module<K>& n, std::size_t i);

template <class K>
DimensionReport projective_dimension(const Module<K>& m, std::size_t cutoff = kDefaultCutoff);
/// Injective dimension of M, computed as the projective dimension of D M over the opposite algebra.
template <class K>
DimensionReport injective_dimension(const Module<K>& m, std::size_t cutoff = kDefaultCutoff);

template <class K>
DimensionReport global_dim(const AlgebraPtr<K>& a, std::size_t cutoff = kDefaultCutoff);

/// Number of leading projective-injective terms of the minimal injective
/// coresolution of M. A finite coresolution made only of such terms is
/// reported as AboveCutoff.
template <class K>
DimensionReport dominant_dim(const Module<K>& m, std::size_t cutoff = kDefaultCutoff);
/// Number of leading projective-injective terms of the minimal projective resolution of M.
template <class K>
DimensionReport codominant_dim(const Module<K>& m, std::size_t cutoff = kDefaultCutoff);
template <class K>
DimensionReport dominant_dim(const AlgebraPtr<K>& a, std::size_t cutoff = kDefaultCutoff);

struct GorensteinReport {
  DimensionReport dim;
  DimensionReport right;  // id(A_A)
  DimensionReport left;   // id(_A A)
};

template <class K>
GorensteinReport gorenstein_dim(const AlgebraPtr<K>& a, std::size_t cutoff = kDefaultCutoff);

/// Ext^i(M, A) = 0 for 1 <= i <= gdim. gdim must be an established Gorenstein dimension.
template <class K>
bool is_gorenstein_projective(const Module<K>& m, std::optional<std::size_t> gdim);

template <class K>
struct UniversalExtension {
  Module<K> module;
  Matrix<K> inclusion;   // X -> E
  Matrix<K> projection;  // E -> D^t
  std::size_t t = 0;
};

/// 0 -> X -> E -> D^t -> 0 with t = dim Ext^1(D, X), the pushout of t copies
/// of 0 -> syz(D) -> P_0 -> D -> 0 along a basis of Ext^1(D, X).
template <class K>
UniversalExtension<K> universal_extension(const Module<K>& x, const Module<K>& d);

/// Projective modules of the algebra which are also injective, per vertex.
template <class K>
std::vector<bool> projective_injective_vertices(const AlgebraPtr<K>& a);

}  // namespace stratikit
