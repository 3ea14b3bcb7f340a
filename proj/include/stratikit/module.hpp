#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "stratikit/algebra.hpp"

namespace stratikit {

template <class K>
class Module;

template <class K>
struct Embedded {
  Module<K> module;
  /// Rows: the module's basis as vectors of the ambient module.
  Matrix<K> inclusion;
};

template <class K>
struct Presentation {
  /// Vertices i_k and vectors m_k of a minimal generating set, m_k in M e_(i_k).
  std::vector<std::size_t> top_vertices;
  Matrix<K> top_generators;
  /// P0 = sum_k P(i_k); block k starts at offsets[k] and is indexed by words_at(i_k).
  std::vector<std::size_t> offsets;
  std::size_t p0_dim = 0;
  /// Rows (k, w) -> m_k w; a surjection P0 -> M.
  Matrix<K> cover;
  /// P0 rows whose images form a basis of M, and the inverse of that block.
  std::vector<std::size_t> chosen;
  Matrix<K> section;
  /// Basis of the kernel of the cover, in P0 coordinates.
  Matrix<K> kernel;
  Module<K> p0;
  /// Kernel as a submodule of P0, and its top generators (the relations).
  Embedded<K> syzygy;
  std::vector<std::size_t> relation_vertices;
  Matrix<K> relations;
};

/// Finite-dimensional right module, given by the action matrices of the
/// algebra's generators (idempotents first, then arrows). m a = m R(a) and
/// R(ab) = R(a) R(b). Copies share the underlying data.
template <class K>
class Module {
 public:
  Module() = default;
  Module(AlgebraPtr<K> alg, std::vector<Matrix<K>> gens);

  const AssocAlgebra<K>& algebra() const { return *d_->alg; }
  const AlgebraPtr<K>& algebra_ptr() const { return d_->alg; }
  const K& field() const { return d_->alg->field(); }
  std::size_t dim() const { return d_->dim; }
  const Matrix<K>& gen(std::size_t g) const { return d_->gens[g]; }
  const std::vector<Matrix<K>>& gens() const { return d_->gens; }
  bool empty() const { return !d_; }

  std::vector<std::size_t> dimension_vector() const;
  /// Reduced echelon basis of M e_i.
  const RowSpace<K>& vertex_space(std::size_t i) const;
  /// For each word w at vertex i (in words_at order): vertex basis times R(w).
  const std::vector<Matrix<K>>& vertex_orbit(std::size_t i) const;
  /// Rows m w for all words w of the algebra.
  Matrix<K> orbit(const Vec<K>& m) const;
  /// m a for a given in table coordinates of the algebra.
  Vec<K> act(const Vec<K>& m, const Vec<K>& a) const;
  /// Matrix of the action of a (table coordinates).
  Matrix<K> element_action(const Vec<K>& a) const;

  /// Radical M J as a subspace.
  const RowSpace<K>& radical_space() const;
  const Presentation<K>& presentation() const;

  /// Checks that the generator matrices define a module for the algebra.
  bool is_valid() const;
  bool is_zero() const { return dim() == 0; }
  std::string canonical_text() const;

 private:
  struct Data {
    AlgebraPtr<K> alg;
    std::size_t dim = 0;
    std::vector<Matrix<K>> gens;
    mutable std::once_flag vertex_once, orbit_once, radical_once, presentation_once;
    mutable std::vector<RowSpace<K>> vertex;
    mutable std::vector<std::vector<Matrix<K>>> orbits;
    mutable RowSpace<K> radical;
    mutable std::shared_ptr<Presentation<K>> presentation;
  };
  std::shared_ptr<Data> d_;
};

template <class K>
struct Quotiented {
  Module<K> module;
  /// Ambient dim x quotient dim.
  Matrix<K> projection;
};

template <class K>
Module<K> regular_module(const AlgebraPtr<K>& a);
template <class K>
Module<K> projective_module(const AlgebraPtr<K>& a, std::size_t i);
template <class K>
Module<K> simple_module(const AlgebraPtr<K>& a, std::size_t i);
/// I(i) = D(A e_i), built as the dual of the projective over the opposite algebra.
template <class K>
Module<K> injective_module(const AlgebraPtr<K>& a, std::size_t i);
/// D M over the opposite algebra; actions are transposed.
template <class K>
Module<K> dual_module(const Module<K>& m);
template <class K>
Module<K> zero_module(const AlgebraPtr<K>& a);

/// Submodule spanned by the given rows (must be closed, else NotASubmodule).
template <class K>
Embedded<K> submodule(const Module<K>& m, const Matrix<K>& rows);
/// Smallest submodule containing the given rows.
template <class K>
Embedded<K> generated_submodule(const Module<K>& m, const Matrix<K>& rows);
template <class K>
Quotiented<K> quotient_module(const Module<K>& m, const Matrix<K>& sub_rows);
template <class K>
Module<K> direct_sum(const AlgebraPtr<K>& a, const std::vector<Module<K>>& parts);

template <class K>
bool is_homomorphism(const Module<K>& m, const Module<K>& n, const Matrix<K>& f);

struct RadicalTopSocle {
  std::vector<std::size_t> top;     // multiplicity of S(i) in top
  std::vector<std::size_t> socle;   // multiplicity of S(i) in socle
  std::vector<std::size_t> radical_layers;  // dim rad^k M / rad^(k+1) M
};

template <class K>
RadicalTopSocle radical_top_socle(const Module<K>& m);
/// Socle {m : m a = 0 for every arrow} as a subspace.
template <class K>
RowSpace<K> socle_space(const Module<K>& m);
/// rad^k M for k = 0, 1, ... until zero.
template <class K>
std::vector<RowSpace<K>> radical_series(const Module<K>& m);

template <class K>
struct ProjectiveCover {
  Module<K> cover;        // sum of P(i_k)
  std::vector<std::size_t> vertices;
  Matrix<K> map;          // cover -> M
  Embedded<K> syzygy;     // kernel, embedded in cover
};

template <class K>
ProjectiveCover<K> projective_cover_and_syzygy(const Module<K>& m);

/// Top of M is simple S(i) and dim M = dim P(i).
template <class K>
bool is_projective_indecomposable_shape(const Module<K>& m, std::size_t* vertex = nullptr);
/// M is projective: dim M equals the dimension of its projective cover.
template <class K>
bool is_projective(const Module<K>& m);
/// Socle of M is simple S(i) and dim M = dim I(i).
template <class K>
bool is_injective_indecomposable_shape(const Module<K>& m, std::size_t* vertex = nullptr);
/// M is injective: dim M equals the dimension of its injective envelope.
template <class K>
bool is_injective(const Module<K>& m);

/// Vertices and vectors of a minimal generating set (complement of rad M).
template <class K>
std::pair<std::vector<std::size_t>, Matrix<K>> top_generators(const Module<K>& m);

/// Indecomposable projectives, simples and injectives of an algebra.
template <class K>
struct ModuleCatalogue {
  std::vector<Module<K>> projectives, simples, injectives;
};

template <class K>
ModuleCatalogue<K> module_catalogue(const AlgebraPtr<K>& a);

}  // namespace stratikit
