#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "stratikit/kernels.hpp"
#include "stratikit/matrix.hpp"

namespace stratikit {

template <class K>
struct RrefResult {
  Matrix<K> reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

template <class K>
RrefResult<K> rref(const Matrix<K>& m);

template <class K>
std::size_t rank(const Matrix<K>& m);

/// Basis of {x : m x = 0}, one basis vector per free column, in RREF order.
template <class K>
std::vector<Vec<K>> kernel_basis(const Matrix<K>& m);

/// Basis of {v : v m = 0} as the rows of the returned matrix.
template <class K>
Matrix<K> left_kernel(const Matrix<K>& m);

/// Some x with a x = b, free variables set to zero; nullopt if none exists.
template <class K>
std::optional<Vec<K>> solve_linear(const Matrix<K>& a, const Vec<K>& b);

template <class K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m);

/// Basis of the row space, in reduced echelon form.
template <class K>
Matrix<K> row_space(const Matrix<K>& m);

/// Invertibility test. Over Q a reduction modulo a large prime is tried
/// first; a nonzero determinant there certifies invertibility.
template <class K>
bool is_invertible(const Matrix<K>& m);
template <>
bool is_invertible<PrimeField>(const Matrix<PrimeField>& m);
template <>
bool is_invertible<RationalField>(const Matrix<RationalField>& m);

/// Subspace of K^n held as a reduced echelon basis, with coordinates
/// recorded relative to the vectors accepted by insert().
template <class K>
class RowSpace {
 public:
  using Elem = typename K::Elem;

  RowSpace() = default;
  RowSpace(const K& k, std::size_t ambient) : k_(k), n_(ambient) {}
  static RowSpace spanned_by(const Matrix<K>& rows) {
    RowSpace s(rows.field(), rows.cols());
    for (std::size_t i = 0; i < rows.rows(); ++i) s.insert(rows.row(i));
    return s;
  }

  const K& field() const { return k_; }
  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return echelon_.size(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Adds v if independent; returns whether it was added.
  bool insert(const Vec<K>& v);

  /// v reduced against the echelon basis (zero at all pivot columns).
  Vec<K> reduce(const Vec<K>& v) const;
  bool contains(const Vec<K>& v) const { return is_zero_vec(k_, reduce(v)); }

  /// Coordinates of v in the accepted vectors, nullopt if v is outside.
  std::optional<Vec<K>> coordinates(const Vec<K>& v) const;

  /// Accepted vectors in insertion order.
  Matrix<K> basis() const;
  const std::vector<Vec<K>>& accepted() const { return accepted_; }
  /// Reduced echelon basis ordered by pivot column.
  Matrix<K> echelon_basis() const;
  std::vector<std::size_t> non_pivot_columns() const;

 private:
  K k_{};
  std::size_t n_ = 0;
  std::vector<Vec<K>> echelon_;    // kept sorted by pivot
  std::vector<Vec<K>> transform_;  // echelon_[r] = sum transform_[r][s] accepted_[s]
  std::vector<std::size_t> pivots_;
  std::vector<Vec<K>> accepted_;
};

template <class K>
RowSpace<K> intersect(const RowSpace<K>& a, const RowSpace<K>& b);

}  // namespace stratikit
