#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stratikit/linalg.hpp"

namespace stratikit {

/// Finite-dimensional associative unital algebra given by structure
/// constants b_a b_b = sum_k c_abk b_k, stored sparsely.
template <class K>
class AlgebraTable {
 public:
  using Elem = typename K::Elem;
  using Terms = std::vector<std::pair<std::size_t, Elem>>;

  AlgebraTable() = default;
  AlgebraTable(const K& k, std::vector<std::string> labels, std::vector<Terms> products, Vec<K> unit);

  /// Builds a table from a product callback returning dense coordinates.
  template <class F>
  static AlgebraTable from_products(const K& k, std::vector<std::string> labels, Vec<K> unit, F&& prod) {
    const std::size_t d = labels.size();
    std::vector<Terms> p(d * d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        Vec<K> v = prod(a, b);
        for (std::size_t c = 0; c < d; ++c)
          if (!k.is_zero(v[c])) p[a * d + b].emplace_back(c, v[c]);
      }
    return AlgebraTable(k, std::move(labels), std::move(p), std::move(unit));
  }

  const K& field() const { return k_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vec<K>& unit() const { return unit_; }
  const Terms& product(std::size_t a, std::size_t b) const { return products_[a * dim() + b]; }

  Vec<K> basis_vector(std::size_t a) const { return unit_vec(k_, dim(), a); }
  Vec<K> mul(const Vec<K>& x, const Vec<K>& y) const;
  /// Matrix of x -> x y.
  Matrix<K> right_mult(const Vec<K>& y) const;
  /// Matrix of y -> x y.
  Matrix<K> left_mult(const Vec<K>& x) const;

  AlgebraTable opposite() const;
  bool is_associative() const;
  bool has_unit() const;
  bool is_commutative() const;

  /// Canonical text: labels, then nonzero structure constants, then unit.
  std::string canonical_text() const;
  std::uint64_t fingerprint() const;

 private:
  K k_{};
  std::vector<std::string> labels_;
  std::vector<Terms> products_;
  Vec<K> unit_;
};

/// Jacobson radical. Characteristic 0 or larger than the dimension uses the
/// trace form; small characteristic uses iterated p-power traces of integer
/// lifts. The result is checked to be a nilpotent two-sided ideal.
template <class K>
RowSpace<K> radical_basis(const AlgebraTable<K>& a);

/// Powers J^k of a two-sided ideal J, as long as nonzero.
template <class K>
std::vector<RowSpace<K>> ideal_powers(const AlgebraTable<K>& a, const RowSpace<K>& j);

/// Minimal polynomial of x (monic, from the Krylov sequence of 1, x, x^2, ...)
/// inside the subalgebra with unit `unit`.
template <class K>
std::vector<typename K::Elem> element_minimal_polynomial(const AlgebraTable<K>& a, const Vec<K>& x,
                                                         const Vec<K>& unit);

/// Complete set of orthogonal primitive idempotents. Requires every local
/// corner to be split (residue field equal to K); throws LiftingFailed otherwise.
template <class K>
std::vector<Vec<K>> lift_primitive_idempotents(const AlgebraTable<K>& a, const RowSpace<K>& radical, Rng& rng);

/// dim fAf - dim fJf for an idempotent f.
template <class K>
std::size_t corner_residue_dim(const AlgebraTable<K>& a, const RowSpace<K>& radical, const Vec<K>& f);

}  // namespace stratikit
