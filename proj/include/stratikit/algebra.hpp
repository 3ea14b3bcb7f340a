#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "stratikit/algebra_table.hpp"

namespace stratikit {

/// A generator of radical type: an element of e_i J e_j not in J^2.
template <class K>
struct Arrow {
  std::string label;
  std::size_t source = 0;
  std::size_t target = 0;
  Vec<K> element;
};

/// A word e_i a_1 ... a_r in the generators, built by extending a parent word.
struct Word {
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::size_t parent = kNone;  // kNone for the trivial words e_i
  std::size_t arrow = kNone;   // last arrow, kNone for trivial words
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t length = 0;
};

/// Basic split algebra with an ordered complete set of primitive orthogonal
/// idempotents. Paths compose left to right: for an arrow x in e_i A e_j,
/// e_i x = x = x e_j.
template <class K>
class AssocAlgebra : public std::enable_shared_from_this<AssocAlgebra<K>> {
 public:
  using Ptr = std::shared_ptr<const AssocAlgebra>;

  /// Validates idempotents (orthogonal, complete, primitive) and the basic
  /// split condition dim A / J = number of idempotents. When arrows are not
  /// given they are chosen as complements of e_i J^2 e_j in e_i J e_j.
  static Ptr create(AlgebraTable<K> table, std::vector<Vec<K>> idempotents,
                    std::optional<std::vector<Arrow<K>>> arrows = std::nullopt,
                    std::vector<std::string> vertex_labels = {});

  const AlgebraTable<K>& table() const { return table_; }
  const K& field() const { return table_.field(); }
  std::size_t dim() const { return table_.dim(); }
  std::size_t num_vertices() const { return idempotents_.size(); }
  const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }
  const std::vector<Vec<K>>& idempotents() const { return idempotents_; }
  const std::vector<Arrow<K>>& arrows() const { return arrows_; }
  const RowSpace<K>& radical() const { return radical_; }

  /// Generators are the idempotents followed by the arrows.
  std::size_t num_generators() const { return idempotents_.size() + arrows_.size(); }
  const Vec<K>& generator(std::size_t g) const {
    return g < idempotents_.size() ? idempotents_[g] : arrows_[g - idempotents_.size()].element;
  }
  std::string generator_label(std::size_t g) const {
    return g < idempotents_.size() ? "e" + vertex_labels_[g] : arrows_[g - idempotents_.size()].label;
  }
  std::size_t arrow_generator(std::size_t a) const { return idempotents_.size() + a; }

  /// Word basis in BFS order; words[i] for i < n are the idempotents.
  const std::vector<Word>& words() const { return words_; }
  /// Rows: words as vectors in the table basis.
  const Matrix<K>& word_matrix() const { return word_matrix_; }
  /// Coordinates of a table-basis vector in the word basis.
  Vec<K> word_coordinates(const Vec<K>& x) const { return vec_mat(x, word_inverse_); }
  /// Word indices starting at vertex i; they form a basis of e_i A.
  const std::vector<std::size_t>& words_at(std::size_t i) const { return words_at_[i]; }
  /// Position of a word inside words_at(start).
  std::size_t word_position(std::size_t w) const { return word_position_[w]; }
  /// Right action of generator g on the regular module in the word basis.
  const Matrix<K>& regular_action(std::size_t g) const { return regular_action_[g]; }

  /// C[i][j] = dim e_i A e_j.
  std::vector<std::vector<std::size_t>> cartan() const;
  std::size_t projective_dim(std::size_t i) const { return words_at_[i].size(); }

  /// Opposite algebra with the same generators; op(op(A)) is A itself while
  /// A is alive, and structurally identical otherwise.
  Ptr opposite() const;
  /// Same algebra with idempotents listed as order[0], order[1], ...
  Ptr reordered(const std::vector<std::size_t>& order) const;
  /// A / A e A for e = sum of the given vertices' idempotents.
  Ptr quotient_by_vertices(const std::vector<std::size_t>& vertices) const;
  /// e A e for e = sum of the given vertices' idempotents.
  Ptr corner(const std::vector<std::size_t>& vertices) const;

  std::uint64_t fingerprint() const { return fingerprint_; }
  bool same_as(const AssocAlgebra& o) const { return this == &o || fingerprint_ == o.fingerprint_; }

  Vec<K> mul(const Vec<K>& x, const Vec<K>& y) const { return table_.mul(x, y); }

 private:
  struct Private {};

 public:
  AssocAlgebra(Private, AlgebraTable<K> table, std::vector<Vec<K>> idempotents, std::vector<Arrow<K>> arrows,
               RowSpace<K> radical, std::vector<std::string> vertex_labels);

 private:
  void build_words();

  AlgebraTable<K> table_;
  std::vector<Vec<K>> idempotents_;
  std::vector<Arrow<K>> arrows_;
  RowSpace<K> radical_;
  std::vector<std::string> vertex_labels_;

  std::vector<Word> words_;
  Matrix<K> word_matrix_;
  Matrix<K> word_inverse_;
  std::vector<std::vector<std::size_t>> words_at_;
  std::vector<std::size_t> word_position_;
  std::vector<Matrix<K>> regular_action_;
  std::uint64_t fingerprint_ = 0;

  mutable std::mutex op_mutex_;
  mutable std::shared_ptr<const AssocAlgebra> op_;
  mutable std::weak_ptr<const AssocAlgebra> op_back_;
};

template <class K>
using AlgebraPtr = std::shared_ptr<const AssocAlgebra<K>>;

/// Span of the ideal A e A for e the sum of the given vertex idempotents.
template <class K>
RowSpace<K> idempotent_ideal(const AssocAlgebra<K>& a, const std::vector<std::size_t>& vertices);

/// Radical layer dimensions dim J^k / J^(k+1) of the algebra.
template <class K>
std::vector<std::size_t> radical_layers(const AssocAlgebra<K>& a);

}  // namespace stratikit
