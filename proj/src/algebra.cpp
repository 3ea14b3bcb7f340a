#include "stratikit/algebra.hpp"

#include <numeric>
#include <sstream>

#include "stratikit/util.hpp"

namespace stratikit {

namespace {

template <class K>
bool arrows_generate(const AlgebraTable<K>& t, const std::vector<Vec<K>>& idem, const RowSpace<K>& rad,
                     const std::vector<RowSpace<K>>& powers, const std::vector<Arrow<K>>& arrows) {
  const K& k = t.field();
  RowSpace<K> span = powers.size() > 1 ? powers[1] : RowSpace<K>(k, t.dim());
  for (const auto& a : arrows) {
    if (a.source >= idem.size() || a.target >= idem.size()) return false;
    if (!rad.contains(a.element)) return false;
    if (t.mul(t.mul(idem[a.source], a.element), idem[a.target]) != a.element) return false;
    if (!span.insert(a.element)) return false;
  }
  return span.dim() == rad.dim();
}

template <class K>
std::vector<Arrow<K>> choose_arrows(const AlgebraTable<K>& t, const std::vector<Vec<K>>& idem,
                                    const RowSpace<K>& rad, const std::vector<RowSpace<K>>& powers) {
  std::vector<Arrow<K>> out;
  const std::size_t n = idem.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RowSpace<K> span(t.field(), t.dim());
      if (powers.size() > 1)
        for (const auto& v : powers[1].accepted()) span.insert(t.mul(t.mul(idem[i], v), idem[j]));
      RowSpace<K> jij(t.field(), t.dim());
      for (const auto& v : rad.accepted()) jij.insert(t.mul(t.mul(idem[i], v), idem[j]));
      for (const auto& v : jij.echelon_basis().row_list())
        if (span.insert(v)) out.push_back({"", i, j, v});
    }
  for (std::size_t a = 0; a < out.size(); ++a) out[a].label = "a" + std::to_string(a + 1);
  return out;
}

}  // namespace

template <class K>
typename AssocAlgebra<K>::Ptr AssocAlgebra<K>::create(AlgebraTable<K> table, std::vector<Vec<K>> idempotents,
                                                     std::optional<std::vector<Arrow<K>>> arrows,
                                                     std::vector<std::string> vertex_labels) {
  const K& k = table.field();
  const std::size_t d = table.dim(), n = idempotents.size();
  if (d == 0) throw Error(ErrorKind::InvalidInput, "zero algebra");
  if (!table.has_unit()) throw Error(ErrorKind::InvalidInput, "declared unit is not a two-sided identity");
  if (!table.is_associative()) throw Error(ErrorKind::InvalidInput, "structure constants are not associative");
  Vec<K> sum(d, k.zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (idempotents[i].size() != d) throw Error(ErrorKind::DimensionMismatch, "idempotent of wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      auto p = table.mul(idempotents[i], idempotents[j]);
      if (i == j ? p != idempotents[i] : !is_zero_vec(k, p))
        throw Error(ErrorKind::InvalidInput, "idempotents are not orthogonal idempotents");
    }
    sum = vec_add(k, sum, idempotents[i]);
  }
  if (sum != table.unit()) throw Error(ErrorKind::InvalidInput, "idempotents do not sum to the unit");

  RowSpace<K> rad = radical_basis(table);
  if (d - rad.dim() != n)
    throw Error(ErrorKind::NotBasic, "dim A/J = " + std::to_string(d - rad.dim()) + " but " + std::to_string(n) +
                                         " idempotents were given; only basic split algebras are supported");
  for (std::size_t i = 0; i < n; ++i)
    if (corner_residue_dim(table, rad, idempotents[i]) != 1)
      throw Error(ErrorKind::NotBasic, "idempotent " + std::to_string(i + 1) + " is not primitive");

  auto powers = ideal_powers(table, rad);
  std::vector<Arrow<K>> chosen;
  if (arrows) {
    if (!arrows_generate(table, idempotents, rad, powers, *arrows))
      throw Error(ErrorKind::InvalidInput, "given arrows do not form a basis of J modulo J^2");
    chosen = std::move(*arrows);
  } else {
    chosen = choose_arrows(table, idempotents, rad, powers);
  }
  if (vertex_labels.empty())
    for (std::size_t i = 0; i < n; ++i) vertex_labels.push_back(std::to_string(i + 1));
  if (vertex_labels.size() != n) throw Error(ErrorKind::DimensionMismatch, "vertex label count");
  return std::make_shared<const AssocAlgebra>(Private{}, std::move(table), std::move(idempotents),
                                              std::move(chosen), std::move(rad), std::move(vertex_labels));
}

template <class K>
AssocAlgebra<K>::AssocAlgebra(Private, AlgebraTable<K> table, std::vector<Vec<K>> idempotents,
                              std::vector<Arrow<K>> arrows, RowSpace<K> radical,
                              std::vector<std::string> vertex_labels)
    : table_(std::move(table)),
      idempotents_(std::move(idempotents)),
      arrows_(std::move(arrows)),
      radical_(std::move(radical)),
      vertex_labels_(std::move(vertex_labels)) {
  build_words();
  std::ostringstream os;
  os << table_.canonical_text() << "|";
  for (const auto& e : idempotents_)
    for (const auto& x : e) os << field().to_string(x) << ",";
  os << "|";
  for (const auto& a : arrows_) {
    os << a.source << ">" << a.target << ":";
    for (const auto& x : a.element) os << field().to_string(x) << ",";
  }
  fingerprint_ = fnv1a(os.str());
}

template <class K>
void AssocAlgebra<K>::build_words() {
  const K& k = field();
  const std::size_t d = dim(), n = num_vertices();
  std::vector<Matrix<K>> right;
  for (const auto& a : arrows_) right.push_back(table_.right_mult(a.element));
  RowSpace<K> span(k, d);
  std::vector<Vec<K>> vecs;
  for (std::size_t i = 0; i < n; ++i) {
    span.insert(idempotents_[i]);
    vecs.push_back(idempotents_[i]);
    words_.push_back({Word::kNone, Word::kNone, i, i, 0});
  }
  for (std::size_t q = 0; q < words_.size() && span.dim() < d; ++q)
    for (std::size_t a = 0; a < arrows_.size(); ++a) {
      if (arrows_[a].source != words_[q].end) continue;
      Vec<K> v = vec_mat(vecs[q], right[a]);
      if (span.insert(v)) {
        vecs.push_back(std::move(v));
        words_.push_back({q, a, words_[q].start, arrows_[a].target, words_[q].length + 1});
      }
    }
  if (span.dim() != d) throw Error(ErrorKind::NotBasic, "idempotents and arrows do not generate the algebra");
  word_matrix_ = Matrix<K>::from_rows(k, vecs, d);
  auto inv = inverse(word_matrix_);
  if (!inv) throw Error(ErrorKind::InternalInconsistency, "word basis is singular");
  word_inverse_ = std::move(*inv);
  words_at_.assign(n, {});
  word_position_.assign(d, 0);
  for (std::size_t w = 0; w < d; ++w) {
    word_position_[w] = words_at_[words_[w].start].size();
    words_at_[words_[w].start].push_back(w);
  }
  for (std::size_t g = 0; g < num_generators(); ++g)
    regular_action_.push_back(matmul(matmul(word_matrix_, table_.right_mult(generator(g))), word_inverse_));
}

template <class K>
std::vector<std::vector<std::size_t>> AssocAlgebra<K>::cartan() const {
  std::vector<std::vector<std::size_t>> c(num_vertices(), std::vector<std::size_t>(num_vertices(), 0));
  for (const auto& w : words_) ++c[w.start][w.end];
  return c;
}

template <class K>
typename AssocAlgebra<K>::Ptr AssocAlgebra<K>::opposite() const {
  std::lock_guard<std::mutex> lock(op_mutex_);
  if (op_) return op_;
  if (auto back = op_back_.lock()) return back;
  std::vector<Arrow<K>> arr = arrows_;
  for (auto& a : arr) std::swap(a.source, a.target);
  auto op = std::make_shared<AssocAlgebra>(Private{}, table_.opposite(), idempotents_, std::move(arr), radical_,
                                           vertex_labels_);
  op->op_back_ = this->weak_from_this();
  op_ = op;
  return op_;
}

template <class K>
typename AssocAlgebra<K>::Ptr AssocAlgebra<K>::reordered(const std::vector<std::size_t>& order) const {
  const std::size_t n = num_vertices();
  std::vector<std::size_t> pos(n, n);
  if (order.size() != n) throw Error(ErrorKind::InvalidInput, "order must list every vertex once");
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || pos[order[i]] != n) throw Error(ErrorKind::InvalidInput, "order must be a permutation");
    pos[order[i]] = i;
  }
  std::vector<Vec<K>> idem;
  std::vector<std::string> labels;
  for (auto v : order) {
    idem.push_back(idempotents_[v]);
    labels.push_back(vertex_labels_[v]);
  }
  std::vector<Arrow<K>> arr = arrows_;
  for (auto& a : arr) {
    a.source = pos[a.source];
    a.target = pos[a.target];
  }
  return std::make_shared<const AssocAlgebra>(Private{}, table_, std::move(idem), std::move(arr), radical_,
                                              std::move(labels));
}

template <class K>
RowSpace<K> idempotent_ideal(const AssocAlgebra<K>& a, const std::vector<std::size_t>& vertices) {
  RowSpace<K> ideal(a.field(), a.dim());
  for (auto v : vertices)
    for (auto w : a.words_at(v)) {
      Vec<K> x = a.word_matrix().row(w);
      for (std::size_t b = 0; b < a.dim(); ++b) ideal.insert(a.mul(a.table().basis_vector(b), x));
    }
  return ideal;
}

template <class K>
typename AssocAlgebra<K>::Ptr AssocAlgebra<K>::quotient_by_vertices(const std::vector<std::size_t>& vertices) const {
  if (vertices.empty()) return this->shared_from_this();
  const K& k = field();
  RowSpace<K> ideal = idempotent_ideal(*this, vertices);
  auto cols = ideal.non_pivot_columns();
  if (cols.empty()) throw Error(ErrorKind::InvalidInput, "quotient by the whole algebra");
  auto project = [&](const Vec<K>& v) {
    Vec<K> r = ideal.reduce(v);
    Vec<K> out(cols.size(), k.zero());
    for (std::size_t c = 0; c < cols.size(); ++c) out[c] = r[cols[c]];
    return out;
  };
  std::vector<std::string> labels;
  for (auto c : cols) labels.push_back(table_.labels()[c]);
  auto t = AlgebraTable<K>::from_products(k, labels, project(table_.unit()), [&](std::size_t x, std::size_t y) {
    return project(table_.mul(table_.basis_vector(cols[x]), table_.basis_vector(cols[y])));
  });
  std::vector<bool> dropped(num_vertices(), false);
  for (auto v : vertices) dropped[v] = true;
  std::vector<Vec<K>> idem;
  std::vector<std::string> vlabels;
  std::vector<std::size_t> newpos(num_vertices(), 0);
  for (std::size_t i = 0; i < num_vertices(); ++i)
    if (!dropped[i]) {
      newpos[i] = idem.size();
      idem.push_back(project(idempotents_[i]));
      vlabels.push_back(vertex_labels_[i]);
    }
  std::vector<Arrow<K>> arr;
  for (const auto& a : arrows_)
    if (!dropped[a.source] && !dropped[a.target]) {
      auto e = project(a.element);
      if (!is_zero_vec(k, e)) arr.push_back({a.label, newpos[a.source], newpos[a.target], e});
    }
  auto rad = radical_basis(t);
  auto powers = ideal_powers(t, rad);
  if (arrows_generate(t, idem, rad, powers, arr))
    return create(std::move(t), std::move(idem), std::move(arr), std::move(vlabels));
  return create(std::move(t), std::move(idem), std::nullopt, std::move(vlabels));
}

template <class K>
typename AssocAlgebra<K>::Ptr AssocAlgebra<K>::corner(const std::vector<std::size_t>& vertices) const {
  const K& k = field();
  std::vector<bool> in(num_vertices(), false);
  for (auto v : vertices) in[v] = true;
  std::vector<std::size_t> ws;
  std::vector<std::size_t> local(dim(), Word::kNone);
  for (std::size_t w = 0; w < dim(); ++w)
    if (in[words_[w].start] && in[words_[w].end]) {
      local[w] = ws.size();
      ws.push_back(w);
    }
  auto restrict = [&](const Vec<K>& x) {
    Vec<K> c = word_coordinates(x);
    Vec<K> out(ws.size(), k.zero());
    for (std::size_t w = 0; w < dim(); ++w) {
      if (k.is_zero(c[w])) continue;
      if (local[w] == Word::kNone) throw Error(ErrorKind::InternalInconsistency, "corner product escapes");
      out[local[w]] = c[w];
    }
    return out;
  };
  std::vector<std::string> labels;
  for (auto w : ws) labels.push_back("w" + std::to_string(w + 1));
  Vec<K> unit(ws.size(), k.zero());
  std::vector<Vec<K>> idem;
  std::vector<std::string> vlabels;
  for (auto v : vertices) {
    Vec<K> e(ws.size(), k.zero());
    e[local[v]] = k.one();
    unit = vec_add(k, unit, e);
    idem.push_back(e);
    vlabels.push_back(vertex_labels_[v]);
  }
  auto t = AlgebraTable<K>::from_products(k, labels, unit, [&](std::size_t x, std::size_t y) {
    return restrict(mul(word_matrix_.row(ws[x]), word_matrix_.row(ws[y])));
  });
  return create(std::move(t), std::move(idem), std::nullopt, std::move(vlabels));
}

template <class K>
std::vector<std::size_t> radical_layers(const AssocAlgebra<K>& a) {
  std::vector<std::size_t> out{a.dim() - a.radical().dim()};
  auto pw = ideal_powers(a.table(), a.radical());
  for (std::size_t i = 0; i < pw.size(); ++i)
    out.push_back(pw[i].dim() - (i + 1 < pw.size() ? pw[i + 1].dim() : 0));
  return out;
}

#define STRATIKIT_INSTANTIATE_ALGEBRA(K)                                                          \
  template class AssocAlgebra<K>;                                                                 \
  template RowSpace<K> idempotent_ideal<K>(const AssocAlgebra<K>&, const std::vector<std::size_t>&); \
  template std::vector<std::size_t> radical_layers<K>(const AssocAlgebra<K>&);

STRATIKIT_INSTANTIATE_ALGEBRA(PrimeField)
STRATIKIT_INSTANTIATE_ALGEBRA(RationalField)

}  // namespace stratikit
