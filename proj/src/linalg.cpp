#include "stratikit/linalg.hpp"

#include <algorithm>

namespace stratikit {

template <class K>
RrefResult<K> rref(const Matrix<K>& m) {
  RrefResult<K> r{m, {}, 0};
  r.pivots = rref_inplace(r.reduced);
  r.rank = r.pivots.size();
  return r;
}

template <class K>
std::size_t rank(const Matrix<K>& m) {
  Matrix<K> c = m;
  return rref_inplace(c).size();
}

template <class K>
std::vector<Vec<K>> kernel_basis(const Matrix<K>& m) {
  const K& k = m.field();
  auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vec<K>> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec<K> v(m.cols(), k.zero());
    v[f] = k.one();
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = k.neg(r.reduced(i, f));
    out.push_back(std::move(v));
  }
  return out;
}

template <class K>
Matrix<K> left_kernel(const Matrix<K>& m) {
  auto vs = kernel_basis(m.transpose());
  return Matrix<K>::from_rows(m.field(), vs, m.rows());
}

template <class K>
std::optional<Vec<K>> solve_linear(const Matrix<K>& a, const Vec<K>& b) {
  const K& k = a.field();
  if (b.size() != a.rows())
    throw Error(ErrorKind::DimensionMismatch, "right-hand side has length " + std::to_string(b.size()) +
                                                  ", matrix has " + std::to_string(a.rows()) + " rows");
  Matrix<K> aug(k, a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto piv = rref_inplace(aug);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  Vec<K> x(a.cols(), k.zero());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, a.cols());
  return x;
}

template <class K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m) {
  const K& k = m.field();
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<K> aug(k, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = k.one();
  }
  auto piv = rref_inplace(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix<K> inv(k, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

template <class K>
Matrix<K> row_space(const Matrix<K>& m) {
  auto r = rref(m);
  Matrix<K> out(m.field(), r.rank, m.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = r.reduced(i, j);
  return out;
}

template <>
bool is_invertible<PrimeField>(const Matrix<PrimeField>& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

template <>
bool is_invertible<RationalField>(const Matrix<RationalField>& m) {
  if (m.rows() != m.cols()) return false;
  static const PrimeField big(2147483647u);
  Matrix<PrimeField> red(big, m.rows(), m.cols());
  bool reducible = true;
  for (std::size_t i = 0; i < m.rows() && reducible; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& q = m(i, j);
      if (mpz_class(q.get_den() % 2147483647u) == 0) {
        reducible = false;
        break;
      }
      red(i, j) = big.from_rational(q);
    }
  if (reducible && rank(red) == m.rows()) return true;
  return rank(m) == m.rows();
}

// ---- RowSpace ----

template <class K>
Vec<K> RowSpace<K>::reduce(const Vec<K>& v) const {
  if (v.size() != n_) throw Error(ErrorKind::DimensionMismatch, "vector outside the ambient space");
  Vec<K> r = v;
  for (std::size_t i = 0; i < echelon_.size(); ++i) {
    const auto c = r[pivots_[i]];
    if (!k_.is_zero(c)) axpy(k_, r, k_.neg(c), echelon_[i]);
  }
  return r;
}

template <class K>
bool RowSpace<K>::insert(const Vec<K>& v) {
  if (v.size() != n_) throw Error(ErrorKind::DimensionMismatch, "vector outside the ambient space");
  Vec<K> r = v;
  const std::size_t s = accepted_.size();
  Vec<K> t(s + 1, k_.zero());
  t[s] = k_.one();
  for (std::size_t i = 0; i < echelon_.size(); ++i) {
    const auto c = r[pivots_[i]];
    if (k_.is_zero(c)) continue;
    const auto nc = k_.neg(c);
    axpy(k_, r, nc, echelon_[i]);
    for (std::size_t j = 0; j < transform_[i].size(); ++j)
      if (!k_.is_zero(transform_[i][j])) t[j] = k_.add(t[j], k_.mul(nc, transform_[i][j]));
  }
  std::size_t piv = n_;
  for (std::size_t j = 0; j < n_; ++j)
    if (!k_.is_zero(r[j])) {
      piv = j;
      break;
    }
  if (piv == n_) return false;
  const auto inv = k_.inv(r[piv]);
  r = scaled(k_, inv, r);
  t = scaled(k_, inv, t);
  for (auto& tr : transform_) tr.resize(s + 1, k_.zero());
  for (std::size_t i = 0; i < echelon_.size(); ++i) {
    const auto c = echelon_[i][piv];
    if (k_.is_zero(c)) continue;
    const auto nc = k_.neg(c);
    axpy(k_, echelon_[i], nc, r);
    axpy(k_, transform_[i], nc, t);
  }
  auto pos = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin());
  echelon_.insert(echelon_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
  transform_.insert(transform_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(t));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), piv);
  accepted_.push_back(v);
  return true;
}

template <class K>
std::optional<Vec<K>> RowSpace<K>::coordinates(const Vec<K>& v) const {
  if (v.size() != n_) throw Error(ErrorKind::DimensionMismatch, "vector outside the ambient space");
  Vec<K> r = v;
  Vec<K> c(accepted_.size(), k_.zero());
  for (std::size_t i = 0; i < echelon_.size(); ++i) {
    const auto a = r[pivots_[i]];
    if (k_.is_zero(a)) continue;
    axpy(k_, r, k_.neg(a), echelon_[i]);
    axpy(k_, c, a, transform_[i]);
  }
  if (!is_zero_vec(k_, r)) return std::nullopt;
  return c;
}

template <class K>
Matrix<K> RowSpace<K>::basis() const {
  return Matrix<K>::from_rows(k_, accepted_, n_);
}

template <class K>
Matrix<K> RowSpace<K>::echelon_basis() const {
  return Matrix<K>::from_rows(k_, echelon_, n_);
}

template <class K>
std::vector<std::size_t> RowSpace<K>::non_pivot_columns() const {
  std::vector<std::size_t> out;
  std::size_t p = 0;
  for (std::size_t j = 0; j < n_; ++j) {
    if (p < pivots_.size() && pivots_[p] == j) {
      ++p;
      continue;
    }
    out.push_back(j);
  }
  return out;
}

template <class K>
RowSpace<K> intersect(const RowSpace<K>& a, const RowSpace<K>& b) {
  // v in both iff v = x A = y B; solve [A; -B] kernel on the left.
  const K& k = a.field();
  Matrix<K> ab = a.basis();
  Matrix<K> bb = b.basis();
  Matrix<K> stacked(k, ab.rows() + bb.rows(), a.ambient());
  for (std::size_t i = 0; i < ab.rows(); ++i) stacked.set_row(i, ab.row(i));
  for (std::size_t i = 0; i < bb.rows(); ++i) stacked.set_row(ab.rows() + i, scaled(k, k.neg(k.one()), bb.row(i)));
  Matrix<K> lk = left_kernel(stacked);
  RowSpace<K> out(k, a.ambient());
  for (std::size_t r = 0; r < lk.rows(); ++r) {
    Vec<K> x(lk.row_ptr(r), lk.row_ptr(r) + ab.rows());
    out.insert(vec_mat(x, ab));
  }
  return out;
}

#define STRATIKIT_INSTANTIATE_LINALG(K)                                              \
  template RrefResult<K> rref<K>(const Matrix<K>&);                                  \
  template std::size_t rank<K>(const Matrix<K>&);                                    \
  template std::vector<Vec<K>> kernel_basis<K>(const Matrix<K>&);                    \
  template Matrix<K> left_kernel<K>(const Matrix<K>&);                               \
  template std::optional<Vec<K>> solve_linear<K>(const Matrix<K>&, const Vec<K>&);   \
  template std::optional<Matrix<K>> inverse<K>(const Matrix<K>&);                    \
  template Matrix<K> row_space<K>(const Matrix<K>&);                                 \
  template class RowSpace<K>;                                                        \
  template RowSpace<K> intersect<K>(const RowSpace<K>&, const RowSpace<K>&);

STRATIKIT_INSTANTIATE_LINALG(PrimeField)
STRATIKIT_INSTANTIATE_LINALG(RationalField)

}  // namespace stratikit
