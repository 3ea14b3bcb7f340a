#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "stratikit/field.hpp"

namespace stratikit {

template <class K>
using Vec = std::vector<typename K::Elem>;

/// Dense row-major matrix over an exact field. Vectors are rows; a linear
/// map v -> v M is stored as the matrix M.
template <class K>
class Matrix {
 public:
  using Elem = typename K::Elem;

  Matrix() = default;
  Matrix(const K& k, std::size_t rows, std::size_t cols)
      : k_(k), rows_(rows), cols_(cols), data_(rows * cols, k.zero()) {}

  static Matrix identity(const K& k, std::size_t n) {
    Matrix m(k, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = k.one();
    return m;
  }

  static Matrix from_rows(const K& k, const std::vector<Vec<K>>& rows, std::size_t cols) {
    Matrix m(k, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols)
        throw Error(ErrorKind::DimensionMismatch, "ragged rows in matrix construction");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  const K& field() const { return k_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Elem* row_ptr(std::size_t i) { return data_.data() + i * cols_; }
  const Elem* row_ptr(std::size_t i) const { return data_.data() + i * cols_; }

  Vec<K> row(std::size_t i) const { return Vec<K>(row_ptr(i), row_ptr(i) + cols_); }
  void set_row(std::size_t i, const Vec<K>& v) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
  }
  void append_row(const Vec<K>& v) {
    if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "row length mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
  }
  std::vector<Vec<K>> row_list() const {
    std::vector<Vec<K>> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!k_.is_zero(x)) return false;
    return true;
  }
  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Matrix transpose() const {
    Matrix t(k_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  std::vector<Elem>& raw() { return data_; }
  const std::vector<Elem>& raw() const { return data_; }

 private:
  K k_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

// ---- small vector helpers ----

template <class K>
Vec<K> zero_vec(const K& k, std::size_t n) {
  return Vec<K>(n, k.zero());
}

template <class K>
Vec<K> unit_vec(const K& k, std::size_t n, std::size_t i) {
  Vec<K> v(n, k.zero());
  v[i] = k.one();
  return v;
}

template <class K>
bool is_zero_vec(const K& k, const Vec<K>& v) {
  for (const auto& x : v)
    if (!k.is_zero(x)) return false;
  return true;
}

/// y += a * x
template <class K>
void axpy(const K& k, Vec<K>& y, const typename K::Elem& a, const Vec<K>& x) {
  if (k.is_zero(a)) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!k.is_zero(x[i])) y[i] = k.add(y[i], k.mul(a, x[i]));
}

template <class K>
Vec<K> scaled(const K& k, const typename K::Elem& a, const Vec<K>& x) {
  Vec<K> y(x.size(), k.zero());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = k.mul(a, x[i]);
  return y;
}

template <class K>
Vec<K> vec_add(const K& k, const Vec<K>& a, const Vec<K>& b) {
  Vec<K> c(a.size(), k.zero());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = k.add(a[i], b[i]);
  return c;
}

template <class K>
Vec<K> vec_sub(const K& k, const Vec<K>& a, const Vec<K>& b) {
  Vec<K> c(a.size(), k.zero());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = k.sub(a[i], b[i]);
  return c;
}

template <class K>
typename K::Elem dot(const K& k, const Vec<K>& a, const Vec<K>& b) {
  typename K::Elem s = k.zero();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!k.is_zero(a[i]) && !k.is_zero(b[i])) s = k.add(s, k.mul(a[i], b[i]));
  return s;
}

/// v M for a row vector v; zero entries of v are skipped.
template <class K>
Vec<K> vec_mat(const Vec<K>& v, const Matrix<K>& m) {
  const K& k = m.field();
  if (v.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "vector-matrix product");
  Vec<K> out(m.cols(), k.zero());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (k.is_zero(v[i])) continue;
    const auto* r = m.row_ptr(i);
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!k.is_zero(r[j])) out[j] = k.add(out[j], k.mul(v[i], r[j]));
  }
  return out;
}

template <class K>
Matrix<K> mat_add(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::DimensionMismatch, "matrix sum");
  Matrix<K> c = a;
  for (std::size_t i = 0; i < c.raw().size(); ++i) c.raw()[i] = a.field().add(a.raw()[i], b.raw()[i]);
  return c;
}

template <class K>
Matrix<K> mat_sub(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::DimensionMismatch, "matrix difference");
  Matrix<K> c = a;
  for (std::size_t i = 0; i < c.raw().size(); ++i) c.raw()[i] = a.field().sub(a.raw()[i], b.raw()[i]);
  return c;
}

template <class K>
Matrix<K> mat_scale(const typename K::Elem& s, const Matrix<K>& a) {
  Matrix<K> c = a;
  for (auto& x : c.raw()) x = a.field().mul(s, x);
  return c;
}

/// c += s * a
template <class K>
void mat_axpy(Matrix<K>& c, const typename K::Elem& s, const Matrix<K>& a) {
  const K& k = a.field();
  if (k.is_zero(s)) return;
  for (std::size_t i = 0; i < c.raw().size(); ++i)
    if (!k.is_zero(a.raw()[i])) c.raw()[i] = k.add(c.raw()[i], k.mul(s, a.raw()[i]));
}

template <class K>
Matrix<K> vstack(const K& k, const std::vector<Matrix<K>>& parts, std::size_t cols) {
  Matrix<K> out(k, 0, cols);
  for (const auto& p : parts)
    for (std::size_t i = 0; i < p.rows(); ++i) out.append_row(p.row(i));
  return out;
}

template <class K>
Matrix<K> block_diag(const K& k, const std::vector<Matrix<K>>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix<K> out(k, r, c);
  std::size_t ro = 0, co = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(ro + i, co + j) = b(i, j);
    ro += b.rows();
    co += b.cols();
  }
  return out;
}

template <class K>
std::vector<std::string> to_strings(const K& k, const Vec<K>& v) {
  std::vector<std::string> s;
  s.reserve(v.size());
  for (const auto& x : v) s.push_back(k.to_string(x));
  return s;
}

}  // namespace stratikit
