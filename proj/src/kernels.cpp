#include "stratikit/kernels.hpp"

#include <omp.h>

namespace stratikit {

namespace {

template <class K>
void check_product(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorKind::DimensionMismatch, "matrix product " + std::to_string(a.rows()) + "x" +
                                                  std::to_string(a.cols()) + " by " +
                                                  std::to_string(b.rows()) + "x" +
                                                  std::to_string(b.cols()));
}

template <class K>
void product_row(const Matrix<K>& a, const Matrix<K>& b, Matrix<K>& c, std::size_t i) {
  const K& k = a.field();
  auto* out = c.row_ptr(i);
  const auto* ar = a.row_ptr(i);
  for (std::size_t l = 0; l < a.cols(); ++l) {
    if (k.is_zero(ar[l])) continue;
    const auto* br = b.row_ptr(l);
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (!k.is_zero(br[j])) out[j] = k.add(out[j], k.mul(ar[l], br[j]));
  }
}

// Lazy-reduction row product for F_p: accumulate in 64 bits.
template <>
void product_row<PrimeField>(const Matrix<PrimeField>& a, const Matrix<PrimeField>& b,
                             Matrix<PrimeField>& c, std::size_t i) {
  const std::uint64_t p = a.field().characteristic();
  const std::uint64_t limit = ~std::uint64_t{0} - (p - 1) * (p - 1);
  std::vector<std::uint64_t> acc(b.cols(), 0);
  const auto* ar = a.row_ptr(i);
  for (std::size_t l = 0; l < a.cols(); ++l) {
    std::uint64_t x = ar[l];
    if (x == 0) continue;
    const auto* br = b.row_ptr(l);
    for (std::size_t j = 0; j < b.cols(); ++j) {
      acc[j] += x * br[j];
      if (acc[j] >= limit) acc[j] %= p;
    }
  }
  auto* out = c.row_ptr(i);
  for (std::size_t j = 0; j < b.cols(); ++j) out[j] = static_cast<std::uint32_t>(acc[j] % p);
}

// Eliminate column `col` from row r using normalized pivot row.
template <class K>
void eliminate_row(Matrix<K>& m, std::size_t r, std::size_t prow, std::size_t col) {
  const K& k = m.field();
  auto* row = m.row_ptr(r);
  if (k.is_zero(row[col])) return;
  const auto f = row[col];
  const auto* piv = m.row_ptr(prow);
  for (std::size_t j = col; j < m.cols(); ++j)
    if (!k.is_zero(piv[j])) row[j] = k.sub(row[j], k.mul(f, piv[j]));
}

template <class K>
bool choose_pivot(Matrix<K>& m, std::size_t rank, std::size_t col) {
  const K& k = m.field();
  std::size_t sel = m.rows();
  for (std::size_t r = rank; r < m.rows(); ++r)
    if (!k.is_zero(m(r, col))) {
      sel = r;
      break;
    }
  if (sel == m.rows()) return false;
  if (sel != rank)
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(rank, j));
  auto inv = k.inv(m(rank, col));
  auto* row = m.row_ptr(rank);
  for (std::size_t j = col; j < m.cols(); ++j) row[j] = k.mul(inv, row[j]);
  return true;
}

}  // namespace

namespace serial {

template <class K>
Matrix<K> matmul(const Matrix<K>& a, const Matrix<K>& b) {
  check_product(a, b);
  Matrix<K> c(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) product_row(a, b, c, i);
  return c;
}

template <class K>
std::vector<std::size_t> rref_inplace(Matrix<K>& m) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    if (!choose_pivot(m, rank, col)) continue;
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (r != rank) eliminate_row(m, r, rank, col);
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

}  // namespace serial

namespace parallel {

template <class K>
Matrix<K> matmul(const Matrix<K>& a, const Matrix<K>& b) {
  check_product(a, b);
  Matrix<K> c(a.field(), a.rows(), b.cols());
  const auto n = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) product_row(a, b, c, static_cast<std::size_t>(i));
  return c;
}

template <class K>
std::vector<std::size_t> rref_inplace(Matrix<K>& m) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  const auto rows = static_cast<std::ptrdiff_t>(m.rows());
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    if (!choose_pivot(m, rank, col)) continue;
    // Rows are independent once the pivot row is fixed, so the result does
    // not depend on the schedule.
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t r = 0; r < rows; ++r)
      if (static_cast<std::size_t>(r) != rank) eliminate_row(m, static_cast<std::size_t>(r), rank, col);
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

}  // namespace parallel

#define STRATIKIT_INSTANTIATE_KERNELS(K)                                      \
  template Matrix<K> serial::matmul<K>(const Matrix<K>&, const Matrix<K>&);   \
  template Matrix<K> parallel::matmul<K>(const Matrix<K>&, const Matrix<K>&); \
  template std::vector<std::size_t> serial::rref_inplace<K>(Matrix<K>&);      \
  template std::vector<std::size_t> parallel::rref_inplace<K>(Matrix<K>&);

STRATIKIT_INSTANTIATE_KERNELS(PrimeField)
STRATIKIT_INSTANTIATE_KERNELS(RationalField)

}  // namespace stratikit
