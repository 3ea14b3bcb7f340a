#pragma once

#include <cstddef>
#include <vector>

#include "stratikit/matrix.hpp"

namespace stratikit {

/// Reference implementations, kept single threaded for testing.
namespace serial {
template <class K>
Matrix<K> matmul(const Matrix<K>& a, const Matrix<K>& b);
/// In-place Gauss-Jordan; returns pivot columns.
template <class K>
std::vector<std::size_t> rref_inplace(Matrix<K>& m);
}  // namespace serial

/// OpenMP kernels. Output is identical to the serial versions.
namespace parallel {
template <class K>
Matrix<K> matmul(const Matrix<K>& a, const Matrix<K>& b);
template <class K>
std::vector<std::size_t> rref_inplace(Matrix<K>& m);
}  // namespace parallel

/// Work size (rows * cols) above which the dispatchers use the OpenMP kernels.
inline constexpr std::size_t kParallelThreshold = 1u << 14;

template <class K>
Matrix<K> matmul(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() * b.cols() >= kParallelThreshold) return parallel::matmul(a, b);
  return serial::matmul(a, b);
}

template <class K>
std::vector<std::size_t> rref_inplace(Matrix<K>& m) {
  if (m.rows() * m.cols() >= kParallelThreshold) return parallel::rref_inplace(m);
  return serial::rref_inplace(m);
}

}  // namespace stratikit
