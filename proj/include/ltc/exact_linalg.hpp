#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ltc/prime_field.hpp"

namespace ltc {

/// Dense row-major matrix over an arbitrary exact scalar.  Only what the
/// rank routines need; this is not a general linear algebra type.
template <typename T>
struct DenseMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<T> a;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  T& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const T& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// Rank over F_p by Gaussian elimination with nonzero pivoting.  Exact.
inline int rank_mod_p(DenseMatrix<Fp61> m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank)
      for (std::size_t j = col; j < m.cols; ++j)
        std::swap(m.at(pivot, j), m.at(rank, j));
    Fp61 inv = m.at(rank, col).inverse();
    for (std::size_t i = rank + 1; i < m.rows; ++i) {
      if (m.at(i, col).is_zero()) continue;
      Fp61 f = m.at(i, col) * inv;
      for (std::size_t j = col; j < m.cols; ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(rank, j);
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

/// Rank over the rationals of an integer matrix, by fraction-free
/// (Bareiss) elimination.  All intermediate values are minors of the
/// input, so with a big-integer scalar the computation is exact with no
/// growth surprises.  The scalar must support *, -, /, == and != with 0.
template <typename Int>
int rank_fraction_free(DenseMatrix<Int> m) {
  const Int zero(0);
  Int prev(1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && m.at(pivot, col) == zero) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < m.cols; ++j)
        std::swap(m.at(pivot, j), m.at(rank, j));
    for (std::size_t i = rank + 1; i < m.rows; ++i) {
      for (std::size_t j = col + 1; j < m.cols; ++j) {
        Int t = m.at(rank, col) * m.at(i, j) - m.at(i, col) * m.at(rank, j);
        m.at(i, j) = t / prev; // exact by the Bareiss identity
      }
      m.at(i, col) = zero;
    }
    prev = m.at(rank, col);
    ++rank;
  }
  return static_cast<int>(rank);
}

} // namespace ltc
