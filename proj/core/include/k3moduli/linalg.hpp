// linalg.hpp — dense linear algebra over an arbitrary field (characteristic 2).
//
// The element type K must provide is_zero(), inverse(), +, *, ==.  Because
// some field types carry a runtime context (GFElement), a matrix stores
// explicit zero and one elements instead of default-constructing them.
#pragma once

#include <vector>

#include "errors.hpp"

namespace k3m {

template <class K>
struct Mat {
  size_t rows = 0, cols = 0;
  std::vector<K> a;
  K zero, one;

  Mat(size_t r, size_t c, K zero_el, K one_el)
      : rows(r), cols(c), a(r * c, zero_el), zero(zero_el), one(one_el) {}

  K& at(size_t r, size_t c) { return a[r * cols + c]; }
  const K& at(size_t r, size_t c) const { return a[r * cols + c]; }
};

// In-place reduced row echelon form; returns the rank.  Characteristic 2, so
// subtraction is addition throughout.
template <class K>
size_t rref(Mat<K>& m, std::vector<size_t>* pivot_cols = nullptr) {
  size_t rank = 0;
  for (size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    size_t piv = rank;
    while (piv < m.rows && m.at(piv, col).is_zero()) ++piv;
    if (piv == m.rows) continue;
    for (size_t c = 0; c < m.cols; ++c) std::swap(m.at(rank, c), m.at(piv, c));
    K inv = m.at(rank, col).inverse();
    for (size_t c = col; c < m.cols; ++c) m.at(rank, c) = m.at(rank, c) * inv;
    for (size_t r = 0; r < m.rows; ++r) {
      if (r == rank || m.at(r, col).is_zero()) continue;
      K f = m.at(r, col);
      for (size_t c = col; c < m.cols; ++c)
        m.at(r, c) = m.at(r, c) + f * m.at(rank, c);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

template <class K>
size_t rank_of(Mat<K> m) {
  return rref(m);
}

// Basis of the right null space (vectors x with M x = 0).
template <class K>
std::vector<std::vector<K>> nullspace(Mat<K> m) {
  std::vector<size_t> pivots;
  rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<K>> basis;
  for (size_t free_col = 0; free_col < m.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<K> v(m.cols, m.zero);
    v[free_col] = m.one;
    for (size_t r = 0; r < pivots.size(); ++r) {
      // Row r reads x[pivots[r]] + sum over free columns = 0.
      v[pivots[r]] = m.at(r, free_col);  // char 2: negation is identity
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// 3x3 determinant, used for collinearity tests.
template <class K>
K det3(const K& a, const K& b, const K& c, const K& d, const K& e, const K& f,
       const K& g, const K& h, const K& i) {
  return a * (e * i + f * h) + b * (d * i + f * g) + c * (d * h + e * g);
}

}  // namespace k3m
