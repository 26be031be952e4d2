#pragma once

// Dense matrices over an exact field (Rat or Quad) with the reduction
// primitives everything else is built on: canonical RREF, kernel, solve,
// characteristic polynomial. Dimensions here are tiny (<= 14); plain
// Gauss-Jordan without pivot heuristics keeps results deterministic.

#include <cassert>
#include <optional>
#include <vector>

#include "lie2/scalar.hpp"

namespace lie2 {

template <class K>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<K> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, K(0)) {}

  K& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const K& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }

  Mat operator*(const Mat& o) const {
    assert(cols == o.rows);
    Mat r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        const K& x = (*this)(i, k);
        if (is_zero(x)) continue;
        for (int j = 0; j < o.cols; ++j) r(i, j) += x * o(k, j);
      }
    return r;
  }
  Mat operator+(const Mat& o) const {
    assert(rows == o.rows && cols == o.cols);
    Mat r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
    return r;
  }
  Mat operator-(const Mat& o) const {
    assert(rows == o.rows && cols == o.cols);
    Mat r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
    return r;
  }
  Mat operator*(const K& s) const {
    Mat r = *this;
    for (auto& v : r.a) v *= s;
    return r;
  }

  K trace() const {
    assert(rows == cols);
    K t(0);
    for (int i = 0; i < rows; ++i) t += (*this)(i, i);
    return t;
  }

  Mat transposed() const {
    Mat r(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  bool is_zero_mat() const {
    for (const auto& v : a)
      if (!is_zero(v)) return false;
    return true;
  }
};

// In-place reduction to canonical RREF. Returns pivot columns.
template <class K>
std::vector<int> rref(Mat<K>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int p = -1;
    for (int i = row; i < m.rows; ++i)
      if (!is_zero(m(i, col))) { p = i; break; }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(row, j));
    const K inv = K(1) / m(row, col);
    for (int j = col; j < m.cols; ++j) m(row, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      const K f = m(i, col);
      for (int j = col; j < m.cols; ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class K>
int rank(Mat<K> m) {
  return static_cast<int>(rref(m).size());
}

// Basis of the right kernel, rows in canonical RREF.
template <class K>
Mat<K> kernel(Mat<K> m) {
  const std::vector<int> piv = rref(m);
  std::vector<char> is_pivot(m.cols, 0);
  for (int c : piv) is_pivot[c] = 1;
  Mat<K> ker(m.cols - static_cast<int>(piv.size()), m.cols);
  int r = 0;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    ker(r, free) = K(1);
    for (size_t i = 0; i < piv.size(); ++i) ker(r, piv[i]) = -m(static_cast<int>(i), free);
    ++r;
  }
  rref(ker);  // canonical form
  return ker;
}

// One solution of A x = b, if any.
template <class K>
std::optional<std::vector<K>> solve(const Mat<K>& A, const std::vector<K>& b) {
  assert(static_cast<int>(b.size()) == A.rows);
  Mat<K> aug(A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) aug(i, j) = A(i, j);
    aug(i, A.cols) = b[i];
  }
  const std::vector<int> piv = rref(aug);
  if (!piv.empty() && piv.back() == A.cols) return std::nullopt;  // inconsistent
  std::vector<K> x(A.cols, K(0));
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(static_cast<int>(i), A.cols);
  return x;
}

// Coefficients (c_1..c_n) of charpoly l^n + c_1 l^(n-1) + ... + c_n,
// by the Faddeev-LeVerrier recurrence (exact; divides by integers only).
template <class K>
std::vector<K> charpoly(const Mat<K>& A) {
  assert(A.rows == A.cols);
  const int n = A.rows;
  std::vector<K> c(n + 1, K(0));
  c[0] = K(1);
  Mat<K> M = Mat<K>::identity(n);
  for (int k = 1; k <= n; ++k) {
    M = A * M;
    c[k] = -(M.trace() / K(k));
    for (int i = 0; i < n; ++i) M(i, i) += c[k];
  }
  return std::vector<K>(c.begin() + 1, c.end());
}

template <class K>
bool is_nilpotent_mat(const Mat<K>& A) {
  for (const K& c : charpoly(A))
    if (!is_zero(c)) return false;
  return true;
}

}  // namespace lie2
