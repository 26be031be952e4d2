#pragma once

// Finite-dimensional Lie algebra as a structure-constant tensor over an
// exact field, with the bracket as the bilinear extension and the Jacobi
// checker as the consistency gate for every ingested table.

#include <string>
#include <vector>

#include "lie2/matrix.hpp"

namespace lie2 {

template <class K>
using Vec = std::vector<K>;

template <class K>
bool vec_is_zero(const Vec<K>& v) {
  for (const K& x : v)
    if (!is_zero(x)) return false;
  return true;
}

template <class K>
void vec_axpy(Vec<K>& y, const K& a, const Vec<K>& x) {
  for (size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

template <class K>
struct JacobiViolation {
  int i, j, k;
  Vec<K> residual;
};

template <class K>
struct LieAlgebra {
  int n = 0;
  std::string label;
  std::vector<K> c;  // c[(i*n + j)*n + k]: [e_i, e_j] = sum_k c_ijk e_k

  LieAlgebra() = default;
  explicit LieAlgebra(int dim, std::string name = "")
      : n(dim), label(std::move(name)), c(static_cast<size_t>(dim) * dim * dim, K(0)) {}

  const K& cc(int i, int j, int k) const { return c[(static_cast<size_t>(i) * n + j) * n + k]; }

  // Sets [e_i, e_j] coefficient on e_k, maintaining antisymmetry.
  void set(int i, int j, int k, const K& v) {
    c[(static_cast<size_t>(i) * n + j) * n + k] = v;
    c[(static_cast<size_t>(j) * n + i) * n + k] = -v;
  }

  Vec<K> basis_vec(int i) const {
    Vec<K> v(n, K(0));
    v[i] = K(1);
    return v;
  }

  Vec<K> bracket(const Vec<K>& x, const Vec<K>& y) const {
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
      throw std::domain_error("bracket: dimension mismatch");
    Vec<K> r(n, K(0));
    for (int i = 0; i < n; ++i) {
      if (is_zero(x[i])) continue;
      for (int j = 0; j < n; ++j) {
        if (is_zero(y[j])) continue;
        const K f = x[i] * y[j];
        for (int k = 0; k < n; ++k) {
          const K& s = cc(i, j, k);
          if (!is_zero(s)) r[k] += f * s;
        }
      }
    }
    return r;
  }

  // ad(x) as a matrix acting on coordinate columns.
  Mat<K> ad(const Vec<K>& x) const {
    Mat<K> m(n, n);
    for (int j = 0; j < n; ++j) {
      const Vec<K> col = bracket(x, basis_vec(j));
      for (int k = 0; k < n; ++k) m(k, j) = col[k];
    }
    return m;
  }

  std::vector<JacobiViolation<K>> check_jacobi() const {
    std::vector<JacobiViolation<K>> bad;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          Vec<K> r = bracket(basis_vec(i), bracket(basis_vec(j), basis_vec(k)));
          vec_axpy(r, K(1), bracket(basis_vec(j), bracket(basis_vec(k), basis_vec(i))));
          vec_axpy(r, K(1), bracket(basis_vec(k), bracket(basis_vec(i), basis_vec(j))));
          if (!vec_is_zero(r)) bad.push_back({i, j, k, std::move(r)});
        }
    return bad;
  }

  bool antisymmetric() const {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (cc(i, j, k) != -cc(j, i, k)) return false;
    return true;
  }
};

// Direct sum: block structure constants, no cross terms.
template <class K>
LieAlgebra<K> direct_sum(const LieAlgebra<K>& A, const LieAlgebra<K>& B) {
  LieAlgebra<K> S(A.n + B.n, A.label.empty() || B.label.empty() ? "" : A.label + "+" + B.label);
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.n; ++j)
      for (int k = 0; k < A.n; ++k)
        S.c[(static_cast<size_t>(i) * S.n + j) * S.n + k] = A.cc(i, j, k);
  for (int i = 0; i < B.n; ++i)
    for (int j = 0; j < B.n; ++j)
      for (int k = 0; k < B.n; ++k)
        S.c[(static_cast<size_t>(i + A.n) * S.n + (j + A.n)) * S.n + (k + A.n)] = B.cc(i, j, k);
  return S;
}

// Structure constants in a new basis given by rows of P (new_i = sum P(i,j) e_j).
template <class K>
LieAlgebra<K> change_basis(const LieAlgebra<K>& A, const Mat<K>& P) {
  const int n = A.n;
  // coordinates of old basis in the new one: solve P^T y = e
  Mat<K> Pt = P.transposed();
  LieAlgebra<K> B(n, A.label);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec<K> bi(P.a.begin() + static_cast<size_t>(i) * n, P.a.begin() + static_cast<size_t>(i + 1) * n);
      Vec<K> bj(P.a.begin() + static_cast<size_t>(j) * n, P.a.begin() + static_cast<size_t>(j + 1) * n);
      const Vec<K> br = A.bracket(bi, bj);
      auto y = solve(Pt, br);
      if (!y) throw std::domain_error("change_basis: matrix not invertible");
      for (int k = 0; k < n; ++k) B.set(i, j, k, (*y)[k]);
    }
  return B;
}

}  // namespace lie2

namespace lie2 {

inline Vec<Quad> to_quad(const Vec<Rat>& v) {
  Vec<Quad> r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Quad(v[i]);
  return r;
}

inline LieAlgebra<Quad> to_quad(const LieAlgebra<Rat>& A) {
  LieAlgebra<Quad> B(A.n, A.label);
  for (size_t i = 0; i < A.c.size(); ++i) B.c[i] = Quad(A.c[i]);
  return B;
}

}  // namespace lie2
