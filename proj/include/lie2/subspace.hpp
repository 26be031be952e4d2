#pragma once

// Subspaces in canonical RREF form (unique representation; equality of
// subspaces is matrix equality), span closure under the bracket, and
// restriction of structure constants to a closed subspace.

#include <stdexcept>
#include <vector>

#include "lie2/algebra.hpp"

namespace lie2 {

template <class K>
struct Subspace {
  int ambient = 0;
  Mat<K> basis;  // RREF rows, linearly independent

  Subspace() = default;
  explicit Subspace(int ambient_dim) : ambient(ambient_dim), basis(0, ambient_dim) {}

  int dim() const { return basis.rows; }

  static Subspace span(int ambient_dim, const std::vector<Vec<K>>& vecs) {
    Mat<K> m(static_cast<int>(vecs.size()), ambient_dim);
    for (size_t i = 0; i < vecs.size(); ++i)
      for (int j = 0; j < ambient_dim; ++j) m(static_cast<int>(i), j) = vecs[i][j];
    rref(m);
    Subspace s(ambient_dim);
    s.basis = trim_zero_rows(m);
    return s;
  }

  static Mat<K> trim_zero_rows(const Mat<K>& m) {
    int r = m.rows;
    while (r > 0) {
      bool zero = true;
      for (int j = 0; j < m.cols; ++j)
        if (!is_zero(m(r - 1, j))) { zero = false; break; }
      if (!zero) break;
      --r;
    }
    Mat<K> out(r, m.cols);
    std::copy(m.a.begin(), m.a.begin() + static_cast<size_t>(r) * m.cols, out.a.begin());
    return out;
  }

  Vec<K> row(int i) const {
    return Vec<K>(basis.a.begin() + static_cast<size_t>(i) * ambient,
                  basis.a.begin() + static_cast<size_t>(i + 1) * ambient);
  }

  std::vector<Vec<K>> rows() const {
    std::vector<Vec<K>> r;
    for (int i = 0; i < dim(); ++i) r.push_back(row(i));
    return r;
  }

  // Coordinates of v in the RREF basis, if v lies in the subspace.
  std::optional<Vec<K>> coords(const Vec<K>& v) const {
    Vec<K> rem = v, co(dim(), K(0));
    for (int i = 0; i < dim(); ++i) {
      int p = pivot_col(i);
      co[i] = rem[p];
      if (!is_zero(co[i])) vec_axpy(rem, -co[i], row(i));
    }
    if (!vec_is_zero(rem)) return std::nullopt;
    return co;
  }

  bool contains(const Vec<K>& v) const { return coords(v).has_value(); }

  bool contains(const Subspace& other) const {
    for (int i = 0; i < other.dim(); ++i)
      if (!contains(other.row(i))) return false;
    return true;
  }

  friend bool operator==(const Subspace& x, const Subspace& y) {
    return x.ambient == y.ambient && x.basis == y.basis;
  }

  Subspace sum(const Subspace& other) const {
    auto r = rows();
    for (auto& v : other.rows()) r.push_back(v);
    return span(ambient, r);
  }

  Subspace intersect(const Subspace& other) const {
    // rows of [A; B]: kernel combos give intersection
    Mat<K> stacked(dim() + other.dim(), ambient);
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < ambient; ++j) stacked(i, j) = basis(i, j);
    for (int i = 0; i < other.dim(); ++i)
      for (int j = 0; j < ambient; ++j) stacked(dim() + i, j) = other.basis(i, j);
    Mat<K> ker = kernel(stacked.transposed());
    std::vector<Vec<K>> vecs;
    for (int r = 0; r < ker.rows; ++r) {
      Vec<K> v(ambient, K(0));
      for (int i = 0; i < dim(); ++i) vec_axpy(v, ker(r, i), row(i));
      vecs.push_back(v);
    }
    return span(ambient, vecs);
  }

 private:
  int pivot_col(int i) const {
    for (int j = 0; j < ambient; ++j)
      if (!is_zero(basis(i, j))) return j;
    throw std::logic_error("zero row in subspace basis");
  }
};

// Span of all brackets [s, t], s in S, t in T.
template <class K>
Subspace<K> bracket_space(const LieAlgebra<K>& A, const Subspace<K>& S, const Subspace<K>& T) {
  std::vector<Vec<K>> vecs;
  for (int i = 0; i < S.dim(); ++i)
    for (int j = 0; j < T.dim(); ++j) vecs.push_back(A.bracket(S.row(i), T.row(j)));
  return Subspace<K>::span(A.n, vecs);
}

// Smallest subalgebra containing gens: span extension by pairwise brackets
// to a fixed point. Terminates within dim(A) rounds since the span grows.
template <class K>
Subspace<K> closure(const LieAlgebra<K>& A, const std::vector<Vec<K>>& gens) {
  if (gens.empty()) throw std::domain_error("closure of empty generator set");
  Subspace<K> S = Subspace<K>::span(A.n, gens);
  for (int round = 0; round <= A.n; ++round) {
    Subspace<K> next = S.sum(bracket_space(A, S, S));
    if (next == S) return S;
    S = next;
  }
  throw std::logic_error("closure failed to stabilize");
}

struct NotSubalgebra : std::runtime_error {
  int wi, wj;  // witness pair of basis indices whose bracket escapes
  NotSubalgebra(int i, int j)
      : std::runtime_error("not a subalgebra: bracket of basis rows " + std::to_string(i) + "," + std::to_string(j) + " escapes the span"),
        wi(i), wj(j) {}
};

// Structure constants of the restriction to a closed subspace, in its RREF basis.
template <class K>
LieAlgebra<K> induced_algebra(const LieAlgebra<K>& A, const Subspace<K>& S, std::string label = "") {
  const int d = S.dim();
  LieAlgebra<K> B(d, std::move(label));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const Vec<K> br = A.bracket(S.row(i), S.row(j));
      auto co = S.coords(br);
      if (!co) throw NotSubalgebra(i, j);
      for (int k = 0; k < d; ++k) B.set(i, j, k, (*co)[k]);
    }
  return B;
}

}  // namespace lie2
