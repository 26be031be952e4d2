#pragma once

// Structural analysis of a Lie algebra over an exact field: characteristic
// series, Killing form, Levi-theorem predicates, radical and nilradical.
// Everything returns subspaces of the input algebra in canonical RREF, so
// repeated runs are bit-identical.

#include <vector>

#include "lie2/subspace.hpp"

namespace lie2 {

template <class K>
Subspace<K> whole_space(const LieAlgebra<K>& A) {
  Subspace<K> s(A.n);
  s.basis = Mat<K>::identity(A.n);
  return s;
}

// g >= [g,g] >= [[g,g],[g,g]] >= ... until the chain stabilizes (RREF equality).
template <class K>
std::vector<Subspace<K>> derived_series(const LieAlgebra<K>& A) {
  std::vector<Subspace<K>> chain{whole_space(A)};
  for (;;) {
    Subspace<K> next = bracket_space(A, chain.back(), chain.back());
    if (next == chain.back()) break;
    chain.push_back(next);
    if (chain.back().dim() == 0) break;
  }
  return chain;
}

// g >= [g,g] >= [g,[g,g]] >= ...
template <class K>
std::vector<Subspace<K>> lower_central_series(const LieAlgebra<K>& A) {
  const Subspace<K> g = whole_space(A);
  std::vector<Subspace<K>> chain{g};
  for (;;) {
    Subspace<K> next = bracket_space(A, g, chain.back());
    if (next == chain.back()) break;
    chain.push_back(next);
    if (chain.back().dim() == 0) break;
  }
  return chain;
}

// {x : [x, g] <= Z} for a given subspace Z.
template <class K>
Subspace<K> centralizer_mod(const LieAlgebra<K>& A, const Subspace<K>& Z) {
  // x satisfies: for each basis e_j, [x, e_j] in Z. Build the linear system
  // on x-coordinates: rows are the components of [e_i, e_j] projected to a
  // complement of Z (coordinates after killing Z's pivots).
  const int n = A.n;
  std::vector<int> zpiv;
  {
    for (int i = 0; i < Z.dim(); ++i)
      for (int j = 0; j < n; ++j)
        if (!is_zero(Z.basis(i, j))) { zpiv.push_back(j); break; }
  }
  auto reduce_mod_Z = [&](Vec<K> v) {
    for (int i = 0; i < Z.dim(); ++i) {
      const K f = v[zpiv[i]];
      if (!is_zero(f)) vec_axpy(v, -f, Z.row(i));
    }
    return v;
  };
  Mat<K> sys(n * n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec<K> br(n, K(0));
      for (int k = 0; k < n; ++k) br[k] = A.cc(i, j, k);
      br = reduce_mod_Z(br);
      for (int k = 0; k < n; ++k) sys(j * n + k, i) = br[k];
    }
  Mat<K> ker = kernel(sys);
  std::vector<Vec<K>> vecs;
  for (int r = 0; r < ker.rows; ++r) {
    Vec<K> v(n);
    for (int j = 0; j < n; ++j) v[j] = ker(r, j);
    vecs.push_back(v);
  }
  Subspace<K> result = Subspace<K>::span(n, vecs).sum(Z);
  return result;
}

template <class K>
Subspace<K> center(const LieAlgebra<K>& A) {
  return centralizer_mod(A, Subspace<K>(A.n));
}

// 0 <= Z(g) <= Z_2 <= ... until stabilization; returned list starts at Z(g).
template <class K>
std::vector<Subspace<K>> upper_central_series(const LieAlgebra<K>& A) {
  std::vector<Subspace<K>> chain{center(A)};
  for (;;) {
    Subspace<K> next = centralizer_mod(A, chain.back());
    if (next == chain.back()) break;
    chain.push_back(next);
    if (chain.back().dim() == A.n) break;
  }
  return chain;
}

template <class K>
Mat<K> killing_form(const LieAlgebra<K>& A) {
  std::vector<Mat<K>> ads;
  ads.reserve(A.n);
  for (int i = 0; i < A.n; ++i) ads.push_back(A.ad(A.basis_vec(i)));
  Mat<K> kappa(A.n, A.n);
  for (int i = 0; i < A.n; ++i)
    for (int j = i; j < A.n; ++j) {
      K t(0);
      for (int p = 0; p < A.n; ++p)
        for (int q = 0; q < A.n; ++q) t += ads[i](p, q) * ads[j](q, p);
      kappa(i, j) = t;
      kappa(j, i) = t;
    }
  return kappa;
}

template <class K>
bool is_abelian(const LieAlgebra<K>& A) {
  for (const K& v : A.c)
    if (!is_zero(v)) return false;
  return true;
}

template <class K>
bool is_solvable(const LieAlgebra<K>& A) {
  return derived_series(A).back().dim() == 0;
}

template <class K>
bool is_nilpotent(const LieAlgebra<K>& A) {
  return lower_central_series(A).back().dim() == 0;
}

template <class K>
bool is_semisimple(const LieAlgebra<K>& A) {
  if (A.n == 0) return false;
  return rank(killing_form(A)) == A.n;
}

struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Maximal solvable ideal: {x : kappa(x, [g,g]) = 0} in characteristic 0.
// The result is re-verified (ideal + solvable) before being returned.
template <class K>
Subspace<K> radical(const LieAlgebra<K>& A) {
  const Mat<K> kappa = killing_form(A);
  const Subspace<K> der = bracket_space(A, whole_space(A), whole_space(A));
  // rows: constraints kappa(x, d) = 0 for d in basis of [g,g]
  Mat<K> sys(der.dim(), A.n);
  for (int r = 0; r < der.dim(); ++r) {
    const Vec<K> d = der.row(r);
    for (int i = 0; i < A.n; ++i) {
      K t(0);
      for (int j = 0; j < A.n; ++j) t += kappa(i, j) * d[j];
      sys(r, i) = t;
    }
  }
  Mat<K> ker = kernel(sys);
  std::vector<Vec<K>> vecs;
  for (int r = 0; r < ker.rows; ++r) {
    Vec<K> v(A.n);
    for (int j = 0; j < A.n; ++j) v[j] = ker(r, j);
    vecs.push_back(v);
  }
  Subspace<K> rad = Subspace<K>::span(A.n, vecs);
  if (!rad.contains(bracket_space(A, whole_space(A), rad)))
    throw InvariantViolation("radical: result is not an ideal");
  if (rad.dim() > 0 && !is_solvable(induced_algebra(A, rad)))
    throw InvariantViolation("radical: result is not solvable");
  return rad;
}

// Maximal nilpotent ideal of a solvable algebra, via the kernel of the
// Killing form: for split solvable algebras (rational ad-characters, the
// only kind this artifact meets) ker kappa equals the common kernel of the
// characters, which is the nilradical. Post-conditions are asserted so a
// non-split input fails loudly instead of returning a wrong answer.
template <class K>
Subspace<K> nilradical(const LieAlgebra<K>& A) {
  if (!is_solvable(A)) throw std::domain_error("nilradical: input not solvable");
  Mat<K> kappa = killing_form(A);
  Mat<K> ker = kernel(kappa);
  std::vector<Vec<K>> vecs;
  for (int r = 0; r < ker.rows; ++r) {
    Vec<K> v(A.n);
    for (int j = 0; j < A.n; ++j) v[j] = ker(r, j);
    vecs.push_back(v);
  }
  Subspace<K> nr = Subspace<K>::span(A.n, vecs);
  // audits
  const Subspace<K> der = bracket_space(A, whole_space(A), whole_space(A));
  if (!nr.contains(der)) throw InvariantViolation("nilradical: does not contain [A,A]");
  if (!nr.contains(bracket_space(A, whole_space(A), nr)))
    throw InvariantViolation("nilradical: not an ideal");
  if (nr.dim() > 0 && !is_nilpotent(induced_algebra(A, nr)))
    throw InvariantViolation("nilradical: restriction not nilpotent");
  for (int i = 0; i < nr.dim(); ++i)
    if (!is_nilpotent_mat(A.ad(nr.row(i))))
      throw InvariantViolation("nilradical: element not ad-nilpotent");
  // one-vector maximality at desk scale: adjoining any basis vector outside
  // must not yield a larger nilpotent ideal
  for (int j = 0; j < A.n; ++j) {
    const Vec<K> e = A.basis_vec(j);
    if (nr.contains(e) || !is_nilpotent_mat(A.ad(e))) continue;
    const Subspace<K> ext = nr.sum(Subspace<K>::span(A.n, {e}));
    if (ext.contains(bracket_space(A, whole_space(A), ext)) &&
        is_nilpotent(induced_algebra(A, ext)))
      throw InvariantViolation("nilradical: not maximal");
  }
  return nr;
}

// Dimension of the derivation algebra Der(A) in gl(A): D[x,y]=[Dx,y]+[x,Dy].
template <class K>
int derivation_dim(const LieAlgebra<K>& A) {
  const int n = A.n;
  if (n == 0) return 0;
  // unknowns d_{pq} = coefficient of e_p in D(e_q); row per (i<j, k)
  Mat<K> sys(n * (n - 1) / 2 * n, n * n);
  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        // coefficient of e_k in D[e_i,e_j] - [De_i, e_j] - [e_i, De_j]
        for (int q = 0; q < n; ++q) {
          // D[e_i,e_j] = sum_q c_ijq D e_q -> contributes c_ijq * d_{kq}
          const K& f = A.cc(i, j, q);
          if (!is_zero(f)) sys(row, k * n + q) += f;
        }
        for (int p = 0; p < n; ++p) {
          // [De_i, e_j] = sum_p d_{pi} [e_p, e_j] -> -c_pjk * d_{pi}
          const K& f1 = A.cc(p, j, k);
          if (!is_zero(f1)) sys(row, p * n + i) -= f1;
          // [e_i, De_j] = sum_p d_{pj} [e_i, e_p] -> -c_ipk * d_{pj}
          const K& f2 = A.cc(i, p, k);
          if (!is_zero(f2)) sys(row, p * n + j) -= f2;
        }
        ++row;
      }
    }
  return n * n - rank(sys);
}

}  // namespace lie2

namespace lie2 {

// Cartan subalgebra of a solvable algebra by Fitting-null iteration:
// K := K_0(ad x) for non-nilpotently-acting x until K is nilpotent. The
// result is nilpotent and self-normalizing; weights of the algebra on any
// module are computed against it.
template <class K>
Subspace<K> solvable_cartan(const LieAlgebra<K>& A) {
  if (!is_solvable(A)) throw std::domain_error("solvable_cartan: input not solvable");
  Subspace<K> S = whole_space(A);
  for (int iter = 0; iter <= A.n + 1; ++iter) {
    LieAlgebra<K> KA = induced_algebra(A, S);
    if (is_nilpotent(KA)) return S;
    // some element of K acts non-nilpotently; basis vectors and pairwise
    // sums suffice at these dimensions
    std::optional<Vec<K>> x;
    const int d = KA.n;
    for (int i = 0; i < d && !x; ++i)
      if (!is_nilpotent_mat(KA.ad(KA.basis_vec(i)))) x = KA.basis_vec(i);
    for (int i = 0; i < d && !x; ++i)
      for (int j = i + 1; j < d && !x; ++j) {
        Vec<K> v = KA.basis_vec(i);
        vec_axpy(v, K(1), KA.basis_vec(j));
        if (!is_nilpotent_mat(KA.ad(v))) x = v;
      }
    if (!x) throw InvariantViolation("solvable_cartan: found no non-nilpotent element");
    // Fitting null component of ad x inside K, mapped back to ambient coords
    Mat<K> M = KA.ad(*x), P = M;
    for (int i = 1; i < d; ++i) P = P * M;
    Mat<K> ker = kernel(P);
    std::vector<Vec<K>> vecs;
    for (int r = 0; r < ker.rows; ++r) {
      Vec<K> v(A.n, K(0));
      for (int c = 0; c < d; ++c) vec_axpy(v, ker(r, c), S.row(c));
      vecs.push_back(v);
    }
    Subspace<K> next = Subspace<K>::span(A.n, vecs);
    if (next.dim() >= S.dim()) throw InvariantViolation("solvable_cartan: Fitting iteration stalled");
    S = next;
  }
  throw InvariantViolation("solvable_cartan: failed to stabilize");
}

}  // namespace lie2
