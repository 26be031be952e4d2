#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lie2/analysis.hpp"

using namespace lie2;

namespace {

// Appendix reference algebras used as hand-built fixtures here; the shipped
// catalog is exercised separately in test_catalog.
LieAlgebra<Rat> heisenberg3() {
  LieAlgebra<Rat> A(3, "n_3_1");
  A.set(1, 2, 0, Rat(1));  // [e2, e3] = e1
  return A;
}

LieAlgebra<Rat> n41() {
  LieAlgebra<Rat> A(4, "n_4_1");
  A.set(1, 3, 0, Rat(1));  // [e2, e4] = e1
  A.set(2, 3, 1, Rat(1));  // [e3, e4] = e2
  return A;
}

LieAlgebra<Rat> sl2() {
  // basis (h, p+, p-)
  LieAlgebra<Rat> A(3, "A1");
  A.set(0, 1, 1, Rat(2));
  A.set(0, 2, 2, Rat(-2));
  A.set(1, 2, 0, Rat(1));
  return A;
}

LieAlgebra<Rat> abelian(int n) { return LieAlgebra<Rat>(n, "abelian"); }

LieAlgebra<Rat> s21() {
  LieAlgebra<Rat> A(2, "s_2_1");
  A.set(1, 0, 0, Rat(1));  // [e2, e1] = e1
  return A;
}

std::vector<int> dims(const std::vector<Subspace<Rat>>& chain) {
  std::vector<int> d;
  for (const auto& s : chain) d.push_back(s.dim());
  return d;
}

}  // namespace

TEST_CASE("rref and kernel are canonical") {
  Mat<Rat> m(3, 4);
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3; m(0, 3) = 4;
  m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6; m(1, 3) = 8;
  m(2, 0) = 0; m(2, 1) = 1; m(2, 2) = 1; m(2, 3) = 1;
  Mat<Rat> m2 = m;
  CHECK(rref(m).size() == 2);
  rref(m2);
  CHECK(m == m2);
  Mat<Rat> ker = kernel(m);
  CHECK(ker.rows == 2);
  // kernel rows really annihilate
  Mat<Rat> orig(3, 4);
  orig(0, 0) = 1; orig(0, 1) = 2; orig(0, 2) = 3; orig(0, 3) = 4;
  orig(1, 0) = 2; orig(1, 1) = 4; orig(1, 2) = 6; orig(1, 3) = 8;
  orig(2, 0) = 0; orig(2, 1) = 1; orig(2, 2) = 1; orig(2, 3) = 1;
  for (int r = 0; r < ker.rows; ++r)
    for (int i = 0; i < 3; ++i) {
      Rat t(0);
      for (int j = 0; j < 4; ++j) t += orig(i, j) * ker(r, j);
      CHECK(t == 0);
    }
}

TEST_CASE("charpoly") {
  Mat<Rat> m(2, 2);
  m(0, 0) = 1; m(0, 1) = 2; m(1, 0) = 3; m(1, 1) = 4;
  auto c = charpoly(m);  // l^2 - 5l - 2
  REQUIRE(c.size() == 2);
  CHECK(c[0] == Rat(-5));
  CHECK(c[1] == Rat(-2));
  Mat<Rat> nil(3, 3);
  nil(0, 1) = 1; nil(1, 2) = 1;
  CHECK(is_nilpotent_mat(nil));
  CHECK_FALSE(is_nilpotent_mat(m));
}

TEST_CASE("bracket basics") {
  auto A = heisenberg3();
  CHECK(A.antisymmetric());
  auto x = A.basis_vec(1), y = A.basis_vec(2);
  CHECK(A.bracket(x, y) == A.basis_vec(0));
  CHECK(vec_is_zero(A.bracket(x, x)));
  CHECK_THROWS_AS(A.bracket({Rat(1)}, x), std::domain_error);
}

TEST_CASE("jacobi checker") {
  CHECK(heisenberg3().check_jacobi().empty());
  CHECK(abelian(5).check_jacobi().empty());
  CHECK(sl2().check_jacobi().empty());
  // deliberately broken tensor is caught
  LieAlgebra<Rat> bad(3, "bad");
  bad.set(0, 1, 2, Rat(1));
  bad.set(1, 2, 0, Rat(1));
  bad.set(2, 0, 2, Rat(1));
  CHECK_FALSE(bad.check_jacobi().empty());
}

TEST_CASE("closure") {
  auto A = n41();
  // e2, e4 generate: [e2,e4]=e1 lands inside, [e3..] never appears
  auto S = closure(A, {A.basis_vec(1), A.basis_vec(3)});
  CHECK(S.dim() == 3);
  CHECK(S.contains(A.basis_vec(0)));
  CHECK_FALSE(S.contains(A.basis_vec(2)));
  // idempotence and monotonicity
  auto S2 = closure(A, S.rows());
  CHECK(S2 == S);
  auto single = closure(A, {A.basis_vec(0)});
  CHECK(single.dim() == 1);
}

TEST_CASE("induced algebra and not-a-subalgebra witness") {
  auto A = n41();
  auto S = Subspace<Rat>::span(4, {A.basis_vec(0), A.basis_vec(1), A.basis_vec(3)});
  auto B = induced_algebra(A, S);
  CHECK(B.n == 3);
  CHECK(B.check_jacobi().empty());
  // e3, e4 alone do not close ([e3,e4]=e2 escapes)
  auto T = Subspace<Rat>::span(4, {A.basis_vec(2), A.basis_vec(3)});
  CHECK_THROWS_AS(induced_algebra(A, T), NotSubalgebra);
}

TEST_CASE("series dimensions") {
  CHECK(dims(derived_series(n41())) == std::vector<int>{4, 2, 0});
  CHECK(dims(lower_central_series(n41())) == std::vector<int>{4, 2, 1, 0});
  CHECK(dims(lower_central_series(heisenberg3())) == std::vector<int>{3, 1, 0});
  CHECK(dims(derived_series(abelian(4))) == std::vector<int>{4, 0});
  CHECK(dims(derived_series(sl2())) == std::vector<int>{3});  // perfect, stabilizes at 3
}

TEST_CASE("center and upper central series") {
  CHECK(center(heisenberg3()).dim() == 1);
  CHECK(center(heisenberg3()).contains(heisenberg3().basis_vec(0)));
  CHECK(center(abelian(3)).dim() == 3);
  CHECK(center(sl2()).dim() == 0);
  auto ucs = upper_central_series(n41());
  CHECK(dims(ucs) == std::vector<int>{1, 2, 4});
}

TEST_CASE("killing form") {
  auto A = sl2();
  auto k = killing_form(A);
  CHECK(k(0, 0) == Rat(8));
  CHECK(k(1, 2) == Rat(4));
  CHECK(k(2, 1) == Rat(4));
  CHECK(k(0, 1) == 0);
  CHECK(k(0, 2) == 0);
  CHECK(k(1, 1) == 0);
  CHECK(killing_form(n41()).is_zero_mat());
  // invariance kappa([x,y],z) = kappa(x,[y,z]) spot check
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int t = 0; t < 30; ++t) {
    Vec<Rat> x(3), y(3), z(3);
    for (int i = 0; i < 3; ++i) { x[i] = d(rng); y[i] = d(rng); z[i] = d(rng); }
    auto form = [&](const Vec<Rat>& u, const Vec<Rat>& v) {
      Rat s(0);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += u[i] * k(i, j) * v[j];
      return s;
    };
    CHECK(form(A.bracket(x, y), z) == form(x, A.bracket(y, z)));
  }
}

TEST_CASE("predicates") {
  CHECK(is_solvable(s21()));
  CHECK_FALSE(is_nilpotent(s21()));
  CHECK(is_nilpotent(n41()));
  CHECK(is_semisimple(sl2()));
  CHECK_FALSE(is_solvable(sl2()));
  CHECK(is_abelian(abelian(2)));
  // Cartan criterion agrees with derived-series solvability
  auto A = s21();
  auto kappa = killing_form(A);
  auto der = bracket_space(A, whole_space(A), whole_space(A));
  for (int i = 0; i < A.n; ++i)
    for (int r = 0; r < der.dim(); ++r) {
      Rat s(0);
      for (int j = 0; j < A.n; ++j) s += kappa(i, j) * der.row(r)[j];
      CHECK(s == 0);
    }
}

TEST_CASE("radical") {
  auto A = direct_sum(sl2(), abelian(1));
  auto r = radical(A);
  CHECK(r.dim() == 1);
  CHECK(r.contains(A.basis_vec(3)));
  CHECK(radical(sl2()).dim() == 0);
  CHECK(radical(s21()).dim() == 2);
}

TEST_CASE("nilradical") {
  CHECK(nilradical(s21()).dim() == 1);
  CHECK(nilradical(n41()).dim() == 4);
  CHECK(nilradical(abelian(3)).dim() == 3);
  CHECK_THROWS_AS(nilradical(sl2()), std::domain_error);
  // contains [A,A]; restriction nilpotent (asserted internally too)
  auto A = s21();
  auto nr = nilradical(A);
  CHECK(nr.contains(bracket_space(A, whole_space(A), whole_space(A))));
}

TEST_CASE("derivation dimension") {
  CHECK(derivation_dim(s21()) == 2);
  CHECK(derivation_dim(heisenberg3()) == 6);
  CHECK(derivation_dim(sl2()) == 3);       // semisimple: all derivations inner
  CHECK(derivation_dim(abelian(2)) == 4);  // all of gl_2
}

TEST_CASE("change of basis keeps structural data") {
  auto A = n41();
  Mat<Rat> P = Mat<Rat>::identity(4);
  P(0, 1) = 3; P(1, 2) = -2; P(3, 0) = 1;
  auto B = change_basis(A, P);
  CHECK(B.check_jacobi().empty());
  CHECK(dims(lower_central_series(B)) == dims(lower_central_series(A)));
  CHECK(derivation_dim(B) == derivation_dim(A));
}
