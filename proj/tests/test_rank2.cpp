#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lie2/rank2.hpp"

using namespace lie2;

TEST_CASE("dimensions and root counts") {
  CHECK(build(AlgName::C2).alg.n == 10);
  CHECK(build(AlgName::A2).alg.n == 8);
  CHECK(build(AlgName::A1xA1).alg.n == 6);
  CHECK(build(AlgName::G2).alg.n == 14);
  CHECK(build(AlgName::C2).npos() == 4);
  CHECK(build(AlgName::A2).npos() == 3);
  CHECK(build(AlgName::A1xA1).npos() == 2);
  CHECK(build(AlgName::G2).npos() == 6);
}

TEST_CASE("jacobi holds for all four ambient algebras") {
  for (AlgName n : {AlgName::C2, AlgName::A2, AlgName::A1xA1, AlgName::G2})
    CHECK(build(n).alg.check_jacobi().empty());
}

TEST_CASE("matrix realization oracle") {
  CHECK(verify_realization(AlgName::C2).empty());
  CHECK(verify_realization(AlgName::A2).empty());
  CHECK(verify_realization(AlgName::A1xA1).empty());
  CHECK_THROWS_AS(matrix_realization(AlgName::G2), std::domain_error);
}

TEST_CASE("chevalley relations") {
  const auto& c2 = build(AlgName::C2);
  // [X_a, Y_a] = H_a and [X_b, Y_b] = H_b
  CHECK(c2.alg.bracket(c2.gen("X(1,0)"), c2.gen("Y(1,0)")) == c2.gen("Ha"));
  CHECK(c2.alg.bracket(c2.gen("X(0,1)"), c2.gen("Y(0,1)")) == c2.gen("Hb"));
  // [H, X_mu] diagonal with the Cartan pairing eigenvalue, for every algebra
  for (AlgName n : {AlgName::C2, AlgName::A2, AlgName::A1xA1, AlgName::G2}) {
    const auto& ca = build(n);
    for (int s = 0; s < 2; ++s)
      for (int r = 0; r < ca.npos(); ++r) {
        const Rat w = ca.roots.pairing(ca.roots.positive[r], s);
        CHECK(denominator(w) == 1);
        Vec<Rat> expect = ca.alg.basis_vec(ca.xi(r));
        for (auto& v : expect) v *= w;
        CHECK(ca.alg.bracket(ca.alg.basis_vec(s), ca.alg.basis_vec(ca.xi(r))) == expect);
      }
  }
}

TEST_CASE("g2 printed constants") {
  const auto& g2 = build(AlgName::G2);
  auto X = [&](int m, int n) { return g2.gen("X(" + std::to_string(m) + "," + std::to_string(n) + ")"); };
  // [X_b, X_a] = X_{a+b}  (N_{b,a} = 1)
  CHECK(g2.alg.bracket(X(0, 1), X(1, 0)) == X(1, 1));
  // [X_{a+b}, X_a] = 2 X_{2a+b}
  Vec<Rat> two = X(2, 1);
  for (auto& v : two) v *= 2;
  CHECK(g2.alg.bracket(X(1, 1), X(1, 0)) == two);
  // [H_a, X_b] = -3 X_b
  Vec<Rat> m3 = X(0, 1);
  for (auto& v : m3) v *= -3;
  CHECK(g2.alg.bracket(g2.gen("Ha"), X(0, 1)) == m3);
  // N antisymmetry rules over every defined pair
  const auto& N = detail::g2_ntable();
  for (const auto& [key, val] : N) {
    auto [u, v] = key;
    CHECK(N.at({v, u}) == -val);
    CHECK(N.at({{-u.first, -u.second}, {-v.first, -v.second}}) == -val);
  }
  CHECK(N.size() == 60);
}

TEST_CASE("toral elements") {
  const auto& c2 = build(AlgName::C2);
  // T(1,0) = Ha + Hb
  Vec<Rat> t10 = toral(AlgName::C2, 1, 0);
  Vec<Rat> expect = c2.gen("Ha");
  vec_axpy(expect, Rat(1), c2.gen("Hb"));
  CHECK(t10 == expect);

  const auto& g2 = build(AlgName::G2);
  // eigenvalue of ad H(c,d) on X_a is 2c-3d (consistency with the A-formula rows)
  for (auto [c, d] : std::vector<std::pair<int, int>>{{1, 0}, {2, 5}, {-3, 1}, {7, -2}}) {
    Vec<Rat> h = toral(AlgName::G2, c, d);
    Vec<Rat> out = g2.alg.bracket(h, g2.gen("X(1,0)"));
    Vec<Rat> want = g2.gen("X(1,0)");
    for (auto& v : want) v *= Rat(2 * c - 3 * d);
    CHECK(out == want);
    // second eigenvalue of the <H, X_a, X_{3a+b}> family is 3(c-d)
    Vec<Rat> out2 = g2.alg.bracket(h, g2.gen("X(3,1)"));
    Vec<Rat> want2 = g2.gen("X(3,1)");
    for (auto& v : want2) v *= Rat(3 * (c - d));
    CHECK(out2 == want2);
  }
  // H(3,2) is proportional to the coroot of 3a+2b (= Ha + 2Hb)
  Vec<Rat> h32 = toral(AlgName::G2, 3, 2);
  Vec<Rat> cr = coroot(AlgName::G2, 3, 2);
  CHECK(h32[0] * cr[1] == h32[1] * cr[0]);
  CHECK(cr[0] == 1);
  CHECK(cr[1] == 2);
  // 14 H_{9a+5b} = 6Ha + 10Hb, and both simple roots take value 2 on it
  Vec<Rat> h95 = coroot(AlgName::G2, 9, 5);
  for (auto& v : h95) v *= 14;
  CHECK(h95[0] == 6);
  CHECK(h95[1] == 10);
  CHECK(g2.roots.weight({1, 0}, h95[0], h95[1]) == 2);
  CHECK(g2.roots.weight({0, 1}, h95[0], h95[1]) == 2);
}

TEST_CASE("weyl actions match the printed C2 rules") {
  // s_a(T_{a,b}) = T_{a,-b}; s_b(T_{a,b}) = T_{b,a}
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {3, 1}, {-2, 5}, {1, 0}}) {
    Vec<Rat> t = toral(AlgName::C2, a, b);
    const auto& rs = build(AlgName::C2).roots;
    auto sa = reflect(rs, 0, t[0], t[1]);
    Vec<Rat> ta_mb = toral(AlgName::C2, a, -b);
    CHECK(sa.first == ta_mb[0]);
    CHECK(sa.second == ta_mb[1]);
    auto sb = reflect(rs, 1, t[0], t[1]);
    Vec<Rat> tba = toral(AlgName::C2, b, a);
    CHECK(sb.first == tba[0]);
    CHECK(sb.second == tba[1]);
  }
  // reflections are involutions
  for (AlgName n : {AlgName::C2, AlgName::A2, AlgName::A1xA1, AlgName::G2}) {
    const auto& rs = build(n).roots;
    for (int s = 0; s < 2; ++s) {
      auto p = reflect(rs, s, Rat(5), Rat(-7));
      auto q = reflect(rs, s, p.first, p.second);
      CHECK(q.first == 5);
      CHECK(q.second == -7);
    }
  }
}

TEST_CASE("weyl group orders 8/6/4/12") {
  CHECK(weyl_group_order(AlgName::C2) == 8);
  CHECK(weyl_group_order(AlgName::A2) == 6);
  CHECK(weyl_group_order(AlgName::A1xA1) == 4);
  CHECK(weyl_group_order(AlgName::G2) == 12);
}

TEST_CASE("weyl orbits") {
  // orbit of T(1,0): s_a fixes it (b = 0); orbit size divides 8
  Vec<Rat> t10 = toral(AlgName::C2, 1, 0);
  auto orbit = weyl_orbit(AlgName::C2, t10);
  CHECK(8 % orbit.size() == 0);
  // s_b swaps T(1,2) and T(2,1): orbit contains both
  auto o2 = weyl_orbit(AlgName::C2, toral(AlgName::C2, 1, 2));
  auto has = [&](const Vec<Rat>& v) { return std::find(o2.begin(), o2.end(), v) != o2.end(); };
  CHECK(has(toral(AlgName::C2, 2, 1)));
  CHECK(has(toral(AlgName::C2, 1, -2)));
  // orbit of zero is {0}
  CHECK(weyl_orbit(AlgName::G2, Vec<Rat>(14, Rat(0))).size() == 1);
  // error outside the Cartan
  CHECK_THROWS_AS(weyl_orbit(AlgName::C2, build(AlgName::C2).gen("X(1,0)")), std::domain_error);
}

TEST_CASE("a2 line orbit realizes the six-map rule") {
  // lines <Ha + a Hb>: the Weyl orbit parameters are {a, 1/a, 1-a, 1/(1-a), a/(a-1), (a-1)/a}
  auto orbit = weyl_line_orbit(AlgName::A2, Rat(1), Rat(3));
  std::vector<Rat> ys;
  for (auto& [x, y] : orbit) {
    REQUIRE(x == 1);  // no orbit point hits the <Hb> line for a = 3
    ys.push_back(y);
  }
  std::sort(ys.begin(), ys.end());
  std::vector<Rat> want{Rat(-2), Rat(-1, 2), Rat(1, 3), Rat(2, 3), Rat(3, 2), Rat(3)};
  CHECK(ys == want);
}

TEST_CASE("distinguished subalgebras of C2") {
  const auto& c2 = build(AlgName::C2);
  // closure of {X_b, X_{a+b}} is 3-dimensional, picking up X_{a+2b}
  auto S = closure(c2.alg, {c2.gen("X(0,1)"), c2.gen("X(1,1)")});
  CHECK(S.dim() == 3);
  CHECK(S.contains(c2.gen("X(1,2)")));
  // closure of {X_a, Y_a} contains H_a
  auto T = closure(c2.alg, {c2.gen("X(1,0)"), c2.gen("Y(1,0)")});
  CHECK(T.dim() == 3);
  CHECK(T.contains(c2.gen("Ha")));
  // span{X_a, X_b} is not closed: witness [X_a, X_b] proportional to X_{a+b}
  auto span = Subspace<Rat>::span(10, {c2.gen("X(1,0)"), c2.gen("X(0,1)")});
  CHECK_THROWS_AS(induced_algebra(c2.alg, span), NotSubalgebra);
  // Cartan is abelian
  auto h = Subspace<Rat>::span(10, {c2.gen("Ha"), c2.gen("Hb")});
  CHECK(is_abelian(induced_algebra(c2.alg, h)));
}
