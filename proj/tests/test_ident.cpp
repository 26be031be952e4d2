#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lie2/ident.hpp"

using namespace lie2;

namespace {
const Catalog& cat = Catalog::instance();

LieAlgebra<Rat> inst(const std::string& id, const Env& env = {}) {
  return cat.instantiate<Rat>(id, env);
}

// subalgebra of an ambient algebra spanned by labeled generators
LieAlgebra<Rat> span_algebra(AlgName name, const std::vector<std::string>& labels) {
  const auto& ca = build(name);
  std::vector<Vec<Rat>> gens;
  for (const auto& l : labels) gens.push_back(ca.gen(l));
  return induced_algebra(ca.alg, Subspace<Rat>::span(ca.alg.n, gens));
}
}  // namespace

TEST_CASE("rational root extraction") {
  // (x-2)(x+1/3)(x) = x^3 - 5/3 x^2 - 2/3 x
  auto roots = rational_roots({Rat(-5, 3), Rat(-2, 3), Rat(0)});
  REQUIRE(roots.has_value());
  std::sort(roots->begin(), roots->end());
  CHECK(*roots == std::vector<Rat>{Rat(-1, 3), Rat(0), Rat(2)});
  // x^2 - 2 has no rational roots
  CHECK_FALSE(rational_roots({Rat(0), Rat(-2)}).has_value());
}

TEST_CASE("spectrum invariant of s_3_1") {
  // eigenvalues {0, 1, A} of ad e3 on the whole algebra: ratios A/(1+A)^2, 0
  auto fp2 = fingerprint(inst("s_3_1", {{"A", Quad(2)}}));
  CHECK(fp2.spectrum_kind == "codim1");
  CHECK(fp2.spec_k == 1);
  REQUIRE(fp2.spec_ratios.size() == 2);
  CHECK(fp2.spec_ratios[0] == "2/9");
  CHECK(fp2.spec_ratios[1] == "0");
  // A and 1/A give identical fingerprints (same class)
  CHECK(fingerprint(inst("s_3_1", {{"A", Quad(Rat(1, 2))}})) == fp2);
  // A=1 vs A=-1 differ: trace vanishes for A=-1, shifting the index k
  auto fp_p1 = fingerprint(inst("s_3_1", {{"A", Quad(1)}}));
  auto fp_m1 = fingerprint(inst("s_3_1", {{"A", Quad(-1)}}));
  CHECK(fp_p1.spec_k == 1);
  CHECK(fp_p1.spec_ratios[0] == "1/4");
  CHECK(fp_m1.spec_k == 2);
  CHECK_FALSE(fp_p1 == fp_m1);
}

TEST_CASE("spectrum invariance under scaling and nilradical shifts") {
  auto A = inst("s_4_8", {{"A", Quad(Rat(2, 3))}});
  auto ratio_of = [&](const Vec<Rat>& x) {
    auto cp = charpoly(A.ad(x));
    REQUIRE_FALSE(is_zero(cp[0]));
    return cp[1] / (cp[0] * cp[0]);
  };
  Vec<Rat> t = A.basis_vec(3);
  const Rat base = ratio_of(t);
  Vec<Rat> scaled = t;
  for (auto& v : scaled) v *= Rat(-7, 2);
  CHECK(ratio_of(scaled) == base);
  Vec<Rat> shifted = t;
  vec_axpy(shifted, Rat(5), A.basis_vec(0));
  vec_axpy(shifted, Rat(-3), A.basis_vec(2));
  CHECK(ratio_of(shifted) == base);
}

TEST_CASE("fingerprint structural fields") {
  auto fp = fingerprint(inst("n_4_1"));
  CHECK(fp.dim == 4);
  CHECK(fp.derived == std::vector<int>{4, 2, 0});
  CHECK(fp.lcs == std::vector<int>{4, 2, 1, 0});
  CHECK(fp.nilpotent);
  CHECK(fp.spectrum_kind == "none");
  auto fpa = fingerprint(LieAlgebra<Rat>(3, "abelian"));
  CHECK(fpa.derived == std::vector<int>{3, 0});
  CHECK(fpa.center_dim == 3);
  CHECK(fpa.abelian);
}

TEST_CASE("fingerprint is invariant under random basis changes") {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> d(-3, 3);
  for (const std::string& id : {"s_4_8", "n_5_2", "s_5_44", "s_6_242"}) {
    Env env;
    if (!cat.entry(id).params.empty()) env["A"] = Quad(Rat(1, 2));
    auto A = inst(id, env);
    auto fp = fingerprint(A);
    int done = 0;
    while (done < 5) {
      Mat<Rat> P(A.n, A.n);
      for (auto& v : P.a) v = d(rng);
      if (rank(P) < A.n) continue;
      ++done;
      CHECK(fingerprint(change_basis(A, P)) == fp);
    }
  }
}

TEST_CASE("codim-2 weight configuration distinguishes and identifies") {
  auto fp41 = fingerprint(inst("s_5_41", {{"A", Quad(Rat(1, 2))}, {"B", Quad(Rat(1, 2))}}));
  CHECK(fp41.spectrum_kind == "codim2");
  auto fp41b = fingerprint(inst("s_5_41", {{"A", Quad(Rat(1, 3))}, {"B", Quad(Rat(1, 3))}}));
  CHECK_FALSE(fp41 == fp41b);
  auto fp44 = fingerprint(inst("s_5_44"));
  CHECK_FALSE(fp41 == fp44);
  // borel of C2 is s_6_242
  auto borel = span_algebra(AlgName::C2, {"Ha", "Hb", "X(1,0)", "X(0,1)", "X(1,1)", "X(1,2)"});
  CHECK(fingerprint(borel) == fingerprint(inst("s_6_242")));
}

TEST_CASE("match_class anchors") {
  FingerprintCache cache;
  // nilradical of C2 is n_4_1
  auto nilC2 = span_algebra(AlgName::C2, {"X(1,0)", "X(0,1)", "X(1,1)", "X(1,2)"});
  auto v = match_class(nilC2, parse_class("n_4_1"), {}, cat, cache);
  CHECK(v.kind == Verdict::Match);
  // <T(1,0), X_a> is abelian: 2n_1_1
  const auto& c2 = build(AlgName::C2);
  auto S = Subspace<Rat>::span(10, {toral(AlgName::C2, 1, 0), c2.gen("X(1,0)")});
  auto ts = induced_algebra(c2.alg, S);
  CHECK(match_class(ts, parse_class("2*n_1_1"), {}, cat, cache).kind == Verdict::Match);
  // s_4_6 is not s_4_11
  auto bad = match_class(inst("s_4_6"), parse_class("s_4_11"), {}, cat, cache);
  CHECK(bad.kind == Verdict::Mismatch);
  CHECK_FALSE(bad.detail.empty());
  // guarded class: G2 3-dim regular family <H(c,d), X_a, X_{3a+b}>
  auto spec = parse_class(
      "if 2*c=3*d or c=d: n_1_1+s_2_1 ; else: s_3_1(A in {(2*c-3*d)/(3*(c-d)), 3*(c-d)/(2*c-3*d)})");
  const auto& g2 = build(AlgName::G2);
  auto fam = [&](const Rat& cc, const Rat& dd) {
    auto sp = Subspace<Rat>::span(14, {toral(AlgName::G2, cc, dd), g2.gen("X(1,0)"), g2.gen("X(3,1)")});
    return induced_algebra(g2.alg, sp);
  };
  Env e1{{"c", Quad(5)}, {"d", Quad(1)}};
  CHECK(match_class(fam(5, 1), spec, e1, cat, cache).kind == Verdict::Match);
  Env e2{{"c", Quad(1)}, {"d", Quad(1)}};  // c=d branch
  CHECK(match_class(fam(1, 1), spec, e2, cat, cache).kind == Verdict::Match);
  Env e3{{"c", Quad(3)}, {"d", Quad(2)}};  // 2c=3d branch
  CHECK(match_class(fam(3, 2), spec, e3, cat, cache).kind == Verdict::Match);
}

TEST_CASE("alpha-form matching stays exact") {
  FingerprintCache cache;
  // C2 table row <T(a,1), X_a, X_{a+b}>: invariant 2(a+1)/(a+3)^2
  const auto& c2 = build(AlgName::C2);
  for (const Rat a : {Rat(2), Rat(5), Rat(-4), Rat(7, 3)}) {
    auto sp = Subspace<Rat>::span(10, {toral(AlgName::C2, a, 1), c2.gen("X(1,0)"), c2.gen("X(1,1)")});
    auto B = induced_algebra(c2.alg, sp);
    auto fp = fingerprint(B);
    REQUIRE(fp.spectrum_kind == "codim1");
    const Rat expect = 2 * (a + 1) / ((a + 3) * (a + 3));
    CHECK(fp.spec_ratios[0] == scalar_str(expect));
    auto v = match_class(B, parse_class("s_3_1(alpha=-2*(a+1)/(a+3)^2)"), {{"a", Quad(a)}}, cat, cache);
    CHECK(v.kind == Verdict::Match);
  }
}

TEST_CASE("wildcard parameters derive from eigenvalue data") {
  FingerprintCache cache;
  // C2 row <T(a,1), X_a, X_{a+b}, X_{a+2b}>: diagonal eigenvalues (2, a+1, 2a)
  const auto& c2 = build(AlgName::C2);
  auto spec = parse_class("oneof: s_4_2 / s_4_3(A=?,B=?) / s_4_4(A=?) / n_1_1+s_3_1(A=?) / n_1_1+s_3_2");
  for (const Rat a : {Rat(2), Rat(3), Rat(-2), Rat(1, 2)}) {
    auto sp = Subspace<Rat>::span(
        10, {toral(AlgName::C2, a, 1), c2.gen("X(1,0)"), c2.gen("X(1,1)"), c2.gen("X(1,2)")});
    auto B = induced_algebra(c2.alg, sp);
    auto v = match_class(B, spec, {{"a", Quad(a)}}, cat, cache);
    CHECK(v.kind == Verdict::Match);
    CHECK(v.matched.substr(0, 5) == "s_4_3");
  }
}

TEST_CASE("decompose_sl2 of C2 under the long-root A1") {
  const auto& c2 = build(AlgName::C2);
  Sl2Triple<Rat> t{toral(AlgName::C2, 1, 0), c2.gen("X(1,2)"), c2.gen("Y(1,2)")};
  auto dec = decompose_sl2(c2.alg, t, whole_space(c2.alg));
  CHECK(dec.highest == std::vector<int>{2, 1, 1, 0, 0, 0});
  // the triple's own span is the adjoint module V(2)
  auto span3 = Subspace<Rat>::span(10, {t.h, t.e, t.f});
  CHECK(decompose_sl2(c2.alg, t, span3).highest == std::vector<int>{2});
  // broken triple is rejected with the failing relation named
  Sl2Triple<Rat> bad{toral(AlgName::C2, 1, 1), c2.gen("X(1,2)"), c2.gen("Y(1,2)")};
  CHECK_THROWS_AS(decompose_sl2(c2.alg, bad, whole_space(c2.alg)), Sl2Error);
}

TEST_CASE("find_sl2_triple normalizes table generator orderings") {
  const auto& c2 = build(AlgName::C2);
  // (e, f, h) ordering
  auto t1 = find_sl2_triple(c2.alg, {c2.gen("X(1,2)"), c2.gen("Y(1,2)"), toral(AlgName::C2, 1, 0)});
  REQUIRE(t1.has_value());
  CHECK(t1->h == toral(AlgName::C2, 1, 0));
  // (h, e, f) ordering, g2 style
  const auto& g2 = build(AlgName::G2);
  auto t2 = find_sl2_triple(g2.alg, {g2.gen("Ha"), g2.gen("X(1,0)"), g2.gen("Y(1,0)")});
  REQUIRE(t2.has_value());
  // scaled f: <X_a+X_b, 4Y_a+3Y_b, T(3,1)> in C2
  Vec<Rat> e = c2.gen("X(1,0)");
  vec_axpy(e, Rat(1), c2.gen("X(0,1)"));
  Vec<Rat> f = c2.gen("Y(1,0)");
  for (auto& v : f) v *= Rat(4);
  vec_axpy(f, Rat(3), c2.gen("Y(0,1)"));
  auto t3 = find_sl2_triple(c2.alg, {e, f, toral(AlgName::C2, 3, 1)});
  REQUIRE(t3.has_value());
  CHECK(t3->h == toral(AlgName::C2, 3, 1));
}

TEST_CASE("verify_levi on the paper's C2 example") {
  FingerprintCache cache;
  const auto& c2 = build(AlgName::C2);
  std::vector<Vec<Rat>> levi{c2.gen("X(1,2)"), c2.gen("Y(1,2)"), toral(AlgName::C2, 1, 0)};
  std::vector<Vec<Rat>> rad{c2.gen("X(0,1)"), c2.gen("Y(1,1)"), c2.gen("Y(1,0)")};
  auto rep = verify_levi(c2.alg, levi, rad, parse_class("A1:n_3_1"), {}, cat, cache);
  INFO(rep.detail);
  CHECK(rep.ok);
  CHECK(rep.rho.highest == std::vector<int>{1, 0});
  // same span against a wrong radical class
  auto bad = verify_levi(c2.alg, levi, rad, parse_class("A1:3*n_1_1"), {}, cat, cache);
  CHECK_FALSE(bad.ok);
  // levi = radical is not a direct sum
  auto nds = verify_levi(c2.alg, levi, levi, parse_class("A1:n_3_1"), {}, cat, cache);
  CHECK_FALSE(nds.ok);
}

TEST_CASE("catalog nilradical identifications") {
  FingerprintCache cache;
  auto check_nr = [&](const std::string& id, const std::string& claimed, const Env& env = {}) {
    auto A = inst(id, env);
    auto nr = nilradical(A);
    auto N = induced_algebra(A, nr);
    auto v = match_class(N, parse_class(claimed), {}, cat, cache);
    INFO(id, " nilradical vs ", claimed, ": ", v.detail);
    CHECK(v.kind == Verdict::Match);
  };
  check_nr("s_7_1", "n_5_2");
  check_nr("s_7_2", "n_5_3");
  check_nr("s_8_1", "n_6_18");
  check_nr("s_7_3", "n_6_18", {{"A", Quad(1)}, {"B", Quad(3)}});
}

TEST_CASE("s_7_3 scaling law") {
  auto fp = [&](const Rat& a, const Rat& b) {
    return fingerprint(inst("s_7_3", {{"A", Quad(a)}, {"B", Quad(b)}}));
  };
  auto base = fp(1, 3);
  for (const Rat lam : {Rat(2), Rat(-1), Rat(1, 3)}) CHECK(fp(lam, 3 * lam) == base);
  CHECK_FALSE(fp(1, 1) == fp(1, 2));
}

TEST_CASE("table 15 sl2 triples over quadratic fields") {
  const auto g2q = to_quad(build(AlgName::G2).alg);
  const auto& g2 = build(AlgName::G2);
  auto q = [&](const char* l) { return to_quad(g2.gen(l)); };
  auto scale = [](Vec<Quad> v, const Quad& s) {
    for (auto& x : v) x *= s;
    return v;
  };
  // <2H_{3a+b}, sqrt2(Y_b + X_{3a+2b}), sqrt2(X_b + Y_{3a+2b})> over Q(sqrt2)
  const Quad s2 = quad_sqrt(Rat(2));
  Vec<Quad> h = to_quad(coroot(AlgName::G2, 3, 1));
  for (auto& x : h) x *= Quad(2);
  Vec<Quad> e = q("Y(0,1)");
  vec_axpy(e, Quad(1), q("X(3,2)"));
  e = scale(e, s2);
  Vec<Quad> f = q("X(0,1)");
  vec_axpy(f, Quad(1), q("Y(3,2)"));
  f = scale(f, s2);
  CHECK(g2q.bracket(h, e) == scale(e, Quad(2)));
  CHECK(g2q.bracket(h, f) == scale(f, Quad(-2)));
  CHECK(g2q.bracket(e, f) == h);
  // principal triple: 14H_{9a+5b} with sqrt6 X_a + sqrt10 X_b, rescaled into Q(sqrt15)
  Vec<Quad> h2 = to_quad(coroot(AlgName::G2, 9, 5));
  for (auto& x : h2) x *= Quad(14);
  const Quad s15 = quad_sqrt(Rat(15));
  Vec<Quad> e2 = q("X(1,0)");
  vec_axpy(e2, s15 / Quad(3), q("X(0,1)"));  // X_a + sqrt(10/6) X_b
  Vec<Quad> f2 = scale(q("Y(1,0)"), Quad(6));
  vec_axpy(f2, Quad(2) * s15, q("Y(0,1)"));  // 6 Y_a + 2 sqrt15 Y_b
  CHECK(g2q.bracket(h2, e2) == scale(e2, Quad(2)));
  CHECK(g2q.bracket(h2, f2) == scale(f2, Quad(-2)));
  CHECK(g2q.bracket(e2, f2) == h2);
  // decomposition of the principal triple on all of G2 sums to 14
  auto dec = decompose_sl2(g2q, Sl2Triple<Quad>{h2, e2, f2}, whole_space(g2q));
  int total = 0;
  for (int n : dec.highest) total += n + 1;
  CHECK(total == 14);
}
