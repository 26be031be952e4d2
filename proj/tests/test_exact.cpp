#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lie2/scalar.hpp"

using namespace lie2;

TEST_CASE("normalize puts rationals in canonical form") {
  CHECK(make_rat(2, 4) == Rat(1, 2));
  CHECK(make_rat(3, -6) == Rat(-1, 2));
  CHECK(make_rat(0, 7) == Rat(0));
  CHECK(scalar_str(make_rat(3, -6)) == "-1/2");
  CHECK(scalar_str(make_rat(0, 7)) == "0");
  CHECK_THROWS_AS(make_rat(1, 0), std::domain_error);
}

TEST_CASE("normalize is idempotent") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> d(-50, 50);
  for (int i = 0; i < 200; ++i) {
    int num = d(rng), den = d(rng);
    if (den == 0) den = 1;
    Rat r = make_rat(num, den);
    CHECK(make_rat(numerator(r), denominator(r)) == r);
  }
}

TEST_CASE("quad multiplication") {
  Quad s2(0, 1, 2);
  CHECK(s2 * s2 == Quad(2));
  Quad x(1, 1, 15), y(1, -1, 15);
  CHECK(x * y == Quad(-14));
  // direct expansion: (2 sqrt15)(3 sqrt15) = 6 * 15 = 90
  CHECK(Quad(0, 2, 15) * Quad(0, 3, 15) == Quad(90));
  CHECK_THROWS_AS(Quad(0, 1, 2) * Quad(0, 1, 3), std::domain_error);
  // rational operand adopts the other radicand
  CHECK(Quad(2) * Quad(0, 1, 3) == Quad(0, 2, 3));
}

TEST_CASE("quad zero test uses irrationality of sqrt(m)") {
  CHECK(Quad(0, 0, 2).is_zero());
  CHECK(Quad(1, -1, 1).is_zero());  // degenerate m=1 folds into rational part
  CHECK_FALSE(Quad(3, -1, 15).is_zero());
  // a + b sqrt(m) = 0 iff a = 0 and b = 0, for square-free m >= 2
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int i = 0; i < 200; ++i) {
    Rat a(d(rng)), b(d(rng));
    Quad q(a, b, 7);
    CHECK(q.is_zero() == (a == 0 && b == 0));
  }
}

TEST_CASE("field axioms on random values") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> d(-12, 12);
  auto rnd_rat = [&] {
    int den = d(rng);
    return make_rat(d(rng), den == 0 ? 1 : den);
  };
  for (int i = 0; i < 100; ++i) {
    Quad x(rnd_rat(), rnd_rat(), 15), y(rnd_rat(), rnd_rat(), 15), z(rnd_rat(), rnd_rat(), 15);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    if (!x.is_zero()) {
      CHECK(x * x.inverse() == Quad(1));
      CHECK((y / x) * x == y);
    }
  }
}

TEST_CASE("square-free reduction and exact sqrt") {
  CHECK(quad_sqrt(Rat(2)) == Quad(0, 1, 2));
  CHECK(quad_sqrt(Rat(4)) == Quad(2));
  CHECK(quad_sqrt(Rat(12)) == Quad(0, 2, 3));        // sqrt(12) = 2 sqrt 3
  CHECK(quad_sqrt(Rat(9, 4)) == Quad(Rat(3, 2)));    // perfect square
  CHECK(quad_sqrt(Rat(5, 3)) == Quad(0, Rat(1, 3), 15));  // sqrt(5/3) = sqrt(15)/3
  CHECK(quad_sqrt(Rat(0)) == Quad(0));
  CHECK_THROWS_AS(quad_sqrt(Rat(-1)), std::domain_error);
  CHECK_THROWS_AS(Quad(0, 1, -2), std::domain_error);
}

TEST_CASE("textual round trip is bit exact") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-30, 30);
  for (int i = 0; i < 200; ++i) {
    int den = d(rng);
    Rat r = make_rat(d(rng), den == 0 ? 1 : den);
    CHECK(parse_rat(scalar_str(r)) == r);
    int den2 = d(rng);
    Quad q(r, make_rat(d(rng), den2 == 0 ? 1 : den2), 15);
    CHECK(parse_quad(scalar_str(q)) == q);
  }
  CHECK(parse_quad("-1/2*sqrt(2)") == Quad(0, Rat(-1, 2), 2));
  CHECK(parse_quad("3") == Quad(3));
  CHECK(parse_quad("2+1/3*sqrt(15)") == Quad(2, Rat(1, 3), 15));
}
