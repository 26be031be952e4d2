#pragma once

// Exact scalars: arbitrary-precision rationals and single real quadratic
// extensions Q(sqrt(m)). All arithmetic is exact; no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lie2 {

// et_off: plain value-returning operators, so these compose with templates
using BigInt = boost::multiprecision::number<boost::multiprecision::backends::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Rat make_rat(BigInt num, BigInt den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) { num = -num; den = -den; }  // sign carried by the numerator
  return Rat(num, den);  // backend canonicalizes: gcd(|num|, den) = 1
}

inline bool is_zero(const Rat& x) { return x.is_zero(); }

inline std::string scalar_str(const Rat& x) {
  const BigInt num = numerator(x), den = denominator(x);
  std::string s = num.str();
  if (den != 1) s += "/" + den.str();
  return s;
}

// "p" or "p/q"; exact inverse of scalar_str.
Rat parse_rat(const std::string& s);

// Splits n >= 0 as s^2 * m with m square-free; returns {s, m}.
// Trial division; inputs in this project are small table constants.
inline std::pair<BigInt, BigInt> squarefree_split(BigInt n) {
  if (n < 0) throw std::domain_error("squarefree_split of negative integer");
  BigInt s = 1, m = 1;
  for (BigInt p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) { n /= p; ++e; }
    for (int i = 0; i < e / 2; ++i) s *= p;
    if (e % 2) m *= p;
  }
  m *= n;  // leftover prime
  return {s, m};
}

// Element a + b*sqrt(m) of Q(sqrt(m)), m square-free and >= 0.
// m in {0,1} degenerates to Q and forces b = 0. Mixing radicands is a
// domain error except when one operand is purely rational.
struct Quad {
  Rat a, b;
  std::int64_t m = 0;

  Quad() = default;
  Quad(int v) : a(v) {}
  Quad(const Rat& v) : a(v) {}
  Quad(const Rat& a_, const Rat& b_, std::int64_t m_) : a(a_), b(b_), m(m_) {
    canonicalize();
  }

  void canonicalize() {
    if (m < 0) throw std::domain_error("negative radicand");
    if (m <= 1) {
      // sqrt(0)=0, sqrt(1)=1 fold into the rational part
      if (m == 1) a += b;
      b = 0;
      m = 0;
    }
    if (b.is_zero()) m = 0;
  }

  bool rational() const { return b.is_zero(); }
  bool is_zero() const { return a.is_zero() && b.is_zero(); }

  friend bool operator==(const Quad& x, const Quad& y) {
    if (x.a != y.a || x.b != y.b) return false;
    return x.b.is_zero() || x.m == y.m;
  }
  friend bool operator!=(const Quad& x, const Quad& y) { return !(x == y); }

  // Common radicand of two operands, or throw.
  static std::int64_t join(const Quad& x, const Quad& y) {
    if (x.rational()) return y.m;
    if (y.rational()) return x.m;
    if (x.m != y.m) throw std::domain_error("mixed radicands sqrt(" + std::to_string(x.m) + "), sqrt(" + std::to_string(y.m) + ")");
    return x.m;
  }

  friend Quad operator+(const Quad& x, const Quad& y) {
    return Quad(x.a + y.a, x.b + y.b, join(x, y));
  }
  friend Quad operator-(const Quad& x, const Quad& y) {
    return Quad(x.a - y.a, x.b - y.b, join(x, y));
  }
  friend Quad operator-(const Quad& x) { return Quad(-x.a, -x.b, x.m); }
  friend Quad operator*(const Quad& x, const Quad& y) {
    const std::int64_t m = join(x, y);
    return Quad(x.a * y.a + x.b * y.b * m, x.a * y.b + x.b * y.a, m);
  }
  Quad inverse() const {
    const Rat n = a * a - b * b * m;  // nonzero for nonzero x: sqrt(m) irrational
    if (n.is_zero()) {
      if (is_zero()) throw std::domain_error("division by zero");
      throw std::domain_error("radicand not square-free");  // unreachable on canonical input
    }
    return Quad(a / n, -b / n, m);
  }
  friend Quad operator/(const Quad& x, const Quad& y) { return x * y.inverse(); }
  Quad& operator+=(const Quad& y) { return *this = *this + y; }
  Quad& operator-=(const Quad& y) { return *this = *this - y; }
  Quad& operator*=(const Quad& y) { return *this = *this * y; }
  Quad& operator/=(const Quad& y) { return *this = *this / y; }
};

inline bool is_zero(const Quad& x) { return x.is_zero(); }

inline std::string scalar_str(const Quad& x) {
  if (x.rational()) return scalar_str(x.a);
  std::string s = scalar_str(x.a);
  const std::string bs = scalar_str(x.b);
  s += (bs[0] == '-' ? "" : "+") + bs + "*sqrt(" + std::to_string(x.m) + ")";
  return s;
}

// Exact sqrt of a non-negative rational as an element of some Q(sqrt(m)).
inline Quad quad_sqrt(const Rat& x) {
  if (x < 0) throw std::domain_error("sqrt of negative rational");
  const BigInt p = numerator(x), q = denominator(x);
  // sqrt(p/q) = sqrt(p*q)/q
  auto [s, m] = squarefree_split(p * q);
  if (m > (BigInt(1) << 62)) throw std::domain_error("radicand too large");
  return Quad(0, Rat(s, q), static_cast<std::int64_t>(m));
}

inline Rat rat_of(const Quad& x) {
  if (!x.rational()) throw std::domain_error("irrational value where rational required: " + scalar_str(x));
  return x.a;
}

// Generic helpers used by the templated linear algebra.
template <class K> K scalar_from_rat(const Rat& r);
template <> inline Rat scalar_from_rat<Rat>(const Rat& r) { return r; }
template <> inline Quad scalar_from_rat<Quad>(const Rat& r) { return Quad(r); }

inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(s));
    return make_rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational literal '" + s + "'");
  }
}

// "p/q" or "p/q+r/s*sqrt(m)" (also accepts "-r/s*sqrt(m)" alone).
inline Quad parse_quad(const std::string& s) {
  auto sq = s.find("*sqrt(");
  if (sq == std::string::npos) return Quad(parse_rat(s));
  if (s.back() != ')') throw std::invalid_argument("bad quadratic literal '" + s + "'");
  const std::int64_t m = std::stoll(s.substr(sq + 6, s.size() - sq - 7));
  // split rational part from the sqrt coefficient: find the +/- separating them
  // (scan from sq backwards to the last sign not at position 0)
  size_t split = std::string::npos;
  for (size_t i = sq; i-- > 1;) {
    if (s[i] == '+' || s[i] == '-') { split = i; break; }
  }
  Rat a = 0, b;
  if (split == std::string::npos) {
    b = parse_rat(s.substr(0, sq));
  } else {
    a = parse_rat(s.substr(0, split));
    std::string bs = s.substr(split, sq - split);
    if (bs[0] == '+') bs = bs.substr(1);
    b = parse_rat(bs);
  }
  return Quad(a, b, m);
}

}  // namespace lie2
