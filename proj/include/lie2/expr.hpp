#pragma once

// Recursive-descent parser and exact evaluator for the small arithmetic
// language used by catalog coefficients, table conditions and generator
// coefficients:
//
//   expr    := term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*
//   factor  := ('-'|'+') factor | primary ('^' uint)?
//   primary := uint | ident | '(' expr ')' | 'sqrt' '(' expr ')'
//
// Conditions:
//   cond := conj ('or' conj)* ; conj := catom ('and' catom)*
//   catom := 'not' catom | '(' cond ')' | expr cmp expr
//   cmp ∈ { '=', '==', '!=', '>=', '<=', '>', '<' }
//
// Values are exact (Quad, rational-valued unless a sqrt shows up); order
// comparisons are defined for rational values only.

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "lie2/scalar.hpp"

namespace lie2 {

struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(const std::string& msg, size_t at)
      : std::runtime_error(msg + " at column " + std::to_string(at + 1)), pos(at) {}
};

using Env = std::map<std::string, Quad>;

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum Kind { Num, Param, Add, Sub, Mul, Div, Neg, Pow, Sqrt, Abs } kind;
  Rat num;            // Num
  std::string name;   // Param
  ExprPtr lhs, rhs;   // operands; Pow uses num as exponent
  long exponent = 0;  // Pow

  static ExprPtr number(const Rat& v) {
    auto e = std::make_shared<Expr>();
    e->kind = Num;
    e->num = v;
    return e;
  }
  static ExprPtr param(std::string n) {
    auto e = std::make_shared<Expr>();
    e->kind = Param;
    e->name = std::move(n);
    return e;
  }
  static ExprPtr node(Kind k, ExprPtr a, ExprPtr b = nullptr) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
  }
  static ExprPtr pow(ExprPtr a, long n) {
    auto e = std::make_shared<Expr>();
    e->kind = Pow;
    e->lhs = std::move(a);
    e->exponent = n;
    return e;
  }
};

inline Quad eval(const ExprPtr& e, const Env& env) {
  switch (e->kind) {
    case Expr::Num: return Quad(e->num);
    case Expr::Param: {
      auto it = env.find(e->name);
      if (it == env.end()) throw std::domain_error("unbound parameter '" + e->name + "'");
      return it->second;
    }
    case Expr::Add: return eval(e->lhs, env) + eval(e->rhs, env);
    case Expr::Sub: return eval(e->lhs, env) - eval(e->rhs, env);
    case Expr::Mul: return eval(e->lhs, env) * eval(e->rhs, env);
    case Expr::Div: {
      Quad d = eval(e->rhs, env);
      if (d.is_zero()) throw std::domain_error("division by zero in expression");
      return eval(e->lhs, env) / d;
    }
    case Expr::Neg: return -eval(e->lhs, env);
    case Expr::Pow: {
      Quad b = eval(e->lhs, env), r(1);
      for (long i = 0; i < e->exponent; ++i) r *= b;
      return r;
    }
    case Expr::Sqrt: {
      Quad a = eval(e->lhs, env);
      return quad_sqrt(rat_of(a));
    }
    case Expr::Abs: {
      Rat a = rat_of(eval(e->lhs, env));
      return Quad(a < 0 ? Rat(-a) : a);
    }
  }
  throw std::logic_error("unreachable");
}

inline void collect_params(const ExprPtr& e, std::set<std::string>& out) {
  if (!e) return;
  if (e->kind == Expr::Param) out.insert(e->name);
  collect_params(e->lhs, out);
  collect_params(e->rhs, out);
}

struct Cond;
using CondPtr = std::shared_ptr<const Cond>;

struct Cond {
  enum Kind { Cmp, And, Or, Not } kind;
  std::string op;  // Cmp
  ExprPtr a, b;
  CondPtr x, y;
};

inline bool eval_cond(const CondPtr& c, const Env& env) {
  switch (c->kind) {
    case Cond::And: return eval_cond(c->x, env) && eval_cond(c->y, env);
    case Cond::Or: return eval_cond(c->x, env) || eval_cond(c->y, env);
    case Cond::Not: return !eval_cond(c->x, env);
    case Cond::Cmp: {
      const Quad l = eval(c->a, env), r = eval(c->b, env);
      if (c->op == "=" || c->op == "==") return l == r;
      if (c->op == "!=") return l != r;
      const Rat lr = rat_of(l), rr = rat_of(r);  // order needs rationals
      if (c->op == ">=") return lr >= rr;
      if (c->op == "<=") return lr <= rr;
      if (c->op == ">") return lr > rr;
      if (c->op == "<") return lr < rr;
      throw std::logic_error("bad comparison op");
    }
  }
  throw std::logic_error("unreachable");
}

inline void collect_params(const CondPtr& c, std::set<std::string>& out) {
  if (!c) return;
  collect_params(c->a, out);
  collect_params(c->b, out);
  if (c->x) collect_params(c->x, out);
  if (c->y) collect_params(c->y, out);
}

// Shared cursor for the expression language. Whitespace-insensitive.
class Lexer {
 public:
  explicit Lexer(std::string text) : s_(std::move(text)) { skip(); }

  size_t pos() const { return i_; }
  bool done() const { return i_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[i_]; }

  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    skip();
    return true;
  }
  bool accept(const std::string& word) {  // operators like ">=" or keywords
    if (s_.compare(i_, word.size(), word) != 0) return false;
    if (isalpha(static_cast<unsigned char>(word[0]))) {  // keyword: must not continue
      size_t end = i_ + word.size();
      if (end < s_.size() && (isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) return false;
    }
    i_ += word.size();
    skip();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", i_);
  }

  bool peek_ident() const { return isalpha(static_cast<unsigned char>(peek())) || peek() == '_'; }

  std::string ident() {
    if (!peek_ident()) throw ParseError("expected identifier", i_);
    size_t start = i_;
    while (i_ < s_.size() && (isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    std::string w = s_.substr(start, i_ - start);
    skip();
    return w;
  }

  bool peek_digit() const { return isdigit(static_cast<unsigned char>(peek())); }

  BigInt uint_lit() {
    if (!peek_digit()) throw ParseError("expected number", i_);
    size_t start = i_;
    while (i_ < s_.size() && isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    BigInt v(s_.substr(start, i_ - start));
    skip();
    return v;
  }

  std::string rest() const { return s_.substr(i_); }

  void reset(size_t p) { i_ = p; }

 private:
  void skip() {
    while (i_ < s_.size() && isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  std::string s_;
  size_t i_ = 0;
};

class ExprParser {
 public:
  explicit ExprParser(Lexer& lx) : lx_(lx) {}

  ExprPtr expr() {
    ExprPtr e = term();
    for (;;) {
      if (lx_.accept('+')) e = Expr::node(Expr::Add, e, term());
      else if (lx_.accept('-')) e = Expr::node(Expr::Sub, e, term());
      else return e;
    }
  }

  CondPtr cond() {
    CondPtr c = conj();
    while (lx_.accept("or")) {
      auto n = std::make_shared<Cond>();
      n->kind = Cond::Or;
      n->x = c;
      n->y = conj();
      c = n;
    }
    return c;
  }

 private:
  ExprPtr term() {
    ExprPtr e = factor();
    for (;;) {
      if (lx_.accept('*')) e = Expr::node(Expr::Mul, e, factor());
      else if (lx_.accept('/')) e = Expr::node(Expr::Div, e, factor());
      else return e;
    }
  }

  ExprPtr factor() {
    if (lx_.accept('-')) return Expr::node(Expr::Neg, factor());
    if (lx_.accept('+')) return factor();
    ExprPtr e = primary();
    if (lx_.accept('^')) {
      BigInt n = lx_.uint_lit();
      if (n > 64) throw ParseError("exponent too large", lx_.pos());
      e = Expr::pow(e, static_cast<long>(n));
    }
    return e;
  }

  ExprPtr primary() {
    if (lx_.accept('(')) {
      ExprPtr e = expr();
      lx_.expect(')');
      return e;
    }
    if (lx_.peek_digit()) return Expr::number(Rat(lx_.uint_lit()));
    if (lx_.accept("sqrt")) {
      lx_.expect('(');
      ExprPtr e = expr();
      lx_.expect(')');
      return Expr::node(Expr::Sqrt, e);
    }
    if (lx_.accept("abs")) {
      lx_.expect('(');
      ExprPtr e = expr();
      lx_.expect(')');
      return Expr::node(Expr::Abs, e);
    }
    if (lx_.peek_ident()) return Expr::param(lx_.ident());
    throw ParseError("expected expression", lx_.pos());
  }

  CondPtr conj() {
    CondPtr c = catom();
    while (lx_.accept("and")) {
      auto n = std::make_shared<Cond>();
      n->kind = Cond::And;
      n->x = c;
      n->y = catom();
      c = n;
    }
    return c;
  }

  CondPtr catom() {
    if (lx_.accept("not")) {
      auto n = std::make_shared<Cond>();
      n->kind = Cond::Not;
      n->x = catom();
      return n;
    }
    // '(' may open a boolean group or a parenthesized arithmetic expression;
    // try the boolean reading first and backtrack on failure.
    if (lx_.peek() == '(') {
      size_t save = lx_.pos();
      lx_.accept('(');
      try {
        CondPtr inner = cond();
        lx_.expect(')');
        return inner;
      } catch (const ParseError&) {
        lx_.reset(save);
      }
    }
    auto n = std::make_shared<Cond>();
    n->kind = Cond::Cmp;
    n->a = expr();
    for (const char* op : {"==", "!=", ">=", "<=", "=", ">", "<"}) {
      if (lx_.accept(op)) {
        n->op = op;
        n->b = expr();
        return n;
      }
    }
    throw ParseError("expected comparison operator", lx_.pos());
  }

  Lexer& lx_;
};

inline ExprPtr parse_expr(const std::string& text) {
  Lexer lx(text);
  ExprParser p(lx);
  ExprPtr e = p.expr();
  if (!lx.done()) throw ParseError("trailing input '" + lx.rest() + "'", lx.pos());
  return e;
}

inline CondPtr parse_cond(const std::string& text) {
  Lexer lx(text);
  ExprParser p(lx);
  CondPtr c = p.cond();
  if (!lx.done()) throw ParseError("trailing input '" + lx.rest() + "'", lx.pos());
  return c;
}

}  // namespace lie2
