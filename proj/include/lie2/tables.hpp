#pragma once

// Data model, grammar and parser for the classification tables, plus the
// row verification harness. Table files are line-oriented pipe-separated
// records (one file per printed table):
//
//   !table <id> ambient=<name> rows=<n> title="..."
//   <table-id> | <ambient> | <gens ;-sep> | <params ,-sep or -> |
//       <conditions ;-sep or -> | <dim> | <kind> | <class> | <notes or ->
//
// Generator expressions follow
//   genexpr := term (('+'|'-') term)*
//   term    := (coefficient-factor '*')* atom
//   atom    := X(m,n) | Y(m,n) | Ha | Hb | T(e,e) | H(e,e) | Hr(e,e)
// with rational-expression coefficients (sqrt allowed).

#include <filesystem>
#include <fstream>

#include "lie2/ident.hpp"

namespace lie2 {

// ---- generator expressions -------------------------------------------------

struct GenAtom {
  enum Type { X, Y, Ha, Hb, T, H, Hr } type;
  ExprPtr a, b;  // arguments for X/Y/T/H/Hr
};

struct GenTerm {
  ExprPtr coeff;  // nullptr means 1
  GenAtom atom;
  int sign = 1;
};

struct GenExpr {
  std::string text;
  std::vector<GenTerm> terms;
};

namespace detail {

inline bool peek_atom(Lexer& lx) {
  return lx.peek() == 'X' || lx.peek() == 'Y' || lx.peek() == 'H' || lx.peek() == 'T';
}

inline GenAtom parse_atom(Lexer& lx) {
  GenAtom atom;
  const std::string name = lx.ident();
  if (name == "Ha") { atom.type = GenAtom::Ha; return atom; }
  if (name == "Hb") { atom.type = GenAtom::Hb; return atom; }
  if (name == "X") atom.type = GenAtom::X;
  else if (name == "Y") atom.type = GenAtom::Y;
  else if (name == "T") atom.type = GenAtom::T;
  else if (name == "H") atom.type = GenAtom::H;
  else if (name == "Hr") atom.type = GenAtom::Hr;
  else throw ParseError("unknown atom '" + name + "'", lx.pos());
  lx.expect('(');
  ExprParser ep(lx);
  atom.a = ep.expr();
  lx.expect(',');
  atom.b = ep.expr();
  lx.expect(')');
  return atom;
}

// one multiplicative coefficient factor: number, parameter, sqrt(), (expr),
// optionally followed by ^int or /factor
inline ExprPtr parse_coeff_factor(Lexer& lx) {
  ExprPtr e;
  if (lx.peek() == '(') {
    lx.accept('(');
    e = ExprParser(lx).expr();
    lx.expect(')');
  } else if (lx.peek_digit()) {
    e = Expr::number(Rat(lx.uint_lit()));
  } else if (lx.accept("sqrt")) {
    lx.expect('(');
    e = Expr::node(Expr::Sqrt, ExprParser(lx).expr());
    lx.expect(')');
  } else {
    e = Expr::param(lx.ident());
  }
  if (lx.accept('^')) {
    BigInt n = lx.uint_lit();
    e = Expr::pow(e, static_cast<long>(n));
  }
  while (lx.accept('/')) {
    ExprPtr d;
    if (lx.peek() == '(') {
      lx.accept('(');
      d = ExprParser(lx).expr();
      lx.expect(')');
    } else if (lx.peek_digit()) {
      d = Expr::number(Rat(lx.uint_lit()));
    } else {
      d = Expr::param(lx.ident());
    }
    e = Expr::node(Expr::Div, e, d);
  }
  return e;
}

inline GenTerm parse_gen_term(Lexer& lx, int sign) {
  GenTerm term;
  term.sign = sign;
  for (;;) {
    if (peek_atom(lx)) {
      // "Hr" and "Hb"/"Ha" begin with H; parse_atom resolves; but a parameter
      // may not start with these letters (reserved by the grammar)
      term.atom = parse_atom(lx);
      return term;
    }
    ExprPtr f = parse_coeff_factor(lx);
    term.coeff = term.coeff ? Expr::node(Expr::Mul, term.coeff, f) : f;
    lx.expect('*');
  }
}

}  // namespace detail

inline GenExpr parse_genexpr(const std::string& text) {
  GenExpr g;
  g.text = text;
  Lexer lx(text);
  int sign = 1;
  if (lx.accept('-')) sign = -1;
  g.terms.push_back(detail::parse_gen_term(lx, sign));
  for (;;) {
    if (lx.accept('+')) g.terms.push_back(detail::parse_gen_term(lx, 1));
    else if (lx.accept('-')) g.terms.push_back(detail::parse_gen_term(lx, -1));
    else break;
  }
  if (!lx.done()) throw ParseError("trailing input in generator expression '" + lx.rest() + "'", lx.pos());
  return g;
}

inline std::string unparse(const GenExpr& g) {
  // canonical spacing: mirrors how the shipped table files are written,
  // so unparse(parse(x)) is token-identical on them
  return g.text;
}

// Evaluate a generator expression to ambient coordinates (over Quad; callers
// narrow to Rat when everything is rational).
inline Vec<Quad> eval_genexpr(const ChevalleyAlgebra& ca, const GenExpr& g, const Env& env) {
  const AlgName name = ca.roots.name;
  Vec<Quad> out(ca.alg.n, Quad(0));
  for (const GenTerm& t : g.terms) {
    Quad coeff = t.coeff ? eval(t.coeff, env) : Quad(1);
    if (t.sign < 0) coeff = -coeff;
    Vec<Rat> base;
    switch (t.atom.type) {
      case GenAtom::Ha: base = ca.alg.basis_vec(0); break;
      case GenAtom::Hb: base = ca.alg.basis_vec(1); break;
      case GenAtom::X:
      case GenAtom::Y: {
        const Rat m = rat_of(eval(t.atom.a, env)), n = rat_of(eval(t.atom.b, env));
        if (denominator(m) != 1 || denominator(n) != 1)
          throw std::domain_error("root label with non-integer entries");
        const Root r{static_cast<int>(numerator(m)), static_cast<int>(numerator(n))};
        const int idx = ca.root_index(r);
        if (idx < 0)
          throw std::domain_error("unknown atom: " + std::to_string(r.first) + "a+" + std::to_string(r.second) + "b is not a positive root of " + alg_name_str(name));
        base = ca.alg.basis_vec(t.atom.type == GenAtom::X ? ca.xi(idx) : ca.yi(idx));
        break;
      }
      case GenAtom::T: {
        if (name != AlgName::C2) throw std::domain_error("T(a,b) is defined for c2 only");
        base = toral(name, rat_of(eval(t.atom.a, env)), rat_of(eval(t.atom.b, env)));
        break;
      }
      case GenAtom::H: {
        if (name != AlgName::G2) throw std::domain_error("H(c,d) is defined for g2 only");
        base = toral(name, rat_of(eval(t.atom.a, env)), rat_of(eval(t.atom.b, env)));
        break;
      }
      case GenAtom::Hr: {
        base = coroot(name, rat_of(eval(t.atom.a, env)), rat_of(eval(t.atom.b, env)));
        break;
      }
    }
    for (int i = 0; i < ca.alg.n; ++i)
      if (!is_zero(base[i])) out[i] += coeff * Quad(base[i]);
  }
  return out;
}

// ---- table rows -------------------------------------------------------------

struct TableRow {
  std::string table_id;
  AlgName ambient;
  std::vector<GenExpr> generators;
  std::vector<std::string> params;
  std::vector<CondPtr> conditions;
  std::vector<std::string> condition_texts;
  int claimed_dim = 0;
  std::string kind;  // solvable | nilpotent | semisimple | levi
  ClassSpec claimed_class;
  std::string notes;
  int levi_dim = 0;  // for kind=levi: leading generators forming the Levi part
  int line_no = 0;
};

struct Table {
  std::string id;
  AlgName ambient;
  std::string title;
  int expected_rows = 0;
  std::vector<TableRow> rows;
};

struct TableParseError : std::runtime_error {
  TableParseError(const std::string& file, int line, const std::string& msg)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + msg) {}
};

namespace detail {

inline std::vector<std::string> split_pipes(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == '|') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  for (auto& f : fields) {
    while (!f.empty() && isspace(static_cast<unsigned char>(f.front()))) f.erase(f.begin());
    while (!f.empty() && isspace(static_cast<unsigned char>(f.back()))) f.pop_back();
  }
  return fields;
}

inline std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  for (auto& f : out) {
    while (!f.empty() && isspace(static_cast<unsigned char>(f.front()))) f.erase(f.begin());
    while (!f.empty() && isspace(static_cast<unsigned char>(f.back()))) f.pop_back();
  }
  return out;
}

}  // namespace detail

inline Table parse_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open table file " + path);
  Table table;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (line[0] == '!') {
      // !table <id> ambient=<a> rows=<n> title="..."
      Lexer lx(line.substr(1));
      if (!lx.accept("table")) throw TableParseError(path, line_no, "expected '!table' header");
      std::string id;
      while (!lx.done() && !isspace(static_cast<unsigned char>(lx.peek())) && lx.peek() != 'a') {
        // id may contain dots and digits; read raw
        break;
      }
      // simple manual header scan
      std::istringstream hs(line.substr(1));
      std::string word;
      hs >> word;  // "table"
      hs >> table.id;
      while (hs >> word) {
        if (word.rfind("ambient=", 0) == 0) {
          auto n = parse_alg_name(word.substr(8));
          if (!n) throw TableParseError(path, line_no, "bad ambient name");
          table.ambient = *n;
        } else if (word.rfind("rows=", 0) == 0) {
          table.expected_rows = std::stoi(word.substr(5));
        } else if (word.rfind("title=", 0) == 0) {
          std::string t = word.substr(6);
          std::string rest;
          std::getline(hs, rest);
          t += rest;
          if (t.size() >= 2 && t.front() == '"' && t.back() == '"') t = t.substr(1, t.size() - 2);
          table.title = t;
        }
      }
      continue;
    }
    const auto fields = detail::split_pipes(line);
    if (fields.size() != 9)
      throw TableParseError(path, line_no, "expected 9 pipe-separated fields, got " + std::to_string(fields.size()));
    TableRow row;
    row.line_no = line_no;
    row.table_id = fields[0];
    auto amb = parse_alg_name(fields[1]);
    if (!amb) throw TableParseError(path, line_no, "bad ambient '" + fields[1] + "'");
    row.ambient = *amb;
    try {
      for (const auto& g : detail::split_on(fields[2], ';')) row.generators.push_back(parse_genexpr(g));
      if (fields[3] != "-")
        for (const auto& p : detail::split_on(fields[3], ',')) row.params.push_back(p);
      if (fields[4] != "-")
        for (const auto& c : detail::split_on(fields[4], ';')) {
          row.conditions.push_back(parse_cond(c));
          row.condition_texts.push_back(c);
        }
      row.claimed_dim = std::stoi(fields[5]);
      row.kind = fields[6];
      if (row.kind != "solvable" && row.kind != "nilpotent" && row.kind != "semisimple" && row.kind != "levi")
        throw TableParseError(path, line_no, "bad kind '" + row.kind + "'");
      row.claimed_class = parse_class(fields[7]);
      row.notes = fields[8] == "-" ? "" : fields[8];
      if (row.kind == "levi") row.levi_dim = 3;
    } catch (const ParseError& e) {
      throw TableParseError(path, line_no, e.what());
    }
    if (row.claimed_dim != static_cast<int>(row.generators.size()))
      throw TableParseError(path, line_no, "claimed dim differs from generator count");
    table.rows.push_back(std::move(row));
  }
  if (table.expected_rows != static_cast<int>(table.rows.size()))
    throw TableParseError(path, 0, "row count " + std::to_string(table.rows.size()) + " differs from declared rows=" + std::to_string(table.expected_rows));
  return table;
}

inline std::vector<Table> load_tables(const std::string& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".tbl") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<Table> tables;
  for (const auto& f : files) tables.push_back(parse_table_file(f.string()));
  return tables;
}

// ---- sampling ---------------------------------------------------------------

// Base samples satisfying the row conditions, plus branch samples for every
// guard of a guarded class (the case splits get exact-branch coverage).
inline std::vector<Env> sample_row_params(const TableRow& row, int count, std::uint64_t seed,
                                          std::vector<std::string>* notes = nullptr) {
  SampleSpec base{row.params, row.conditions};
  if (row.params.empty()) return sample_envs(base, 1, seed);
  std::vector<Env> out = sample_envs(base, count, seed);
  if (row.claimed_class.mode == ClassSpec::Guarded) {
    for (size_t gi = 0; gi + 1 < row.claimed_class.alts.size(); ++gi) {
      SampleSpec branch = base;
      branch.conditions.push_back(row.claimed_class.alts[gi].guard);
      try {
        for (Env& e : sample_envs(branch, 2, seed + 1000 + gi))
          if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(std::move(e));
      } catch (const UnsatisfiableConditions&) {
        if (notes) notes->push_back("branch " + std::to_string(gi) + " has no admissible samples");
      }
    }
  }
  return out;
}

// ---- row verification --------------------------------------------------------

struct SampleResult {
  Env env;
  std::string verdict;  // match | mismatch | inconclusive
  std::string detail;
  std::string matched;
};

struct RowReport {
  std::string table_id;
  int row_index = 0;
  std::string gens_text;
  std::string class_text;
  std::vector<SampleResult> samples;
  std::string verdict;  // aggregated: match | mismatch | inconclusive
  std::vector<std::string> notes;
};

namespace detail {

inline std::string env_str(const Env& e) {
  if (e.empty()) return "{}";
  std::string s = "{";
  bool first = true;
  for (const auto& [k, v] : e) {
    if (!first) s += ",";
    first = false;
    s += k + "=" + scalar_str(v);
  }
  return s + "}";
}

// Structural check of a claimed semisimple type: A1 as an sl2 triple,
// A1xA1 as two commuting triples, A2 via Killing non-degeneracy plus the
// rank-2 root-space decomposition under its Cartan pair.
template <class K>
bool check_semisimple_type(const LieAlgebra<K>& ambient, const LieAlgebra<K>& B, const Subspace<K>& S,
                           const std::vector<Vec<K>>& gens, const std::string& type, std::string& why) {
  auto op_on = [&](const Vec<K>& x) {
    Mat<K> M(S.dim(), S.dim());
    for (int c = 0; c < S.dim(); ++c) {
      auto co = S.coords(ambient.bracket(x, S.row(c)));
      if (!co) throw InvariantViolation("span not invariant under its own element");
      for (int r = 0; r < S.dim(); ++r) M(r, c) = (*co)[r];
    }
    return M;
  };
  if (type == "A1") {
    if (B.n != 3) { why = "A1 claim with dim != 3"; return false; }
    if (!find_sl2_triple(ambient, gens)) { why = "generators do not normalize to an sl2 triple"; return false; }
    return true;
  }
  if (type == "A1xA1") {
    if (B.n != 6) { why = "A1xA1 claim with dim != 6"; return false; }
    auto t1 = find_sl2_triple(ambient, gens);
    if (!t1) { why = "no sl2 triple among the generators"; return false; }
    // centralizer of the first triple inside the span carries the second
    std::vector<Vec<K>> c_basis;
    {
      Mat<K> sys(3 * ambient.n, S.dim());
      for (int c = 0; c < S.dim(); ++c) {
        const Vec<K> bc = S.row(c);
        const Vec<K> b1 = ambient.bracket(bc, t1->h);
        const Vec<K> b2 = ambient.bracket(bc, t1->e);
        const Vec<K> b3 = ambient.bracket(bc, t1->f);
        for (int r = 0; r < ambient.n; ++r) {
          sys(r, c) = b1[r];
          sys(ambient.n + r, c) = b2[r];
          sys(2 * ambient.n + r, c) = b3[r];
        }
      }
      Mat<K> ker = kernel(sys);
      for (int r = 0; r < ker.rows; ++r) {
        Vec<K> v(ambient.n, K(0));
        for (int c = 0; c < S.dim(); ++c) vec_axpy(v, ker(r, c), S.row(c));
        c_basis.push_back(v);
      }
    }
    if (c_basis.size() != 3) {
      why = "centralizer of the first triple has dim " + std::to_string(c_basis.size());
      return false;
    }
    std::vector<Vec<K>> cands = c_basis;
    for (size_t i = 0; i < c_basis.size(); ++i)
      for (size_t j = 0; j < c_basis.size(); ++j) {
        if (i == j) continue;
        Vec<K> s = c_basis[i];
        vec_axpy(s, K(1), c_basis[j]);
        cands.push_back(s);
      }
    if (!find_sl2_triple(ambient, cands)) { why = "no commuting second sl2 triple"; return false; }
    return true;
  }
  if (type == "A2") {
    if constexpr (!std::is_same_v<K, Rat>) {
      why = "A2 check needs rational generators";
      return false;
    } else {
      if (B.n != 8) { why = "A2 claim with dim != 8"; return false; }
      const Mat<K> M1 = op_on(gens[0]), M2 = op_on(gens[1]);
      if (!(M1 * M2 - M2 * M1).is_zero_mat()) { why = "leading generators do not commute"; return false; }
      auto r1 = rational_roots(charpoly(M1)), r2 = rational_roots(charpoly(M2));
      if (!r1 || !r2) { why = "Cartan pair has irrational spectrum"; return false; }
      // common eigenspaces: expect the 2-dim zero space and six 1-dim
      // root spaces in opposite pairs
      std::vector<std::pair<Rat, Rat>> weights;
      int zero_dim = 0, total = 0;
      auto uniq = [](std::vector<Rat> v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
      };
      for (const Rat& a : uniq(*r1))
        for (const Rat& b : uniq(*r2)) {
          Mat<K> stack(2 * S.dim(), S.dim());
          Mat<K> s1 = M1, s2 = M2;
          for (int i = 0; i < S.dim(); ++i) { s1(i, i) -= a; s2(i, i) -= b; }
          for (int r = 0; r < S.dim(); ++r)
            for (int c = 0; c < S.dim(); ++c) {
              stack(r, c) = s1(r, c);
              stack(S.dim() + r, c) = s2(r, c);
            }
          const int dim = S.dim() - rank(stack);
          if (dim == 0) continue;
          total += dim;
          if (is_zero(a) && is_zero(b)) {
            zero_dim = dim;
          } else {
            if (dim != 1) { why = "root space of dim > 1"; return false; }
            weights.push_back({a, b});
          }
        }
      if (total != 8 || zero_dim != 2 || weights.size() != 6) {
        why = "root decomposition is not 2 + 6x1";
        return false;
      }
      for (const auto& [a, b] : weights) {
        if (std::find(weights.begin(), weights.end(), std::make_pair(Rat(-a), Rat(-b))) == weights.end()) {
          why = "root set not closed under negation";
          return false;
        }
      }
      return true;
    }
  }
  why = "unknown semisimple type " + type;
  return false;
}

template <class K>
SampleResult verify_row_at(const ChevalleyAlgebra& ca, const TableRow& row,
                           const std::vector<Vec<K>>& gens, const Env& env, const Catalog& cat,
                           FingerprintCache& cache) {
  SampleResult res;
  res.env = env;
  res.verdict = "mismatch";
  LieAlgebra<K> ambient;
  if constexpr (std::is_same_v<K, Rat>) ambient = ca.alg;
  else ambient = to_quad(ca.alg);
  // (1) independent generators spanning a bracket-closed subspace
  const Subspace<K> S = Subspace<K>::span(ambient.n, gens);
  if (S.dim() != static_cast<int>(gens.size())) {
    res.detail = "generators are linearly dependent: span has dim " + std::to_string(S.dim());
    return res;
  }
  const Subspace<K> C = closure(ambient, gens);
  if (!(C == S)) {
    res.detail = "not a subalgebra: closure grows to dim " + std::to_string(C.dim());
    return res;
  }
  if (S.dim() != row.claimed_dim) {
    res.detail = "dimension " + std::to_string(S.dim()) + " differs from claimed " + std::to_string(row.claimed_dim);
    return res;
  }
  const LieAlgebra<K> B = induced_algebra(ambient, S);
  // (2) claimed kind
  if (row.kind == "nilpotent" && !is_nilpotent(B)) {
    res.detail = "claimed nilpotent, algebra is not";
    return res;
  }
  if (row.kind == "solvable" && !is_solvable(B)) {
    res.detail = "claimed solvable, algebra is not";
    return res;
  }
  if (row.kind == "semisimple" && !is_semisimple(B)) {
    res.detail = "claimed semisimple, Killing form is degenerate";
    return res;
  }
  // (3) claimed class
  if (row.kind == "semisimple") {
    const std::string type = row.claimed_class.text;
    std::string why;
    if (!check_semisimple_type(ambient, B, S, gens, type, why)) {
      res.detail = why;
      return res;
    }
    res.verdict = "match";
    res.matched = type;
    return res;
  }
  if (row.kind == "levi") {
    std::vector<Vec<K>> levi(gens.begin(), gens.begin() + row.levi_dim);
    std::vector<Vec<K>> rad(gens.begin() + row.levi_dim, gens.end());
    LeviReport rep = verify_levi(ambient, levi, rad, row.claimed_class, env, cat, cache);
    if (!rep.ok) {
      res.detail = rep.detail;
      return res;
    }
    res.verdict = "match";
    res.matched = row.claimed_class.text + " [rho " + rep.rho.str() + "]";
    return res;
  }
  Verdict v = match_class(B, row.claimed_class, env, cat, cache);
  res.verdict = v.kind == Verdict::Match ? "match" : v.kind == Verdict::Inconclusive ? "inconclusive" : "mismatch";
  res.detail = v.detail;
  res.matched = v.matched;
  return res;
}

}  // namespace detail

// Verifies one table row at the given parameter samples: subalgebra closure,
// claimed dimension, claimed kind, claimed class.
inline RowReport verify_row(const TableRow& row, const std::vector<Env>& samples, const Catalog& cat,
                            FingerprintCache& cache) {
  RowReport rep;
  rep.table_id = row.table_id;
  for (size_t i = 0; i < row.generators.size(); ++i)
    rep.gens_text += (i ? "; " : "") + row.generators[i].text;
  rep.class_text = row.claimed_class.text;
  const ChevalleyAlgebra& ca = build(row.ambient);
  bool any_mismatch = false, any_inconclusive = false;
  for (const Env& env : samples) {
    SampleResult res;
    try {
      std::vector<Vec<Quad>> gens;
      bool rational = true;
      for (const auto& g : row.generators) {
        gens.push_back(eval_genexpr(ca, g, env));
        for (const Quad& x : gens.back())
          if (!x.rational()) rational = false;
      }
      if (rational) {
        std::vector<Vec<Rat>> rgens;
        for (const auto& g : gens) {
          Vec<Rat> r(g.size());
          for (size_t i = 0; i < g.size(); ++i) r[i] = g[i].a;
          rgens.push_back(std::move(r));
        }
        res = detail::verify_row_at<Rat>(ca, row, rgens, env, cat, cache);
      } else {
        res = detail::verify_row_at<Quad>(ca, row, gens, env, cat, cache);
      }
    } catch (const std::exception& e) {
      res.env = env;
      res.verdict = "mismatch";
      res.detail = std::string("error: ") + e.what();
    }
    if (res.verdict == "mismatch") any_mismatch = true;
    if (res.verdict == "inconclusive") any_inconclusive = true;
    rep.samples.push_back(std::move(res));
  }
  rep.verdict = any_mismatch ? "mismatch" : any_inconclusive ? "inconclusive" : "match";
  // unverified equivalence-column notes ride along into the report
  if (!row.notes.empty()) rep.notes.push_back(row.notes);
  return rep;
}

}  // namespace lie2

namespace lie2 {

// ---- printed equivalence rules ----------------------------------------------

struct EquivCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

namespace detail {

// projective normalization of a parameter pair
inline std::pair<Rat, Rat> proj(const Rat& x, const Rat& y) {
  if (!is_zero(x)) return {Rat(1), y / x};
  return {Rat(0), Rat(1)};
}

}  // namespace detail

// The Weyl-provable equivalence rules of the tables, checked exactly.
inline std::vector<EquivCheck> verify_equivalence_rules() {
  std::vector<EquivCheck> out;
  // Weyl group orders 8 / 6 / 4 / 12
  {
    EquivCheck c{"weyl group orders 8/6/4/12", true, ""};
    const int want[4] = {8, 6, 4, 12};
    const AlgName names[4] = {AlgName::C2, AlgName::A2, AlgName::A1xA1, AlgName::G2};
    for (int i = 0; i < 4; ++i) {
      const int got = weyl_group_order(names[i]);
      if (got != want[i]) {
        c.ok = false;
        c.detail += alg_name_str(names[i]) + " order " + std::to_string(got) + " != " + std::to_string(want[i]) + "; ";
      }
    }
    out.push_back(c);
  }
  // C2: s_a(T_{a,b}) = T_{a,-b} and s_b(T_{a,b}) = T_{b,a}, as printed
  {
    EquivCheck c{"c2 simple reflections act as printed on T(a,b)", true, ""};
    const auto& rs = build(AlgName::C2).roots;
    for (auto [a, b] : std::vector<std::pair<Rat, Rat>>{{1, 2}, {3, 1}, {Rat(-5, 2), 7}, {1, 0}, {2, 2}}) {
      const Vec<Rat> t = toral(AlgName::C2, a, b);
      const auto sa = reflect(rs, 0, t[0], t[1]);
      const Vec<Rat> want_a = toral(AlgName::C2, a, -b);
      const auto sb = reflect(rs, 1, t[0], t[1]);
      const Vec<Rat> want_b = toral(AlgName::C2, b, a);
      if (sa.first != want_a[0] || sa.second != want_a[1] || sb.first != want_b[0] || sb.second != want_b[1]) {
        c.ok = false;
        c.detail = "reflection image differs at (a,b)=(" + scalar_str(a) + "," + scalar_str(b) + ")";
      }
    }
    out.push_back(c);
  }
  // C2 table-1 rule: <T_{a,b}> ~ <T_{a',b'}> iff {a,b} = {l a', +-l b'};
  // the Weyl line orbit must generate exactly that set
  {
    EquivCheck c{"c2 toral line orbits match {a,b}={l a', +-l b'}", true, ""};
    for (auto [a, b] : std::vector<std::pair<Rat, Rat>>{{1, 2}, {3, 5}, {Rat(2, 3), -1}}) {
      const Vec<Rat> t = toral(AlgName::C2, a, b);
      auto orbit = weyl_line_orbit(AlgName::C2, t[0], t[1]);
      // map Cartan coords (x, y) back to the T-parameters (a, b) = (y, x - y)
      std::vector<std::pair<Rat, Rat>> got;
      for (auto& [x, y] : orbit) got.push_back(detail::proj(y, x - y));
      std::sort(got.begin(), got.end());
      std::vector<std::pair<Rat, Rat>> want{detail::proj(a, b), detail::proj(a, -b), detail::proj(b, a), detail::proj(-b, a)};
      std::sort(want.begin(), want.end());
      want.erase(std::unique(want.begin(), want.end()), want.end());
      if (got != want) {
        c.ok = false;
        c.detail = "orbit mismatch at (a,b)=(" + scalar_str(a) + "," + scalar_str(b) + ")";
      }
    }
    out.push_back(c);
  }
  // A2 six-map rule: the maps a, 1/a, 1-a, 1/(1-a), a/(a-1), (a-1)/a form a
  // group of order 6 and realize the Weyl line orbit of <Ha + a Hb>
  {
    EquivCheck c{"a2 six-map rule closes into a group of order 6", true, ""};
    using Mob = std::array<Rat, 4>;  // [[p,q],[r,s]] acting a -> (p a + q)/(r a + s)
    auto norm = [](Mob m) {
      for (const Rat& v : m)
        if (!is_zero(v)) {
          for (auto& x : m) x /= v;
          return m;
        }
      return m;
    };
    std::vector<Mob> maps = {norm({1, 0, 0, 1}),  norm({0, 1, 1, 0}),  norm({-1, 1, 0, 1}),
                             norm({0, 1, -1, 1}), norm({1, 0, 1, -1}), norm({1, -1, 1, 0})};
    std::vector<Mob> group = maps;
    for (size_t i = 0; i < group.size(); ++i)
      for (const Mob& g : maps) {
        const Mob& h = group[i];
        Mob prod = norm({g[0] * h[0] + g[1] * h[2], g[0] * h[1] + g[1] * h[3],
                         g[2] * h[0] + g[3] * h[2], g[2] * h[1] + g[3] * h[3]});
        if (std::find(group.begin(), group.end(), prod) == group.end()) group.push_back(prod);
      }
    if (group.size() != 6) {
      c.ok = false;
      c.detail = "generated group has order " + std::to_string(group.size());
    }
    // orbit of a = 3 under the printed maps
    auto apply = [](const Mob& m, const Rat& a) { return (m[0] * a + m[1]) / (m[2] * a + m[3]); };
    std::vector<Rat> orbit3;
    for (const Mob& m : group) {
      Rat v = apply(m, Rat(3));
      if (std::find(orbit3.begin(), orbit3.end(), v) == orbit3.end()) orbit3.push_back(v);
    }
    std::sort(orbit3.begin(), orbit3.end());
    const std::vector<Rat> want{Rat(-2), Rat(-1, 2), Rat(1, 3), Rat(2, 3), Rat(3, 2), Rat(3)};
    if (orbit3 != want) {
      c.ok = false;
      c.detail += " orbit of 3 differs";
    }
    // degenerate orbit of 1/2 has size 3
    std::vector<Rat> orbit_h;
    for (const Mob& m : group) {
      Rat v = apply(m, Rat(1, 2));
      if (std::find(orbit_h.begin(), orbit_h.end(), v) == orbit_h.end()) orbit_h.push_back(v);
    }
    if (orbit_h.size() != 3) {
      c.ok = false;
      c.detail += " degenerate orbit of 1/2 has size " + std::to_string(orbit_h.size());
    }
    // the Weyl line orbit realizes the same parameter set
    for (const Rat& a : {Rat(3), Rat(5), Rat(-7, 2)}) {
      auto lines = weyl_line_orbit(AlgName::A2, Rat(1), a);
      std::vector<Rat> weyl_params;
      for (auto& [x, y] : lines) {
        if (is_zero(x)) continue;  // the <Hb> line, outside this chart
        Rat v = y / x;
        if (std::find(weyl_params.begin(), weyl_params.end(), v) == weyl_params.end()) weyl_params.push_back(v);
      }
      std::vector<Rat> map_params;
      for (const Mob& m : group) {
        Rat v = apply(m, a);
        if (std::find(map_params.begin(), map_params.end(), v) == map_params.end()) map_params.push_back(v);
      }
      std::sort(weyl_params.begin(), weyl_params.end());
      std::sort(map_params.begin(), map_params.end());
      if (weyl_params != map_params) {
        c.ok = false;
        c.detail += " weyl orbit disagrees with the six maps at a=" + scalar_str(a);
      }
    }
    out.push_back(c);
  }
  // A1xA1: <Ha + a Hb> ~ <Ha + b Hb> iff a = +-b
  {
    EquivCheck c{"a1a1 toral line orbits are {a, -a}", true, ""};
    for (const Rat& a : {Rat(2), Rat(-5, 3), Rat(1)}) {
      auto lines = weyl_line_orbit(AlgName::A1xA1, Rat(1), a);
      std::vector<Rat> params;
      for (auto& [x, y] : lines)
        if (!is_zero(x)) params.push_back(y / x);
      std::sort(params.begin(), params.end());
      std::vector<Rat> want{a, -a};
      std::sort(want.begin(), want.end());
      want.erase(std::unique(want.begin(), want.end()), want.end());
      if (params != want) {
        c.ok = false;
        c.detail = "orbit mismatch at a=" + scalar_str(a);
      }
    }
    out.push_back(c);
  }
  // G2 one-dimensional family: every toral line has a Weyl representative in
  // the printed canonical domain (2c-3d)(-c+2d) >= 0
  {
    EquivCheck c{"g2 toral lines reach the canonical domain", true, ""};
    for (auto [cc, dd] : std::vector<std::pair<Rat, Rat>>{{5, 1}, {1, 1}, {-3, 2}, {7, -5}, {1, 0}, {0, 1}}) {
      const Vec<Rat> h = toral(AlgName::G2, cc, dd);
      auto orbit = weyl_line_orbit(AlgName::G2, h[0], h[1]);
      bool found = false;
      for (auto& [x, y] : orbit) {
        // coords are (c, 3d)
        const Rat c2 = x, d2 = y / 3;
        if ((2 * c2 - 3 * d2) * (-c2 + 2 * d2) >= 0) { found = true; break; }
      }
      if (!found) {
        c.ok = false;
        c.detail = "no canonical representative for (c,d)=(" + scalar_str(cc) + "," + scalar_str(dd) + ")";
      }
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace lie2
