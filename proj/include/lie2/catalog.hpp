#pragma once

// Machine encoding of the reference-algebra catalog (data/catalog.json):
// loading, parameterized instantiation over Rat or Quad, the rho_j
// representation matrices, and the class-expression grammar used by the
// classification tables ("n_1_1+s_2_1", "A1:s_4_8(A=1)",
// "s_3_1(alpha=-2*(a+1)/(a+3)^2)", guarded case splits, choice sets).

#include <fstream>

#include <json.hpp>

#include "lie2/rank2.hpp"
#include "lie2/sampling.hpp"

namespace lie2 {

struct CatalogParam {
  std::string name;
  CondPtr require;    // hard admissibility
  CondPtr canonical;  // printed canonical-name condition; warning only
};

struct BracketTerm {
  int i, j, k;  // 0-based
  ExprPtr coeff;
};

struct CatalogEntry {
  std::string id;
  int dim = 0;
  std::string kind;  // nilpotent | solvable | semisimple | levi
  std::vector<CatalogParam> params;
  std::vector<BracketTerm> brackets;
  std::vector<BracketTerm> printed_brackets;  // kept for deviation checks
  std::string stated_nilradical;
  std::string alias_of;  // class expression this id resolves to
  std::string builtin;   // ambient algebra name for built-in entries
  std::string radical_class;
  std::vector<int> rho;  // sl2 block dimensions on the radical
  int levi_dim = 0;
  std::string note;
};

struct ConstraintViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct QuarantinedEntry : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string data_dir() {
  if (const char* env = std::getenv("LIE2_DATA_DIR")) return env;
  return LIE2_SOURCE_DATA_DIR;
}
inline std::string tables_dir() {
  if (const char* env = std::getenv("LIE2_TABLE_DIR")) return env;
  return data_dir() + "/tables";
}

class Catalog {
 public:
  static const Catalog& instance() {
    static const Catalog cat(data_dir() + "/catalog.json");
    return cat;
  }

  explicit Catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog file " + path);
    nlohmann::json doc = nlohmann::json::parse(in);
    for (const auto& d : doc.at("known_deviations")) deviations_.push_back(d.get<std::string>());
    for (const auto& je : doc.at("entries")) {
      CatalogEntry e;
      e.id = je.at("id").get<std::string>();
      e.dim = je.at("dim").get<int>();
      e.kind = je.at("kind").get<std::string>();
      if (je.contains("brackets"))
        for (const auto& b : je.at("brackets")) e.brackets.push_back(parse_bracket(b, e.dim));
      if (je.contains("printed_brackets"))
        for (const auto& b : je.at("printed_brackets")) e.printed_brackets.push_back(parse_bracket(b, e.dim));
      if (je.contains("params"))
        for (const auto& p : je.at("params")) {
          CatalogParam cp;
          cp.name = p.at("name").get<std::string>();
          if (p.contains("require")) cp.require = parse_cond(p.at("require").get<std::string>());
          if (p.contains("canonical")) cp.canonical = parse_cond(p.at("canonical").get<std::string>());
          e.params.push_back(std::move(cp));
        }
      if (je.contains("stated_nilradical")) e.stated_nilradical = je.at("stated_nilradical").get<std::string>();
      if (je.contains("alias_of")) e.alias_of = je.at("alias_of").get<std::string>();
      if (je.contains("builtin")) e.builtin = je.at("builtin").get<std::string>();
      if (je.contains("radical")) e.radical_class = je.at("radical").get<std::string>();
      if (je.contains("rho")) for (const auto& r : je.at("rho")) e.rho.push_back(r.get<int>());
      if (je.contains("levi_dim")) e.levi_dim = je.at("levi_dim").get<int>();
      if (je.contains("note")) e.note = je.at("note").get<std::string>();
      order_.push_back(e.id);
      entries_.emplace(e.id, std::move(e));
    }
  }

  const std::vector<std::string>& ids() const { return order_; }
  const std::vector<std::string>& known_deviations() const { return deviations_; }

  const CatalogEntry& entry(const std::string& id) const {
    auto it = entries_.find(id);
    if (it == entries_.end()) throw std::domain_error("unknown catalog id '" + id + "'");
    return it->second;
  }
  bool has(const std::string& id) const { return entries_.count(id) != 0; }

  // Concrete algebra for an entry at given parameter values. Hard parameter
  // constraints are enforced; canonical-name conditions only add warnings
  // (checked for rational values). A Jacobi failure marks the entry as a
  // transcription bug and is never patched over.
  template <class K>
  LieAlgebra<K> instantiate(const std::string& id, const Env& env,
                            std::vector<std::string>* warnings = nullptr) const {
    const CatalogEntry& e = entry(id);
    if (!e.alias_of.empty()) throw std::domain_error("entry '" + id + "' is an alias of " + e.alias_of + "; resolve the class expression instead");
    if (!e.builtin.empty()) {
      if constexpr (std::is_same_v<K, Rat>) return build(*parse_alg_name(e.builtin)).alg;
      else throw std::domain_error("builtin entries are rational-only");
    }
    for (const auto& p : e.params) {
      if (!env.count(p.name)) throw ConstraintViolation(id + ": missing parameter " + p.name);
      if (p.require && !eval_cond_or(p.require, env, false))
        throw ConstraintViolation(id + ": parameter constraint violated for " + p.name);
      if (p.canonical && warnings && !eval_cond_or(p.canonical, env, true))
        warnings->push_back(id + ": non-canonical parameter value for " + p.name + " (accepted; identification is by invariants)");
    }
    LieAlgebra<K> A(e.dim, display_name(id, env));
    for (const auto& b : e.brackets) {
      const Quad v = eval(b.coeff, env);
      K val;
      if constexpr (std::is_same_v<K, Rat>) val = rat_of(v);
      else val = v;
      add_term(A, b.i, b.j, b.k, val);
    }
    if (!A.check_jacobi().empty())
      throw QuarantinedEntry("catalog entry " + id + " fails the Jacobi identity at the given parameters; entry quarantined");
    return A;
  }

  // Three deterministic admissible parameter points for an entry.
  std::vector<Env> sample_admissible(const std::string& id, int count, std::uint64_t seed) const {
    const CatalogEntry& e = entry(id);
    SampleSpec spec;
    for (const auto& p : e.params) {
      spec.names.push_back(p.name);
      if (p.require) spec.conditions.push_back(p.require);
    }
    return sample_envs(spec, e.params.empty() ? 1 : count, seed);
  }

  static std::string display_name(const std::string& id, const Env& env) {
    if (env.empty()) return id;
    std::string s = id + "[";
    bool first = true;
    for (const auto& [k, v] : env) {
      if (!first) s += ",";
      first = false;
      s += k + "=" + scalar_str(v);
    }
    return s + "]";
  }

 private:
  static bool eval_cond_or(const CondPtr& c, const Env& env, bool fallback) {
    try {
      return eval_cond(c, env);
    } catch (const std::domain_error&) {
      return fallback;  // irrational value in an order comparison
    }
  }

  static BracketTerm parse_bracket(const nlohmann::json& b, int dim) {
    BracketTerm t;
    t.i = b.at(0).get<int>() - 1;
    t.j = b.at(1).get<int>() - 1;
    t.coeff = parse_expr(b.at(2).get<std::string>());
    t.k = b.at(3).get<int>() - 1;
    if (t.i < 0 || t.j < 0 || t.k < 0 || t.i >= dim || t.j >= dim || t.k >= dim)
      throw std::runtime_error("bracket index out of range in catalog");
    return t;
  }

  template <class K>
  static void add_term(LieAlgebra<K>& A, int i, int j, int k, const K& v) {
    const K cur = A.cc(i, j, k);
    A.set(i, j, k, cur + v);
  }

  std::map<std::string, CatalogEntry> entries_;
  std::vector<std::string> order_;
  std::vector<std::string> deviations_;
};

// ---- rho_j: the irreducible sl2 representation matrices ----------------

struct Sl2Rep {
  int j = 0;
  Mat<Rat> h, up, down;  // action of h, p+, p-
};

// Corrected raising coefficient k(j-k); the printed k(j-1) breaks
// [p+,p-] = h for j >= 3 (exercised by tests and reported as a deviation).
inline Sl2Rep rho(int j, bool printed_form = false) {
  if (j < 1) throw std::domain_error("rho_j needs j >= 1");
  Sl2Rep r;
  r.j = j;
  r.h = Mat<Rat>(j, j);
  r.up = Mat<Rat>(j, j);
  r.down = Mat<Rat>(j, j);
  for (int k = 0; k < j; ++k) {
    r.h(k, k) = Rat(j - 1 - 2 * k);
    if (k + 1 < j) r.down(k + 1, k) = Rat(1);  // p- v_k = v_{k+1}
    if (k > 0) r.up(k - 1, k) = printed_form ? Rat(k * (j - 1)) : Rat(k * (j - k));
  }
  return r;
}

inline bool sl2_rep_relations_hold(const Sl2Rep& r) {
  const Mat<Rat> he = r.h * r.up - r.up * r.h;
  const Mat<Rat> hf = r.h * r.down - r.down * r.h;
  const Mat<Rat> ef = r.up * r.down - r.down * r.up;
  return he == r.up * Rat(2) && hf == r.down * Rat(-2) && ef == r.h;
}

// ---- class expressions ---------------------------------------------------

struct ParamSpec {
  enum Kind { ExactV, Choice, AlphaForm, Wild } kind = ExactV;
  std::vector<ExprPtr> exprs;
};

struct ClassPart {
  int mult = 1;
  std::string base;
  std::map<std::string, ParamSpec> params;
};

struct ClassAlt {
  CondPtr guard;  // null for the else / unguarded branch
  std::vector<ClassPart> parts;
};

struct ClassSpec {
  enum Mode { Plain, Guarded, OneOf } mode = Plain;
  std::string text;
  std::vector<ClassAlt> alts;
};

namespace detail {

inline ClassPart parse_class_part(Lexer& lx);

inline std::vector<ClassPart> parse_class_sum(Lexer& lx) {
  std::vector<ClassPart> parts{parse_class_part(lx)};
  while (lx.accept('+')) parts.push_back(parse_class_part(lx));
  return parts;
}

inline void parse_param_specs(Lexer& lx, ClassPart& part) {
  do {
    std::string name = lx.ident();
    if (lx.accept("in")) {
      lx.expect('{');
      ParamSpec ps;
      ps.kind = ParamSpec::Choice;
      do ps.exprs.push_back(ExprParser(lx).expr());
      while (lx.accept(','));
      lx.expect('}');
      part.params[name] = std::move(ps);
      continue;
    }
    lx.expect('=');
    if (lx.accept('?')) {
      part.params[name] = ParamSpec{ParamSpec::Wild, {}};
      continue;
    }
    ParamSpec ps;
    ps.kind = name == "alpha" ? ParamSpec::AlphaForm : ParamSpec::ExactV;
    ps.exprs.push_back(ExprParser(lx).expr());
    part.params[name] = std::move(ps);
  } while (lx.accept(','));
}

inline ClassPart parse_class_part(Lexer& lx) {
  if (lx.accept('(')) {
    ClassPart p = parse_class_part(lx);
    lx.expect(')');
    return p;
  }
  ClassPart p;
  if (lx.peek_digit()) {
    p.mult = static_cast<int>(lx.uint_lit());
    lx.expect('*');
  }
  std::string base = lx.ident();
  // "A1:<radical>" names a Levi table entry; the lookahead keeps the colon
  // of guarded class branches ("if c: ...") unambiguous
  bool levi_sep = false;
  if (base == "A1" && lx.peek() == ':') {
    size_t save = lx.pos();
    lx.accept(':');
    levi_sep = lx.peek_digit() || lx.peek() == 'n' || lx.peek() == 's';
    if (!levi_sep) lx.reset(save);
  }
  if (levi_sep) {  // Levi table id: reconstruct the canonical string
    std::string rad;
    if (lx.peek_digit()) {
      rad += BigInt(lx.uint_lit()).str();
      lx.expect('*');
      rad += "*";
    }
    rad += lx.ident();
    if (lx.accept('(')) {
      rad += "(";
      bool first = true;
      do {
        if (!first) rad += ",";
        first = false;
        std::string pname = lx.ident();
        lx.expect('=');
        // parameter values inside levi ids are literal rationals
        bool negative = lx.accept('-');
        BigInt num = lx.uint_lit();
        std::string val = (negative ? "-" : "") + num.str();
        if (lx.accept('/')) val += "/" + BigInt(lx.uint_lit()).str();
        rad += pname + "=" + val;
      } while (lx.accept(','));
      lx.expect(')');
      rad += ")";
    }
    p.base = base + ":" + rad;
    return p;
  }
  p.base = base;
  if (lx.accept('(')) {
    parse_param_specs(lx, p);
    lx.expect(')');
  }
  return p;
}

}  // namespace detail

inline ClassSpec parse_class(const std::string& text) {
  ClassSpec spec;
  spec.text = text;
  Lexer lx(text);
  if (lx.accept("oneof")) {
    spec.mode = ClassSpec::OneOf;
    lx.expect(':');
    do {
      ClassAlt alt;
      alt.parts = detail::parse_class_sum(lx);
      spec.alts.push_back(std::move(alt));
    } while (lx.accept('/'));
    if (!lx.done()) throw ParseError("trailing input in class expression '" + lx.rest() + "'", lx.pos());
    return spec;
  }
  if (lx.accept("if")) {
    spec.mode = ClassSpec::Guarded;
    for (;;) {
      ClassAlt alt;
      ExprParser ep(lx);
      alt.guard = ep.cond();
      lx.expect(':');
      alt.parts = detail::parse_class_sum(lx);
      spec.alts.push_back(std::move(alt));
      lx.expect(';');
      if (lx.accept("else")) {
        lx.expect(':');
        ClassAlt last;
        last.parts = detail::parse_class_sum(lx);
        spec.alts.push_back(std::move(last));
        break;
      }
      if (!lx.accept("if")) throw ParseError("expected 'if' or 'else' branch", lx.pos());
    }
  } else {
    ClassAlt alt;
    alt.parts = detail::parse_class_sum(lx);
    spec.alts.push_back(std::move(alt));
  }
  if (!lx.done()) throw ParseError("trailing input in class expression '" + lx.rest() + "'", lx.pos());
  return spec;
}

// A fully concrete claim: parts with literal parameter values.
struct ConcreteClass {
  struct Part {
    std::string id;
    Env env;
  };
  std::vector<Part> parts;  // multiplicity expanded
  bool needs_quad = false;
  std::string describe;
};

// The positive branch of the paper's quadratic parameterization
// A = (1 + 2 alpha + sqrt(1 + 4 alpha)) / (-2 alpha); A and 1/A give the
// same class, so verifying one branch suffices.
inline Quad alpha_to_A(const Rat& alpha) {
  if (is_zero(alpha)) throw std::domain_error("alpha-form parameter with alpha = 0");
  const Quad s = quad_sqrt(Rat(1) + 4 * alpha);
  return (Quad(Rat(1) + 2 * alpha) + s) / Quad(Rat(-2) * alpha);
}

// Expand one class alternative into concrete candidate claims at the given
// row-parameter values. Choice parameters branch; candidates violating hard
// entry constraints are dropped.
inline std::vector<ConcreteClass> resolve_candidates(const Catalog& cat, const std::vector<ClassPart>& parts,
                                                     const Env& row_env) {
  std::vector<ConcreteClass> result{ConcreteClass{}};
  for (const ClassPart& part : parts) {
    // candidate envs for this part
    std::vector<Env> envs{Env{}};
    for (const auto& [name, ps] : part.params) {
      std::vector<Env> next;
      switch (ps.kind) {
        case ParamSpec::ExactV:
          for (Env e : envs) {
            e[name] = eval(ps.exprs[0], row_env);
            next.push_back(std::move(e));
          }
          break;
        case ParamSpec::Choice:
          for (const Env& e : envs)
            for (const auto& ex : ps.exprs) {
              Quad v;
              try {
                v = eval(ex, row_env);
              } catch (const std::domain_error&) {
                continue;  // e.g. division by zero for this choice at this sample
              }
              Env e2 = e;
              e2[name] = v;
              next.push_back(std::move(e2));
            }
          break;
        case ParamSpec::AlphaForm: {
          // the entry's single parameter is the quadratic branch value
          const Rat alpha = rat_of(eval(ps.exprs[0], row_env));
          for (Env e : envs) {
            e["A"] = alpha_to_A(alpha);
            next.push_back(std::move(e));
          }
          break;
        }
        case ParamSpec::Wild:
          next = envs;  // filled in later by eigenvalue-derived matching
          break;
      }
      envs = std::move(next);
    }
    // alias resolution: replace this part by the alias class parts
    std::string base = part.base;
    std::vector<ClassPart> alias_parts;
    if (cat.has(base) && !cat.entry(base).alias_of.empty()) {
      ClassSpec alias = parse_class(cat.entry(base).alias_of);
      alias_parts = alias.alts.at(0).parts;
    }
    std::vector<ConcreteClass> grown;
    for (const ConcreteClass& c : result)
      for (const Env& e : envs) {
        ConcreteClass c2 = c;
        for (int m = 0; m < part.mult; ++m) {
          if (!alias_parts.empty()) {
            for (const ClassPart& ap : alias_parts)
              for (int am = 0; am < ap.mult; ++am) c2.parts.push_back({ap.base, {}});
          } else {
            c2.parts.push_back({base, e});
          }
        }
        for (const auto& [k, v] : e)
          if (!v.rational()) c2.needs_quad = true;
        grown.push_back(std::move(c2));
      }
    result = std::move(grown);
  }
  // drop candidates violating hard constraints; describe the survivors
  std::vector<ConcreteClass> ok;
  for (ConcreteClass& c : result) {
    bool good = true;
    for (const auto& p : c.parts) {
      const CatalogEntry& e = cat.entry(p.id);
      for (const auto& cp : e.params) {
        if (!p.env.count(cp.name)) continue;  // wild: filled by eigenvalue matching later
        if (cp.require) {
          try {
            if (!eval_cond(cp.require, p.env)) good = false;
          } catch (const std::domain_error&) {
            // irrational value in an order comparison: keep (identification is by invariants)
          }
        }
      }
      if (!good) break;
    }
    if (!good) continue;
    std::string d;
    for (const auto& p : c.parts) {
      if (!d.empty()) d += " + ";
      d += Catalog::display_name(p.id, p.env);
    }
    c.describe = d;
    bool dup = false;
    for (const auto& prev : ok)
      if (prev.describe == c.describe) { dup = true; break; }
    if (!dup) ok.push_back(std::move(c));
  }
  return ok;
}

}  // namespace lie2
