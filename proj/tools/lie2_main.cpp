// lie2: exact construction of the rank-2 semisimple Lie algebras and
// mechanical verification of their subalgebra classification tables.
//
// Exit codes: 0 clean, 1 mathematical mismatch, 2 usage/parse error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "lie2/report.hpp"

using namespace lie2;

namespace {

int cmd_build(const std::string& name, const std::string& emit) {
  auto alg = parse_alg_name(name);
  if (!alg) {
    std::cerr << "error: unknown algebra '" << name << "' (expected c2, a2, a1a1 or g2)\n";
    return 2;
  }
  const nlohmann::json j = algebra_to_json(build(*alg).alg);
  if (emit.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(emit);
    out << j.dump(2) << "\n";
    std::cout << alg_name_str(*alg) << ": dim " << build(*alg).alg.n << " written to " << emit << "\n";
  }
  return 0;
}

std::vector<Vec<Quad>> parse_span(const ChevalleyAlgebra& ca, const std::string& span) {
  std::vector<Vec<Quad>> gens;
  for (const auto& part : detail::split_on(span, ';'))
    gens.push_back(eval_genexpr(ca, parse_genexpr(part), {}));
  if (gens.empty()) throw ParseError("empty generator list", 0);
  return gens;
}

bool all_rational(const std::vector<Vec<Quad>>& gens) {
  for (const auto& g : gens)
    for (const Quad& x : g)
      if (!x.rational()) return false;
  return true;
}

std::vector<Vec<Rat>> narrow(const std::vector<Vec<Quad>>& gens) {
  std::vector<Vec<Rat>> out;
  for (const auto& g : gens) {
    Vec<Rat> r(g.size());
    for (size_t i = 0; i < g.size(); ++i) r[i] = g[i].a;
    out.push_back(std::move(r));
  }
  return out;
}

// scan the catalog for a fingerprint match, deriving parameters from the
// algebra's own eigenvalue data where needed
nlohmann::json best_catalog_match(const LieAlgebra<Rat>& B) {
  const Catalog& cat = Catalog::instance();
  FingerprintCache cache;
  if (is_abelian(B))
    return {{"matched", std::to_string(B.n) + "*n_1_1"}, {"verdict", "match"}};
  for (const auto& id : cat.ids()) {
    const CatalogEntry& e = cat.entry(id);
    if (e.dim != B.n || !e.alias_of.empty()) continue;
    ClassPart part;
    part.base = id;
    for (const auto& p : e.params) part.params[p.name] = ParamSpec{ParamSpec::Wild, {}};
    ClassSpec spec;
    spec.alts.push_back({nullptr, {part}});
    spec.text = id;
    Verdict v = match_class(B, spec, {}, cat, cache);
    if (v.kind == Verdict::Match) return {{"matched", v.matched}, {"verdict", "match"}};
  }
  return {{"verdict", "inconclusive"},
          {"detail", "no single catalog entry of this dimension matches (direct sums are not scanned)"}};
}

int cmd_identify(const std::string& name, const std::string& span) {
  auto alg = parse_alg_name(name);
  if (!alg) {
    std::cerr << "error: unknown algebra '" << name << "'\n";
    return 2;
  }
  const ChevalleyAlgebra& ca = build(*alg);
  nlohmann::json out{{"algebra", alg_name_str(*alg)}, {"span", span}};
  try {
    auto gens = parse_span(ca, span);
    if (all_rational(gens)) {
      auto rgens = narrow(gens);
      auto S = Subspace<Rat>::span(ca.alg.n, rgens);
      auto C = closure(ca.alg, rgens);
      out["span_dim"] = S.dim();
      out["closure_dim"] = C.dim();
      if (!(C == S)) {
        out["verdict"] = "not-a-subalgebra";
        out["detail"] = "closure grows from dim " + std::to_string(S.dim()) + " to dim " + std::to_string(C.dim());
      } else {
        auto B = induced_algebra(ca.alg, S);
        auto fp = fingerprint(B);
        out["fingerprint"] = fp.to_json();
        out["kind"] = fp.semisimple  ? "semisimple"
                      : fp.nilpotent ? "nilpotent"
                      : fp.solvable  ? "solvable"
                                     : "levi-decomposable";
        out["match"] = best_catalog_match(B);
      }
    } else {
      auto S = Subspace<Quad>::span(ca.alg.n, gens);
      auto C = closure(to_quad(ca.alg), gens);
      out["span_dim"] = S.dim();
      out["closure_dim"] = C.dim();
      if (!(C == S)) {
        out["verdict"] = "not-a-subalgebra";
      } else {
        auto B = induced_algebra(to_quad(ca.alg), S);
        out["fingerprint"] = fingerprint(B).to_json();
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_decompose(const std::string& name, const std::string& sl2, const std::string& space) {
  auto alg = parse_alg_name(name);
  if (!alg) {
    std::cerr << "error: unknown algebra '" << name << "'\n";
    return 2;
  }
  const ChevalleyAlgebra& ca = build(*alg);
  try {
    auto triple_gens = parse_span(ca, sl2);
    if (triple_gens.size() != 3) throw std::domain_error("--sl2 expects exactly three generators h; e; f");
    const LieAlgebra<Quad> A = to_quad(ca.alg);
    Sl2Triple<Quad> t{triple_gens[0], triple_gens[1], triple_gens[2]};
    Subspace<Quad> S;
    if (space == "full") S = whole_space(A);
    else S = Subspace<Quad>::span(A.n, parse_span(ca, space));
    auto dec = decompose_sl2(A, t, S);
    nlohmann::json out{{"algebra", alg_name_str(*alg)},
                       {"space_dim", S.dim()},
                       {"highest_weights", dec.highest},
                       {"decomposition", dec.str()}};
    std::cout << out.dump(2) << "\n";
    return 0;
  } catch (const Sl2Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_fingerprint(const std::string& name, const std::string& span) {
  auto alg = parse_alg_name(name);
  if (!alg) {
    std::cerr << "error: unknown algebra '" << name << "'\n";
    return 2;
  }
  const ChevalleyAlgebra& ca = build(*alg);
  try {
    auto gens = parse_span(ca, span);
    if (!all_rational(gens)) {
      auto B = induced_algebra(to_quad(ca.alg), closure(to_quad(ca.alg), gens));
      std::cout << fingerprint(B).to_json().dump(2) << "\n";
    } else {
      auto rgens = narrow(gens);
      auto B = induced_algebra(ca.alg, closure(ca.alg, rgens));
      std::cout << fingerprint(B).to_json().dump(2) << "\n";
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_catalog(const std::string& show_id) {
  const Catalog& cat = Catalog::instance();
  if (show_id.empty()) {
    for (const auto& id : cat.ids()) {
      const auto& e = cat.entry(id);
      std::cout << id << "  dim " << e.dim << "  " << e.kind;
      if (!e.params.empty()) {
        std::cout << "  params";
        for (const auto& p : e.params) std::cout << " " << p.name;
      }
      if (!e.alias_of.empty()) std::cout << "  (alias of " << e.alias_of << ")";
      std::cout << "\n";
    }
    return 0;
  }
  try {
    const auto& e = cat.entry(show_id);
    nlohmann::json j{{"id", e.id}, {"dim", e.dim}, {"kind", e.kind}};
    if (!e.alias_of.empty()) j["alias_of"] = e.alias_of;
    if (!e.stated_nilradical.empty()) j["stated_nilradical"] = e.stated_nilradical;
    if (!e.rho.empty()) j["rho"] = e.rho;
    if (!e.note.empty()) j["note"] = e.note;
    if (e.alias_of.empty()) {
      Env env;
      for (const auto& p : e.params) env[p.name] = Quad(Rat(1, 2));  // display instance
      if (!e.params.empty()) j["display_params"] = detail::env_str(env);
      j["algebra"] = algebra_to_json(cat.instantiate<Rat>(show_id, env));
      j["fingerprint"] = fingerprint(cat.instantiate<Rat>(show_id, env)).to_json();
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_verify(const std::string& glob, int samples, std::uint64_t seed, const std::string& report_path,
               int jobs, bool timings) {
  std::vector<Table> tables;
  try {
    tables = load_tables(tables_dir());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (!glob.empty()) {
    std::vector<Table> filtered;
    for (auto& t : tables)
      if (t.id.find(glob) != std::string::npos) filtered.push_back(std::move(t));
    tables = std::move(filtered);
    if (tables.empty()) {
      std::cerr << "error: no table id contains '" << glob << "'\n";
      return 2;
    }
  }
  VerifyRunResult run = run_verify(tables, samples, seed, jobs);
  const nlohmann::json j = verify_report_json(run, seed, samples, timings);
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    out << j.dump(2) << "\n";
  }
  for (const auto& [table, reports] : run.tables) {
    int match = 0, mis = 0, inc = 0;
    for (const auto& r : reports) {
      if (r.verdict == "match") ++match;
      else if (r.verdict == "mismatch") ++mis;
      else ++inc;
    }
    std::cout << table.id << ": " << match << "/" << reports.size() << " rows match";
    if (inc) std::cout << ", " << inc << " inconclusive";
    if (mis) std::cout << ", " << mis << " MISMATCH";
    std::cout << "\n";
    for (const auto& r : reports)
      if (r.verdict != "match") {
        std::cout << "  row " << r.row_index << " [" << r.gens_text << "] -> " << r.verdict << "\n";
        for (const auto& s : r.samples)
          if (s.verdict != "match")
            std::cout << "    " << detail::env_str(s.env) << ": " << s.detail << "\n";
      }
  }
  for (const auto& e : run.equivalences)
    std::cout << (e.ok ? "ok  " : "FAIL") << " equivalence: " << e.name
              << (e.detail.empty() ? "" : " (" + e.detail + ")") << "\n";
  std::cout << "rows: " << run.rows_match << " match, " << run.rows_inconclusive << " inconclusive, "
            << run.rows_mismatch << " mismatch (of " << run.rows_total << "); elapsed "
            << run.elapsed_seconds << "s\n";
  bool equiv_ok = true;
  for (const auto& e : run.equivalences) equiv_ok = equiv_ok && e.ok;
  return (run.rows_mismatch == 0 && equiv_ok) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rank-2 Lie algebra construction and table verification"};
  app.require_subcommand(1);

  std::string name, emit, span, sl2, space = "full", glob, report_path, show_id;
  int samples = 5, jobs = 1;
  std::uint64_t seed = 1;
  bool timings = false;

  auto* b = app.add_subcommand("build", "construct an ambient algebra and emit its structure constants");
  b->add_option("name", name, "c2 | a2 | a1a1 | g2")->required();
  b->add_option("--emit", emit, "output path (default: stdout)");

  auto* v = app.add_subcommand("verify", "verify classification table rows against the catalog");
  v->add_option("--tables", glob, "only tables whose id contains this substring");
  v->add_option("--samples", samples, "samples per parameterized row (default 5)");
  v->add_option("--seed", seed, "sampling seed (recorded in the report)");
  v->add_option("--report", report_path, "write the JSON report here");
  v->add_option("--jobs", jobs, "parallel verification threads");
  v->add_flag("--timings", timings, "embed wall-clock timings in the JSON report");

  auto* i = app.add_subcommand("identify", "closure, kind, fingerprint and catalog match of a span");
  i->add_option("--algebra", name, "ambient algebra")->required();
  i->add_option("--span", span, "';'-separated generator expressions")->required();

  auto* d = app.add_subcommand("decompose", "decompose a space under an sl2 triple");
  d->add_option("--algebra", name, "ambient algebra")->required();
  d->add_option("--sl2", sl2, "triple 'h; e; f'")->required();
  d->add_option("--space", space, "'full' or ';'-separated generators");

  auto* f = app.add_subcommand("fingerprint", "fingerprint of the subalgebra generated by a span");
  f->add_option("--algebra", name, "ambient algebra")->required();
  f->add_option("--span", span, "';'-separated generator expressions")->required();

  auto* c = app.add_subcommand("catalog", "list or show reference algebras");
  c->add_option("--show", show_id, "catalog id to display (default: list all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (b->parsed()) return cmd_build(name, emit);
    if (v->parsed()) return cmd_verify(glob, samples, seed, report_path, jobs, timings);
    if (i->parsed()) return cmd_identify(name, span);
    if (d->parsed()) return cmd_decompose(name, sl2, space);
    if (f->parsed()) return cmd_fingerprint(name, span);
    if (c->parsed()) return cmd_catalog(show_id);
  } catch (const TableParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
