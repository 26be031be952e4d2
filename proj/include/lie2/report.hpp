#pragma once

// JSON serialization: algebras (sparse structure-constant triples, bit-exact
// round trip) and the verification report. Reports are byte-identical for a
// fixed seed; wall-clock timings are embedded only on request.

#include <atomic>
#include <chrono>
#include <thread>

#include <json.hpp>

#include "lie2/tables.hpp"

namespace lie2 {

template <class K>
nlohmann::json algebra_to_json(const LieAlgebra<K>& A) {
  nlohmann::json constants = nlohmann::json::array();
  for (int i = 0; i < A.n; ++i)
    for (int j = i + 1; j < A.n; ++j)
      for (int k = 0; k < A.n; ++k)
        if (!is_zero(A.cc(i, j, k)))
          constants.push_back({i, j, k, scalar_str(A.cc(i, j, k))});
  return nlohmann::json{{"dim", A.n}, {"label", A.label}, {"constants", constants}};
}

inline LieAlgebra<Quad> algebra_from_json(const nlohmann::json& j) {
  LieAlgebra<Quad> A(j.at("dim").get<int>(), j.value("label", ""));
  for (const auto& t : j.at("constants"))
    A.set(t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>(), parse_quad(t.at(3).get<std::string>()));
  return A;
}

inline nlohmann::json row_report_json(const RowReport& rep) {
  nlohmann::json samples = nlohmann::json::array();
  for (const auto& s : rep.samples) {
    nlohmann::json js{{"params", detail::env_str(s.env)}, {"verdict", s.verdict}};
    if (!s.matched.empty()) js["matched"] = s.matched;
    if (!s.detail.empty()) js["detail"] = s.detail;
    samples.push_back(js);
  }
  nlohmann::json j{{"row", rep.row_index},      {"generators", rep.gens_text},
                   {"class", rep.class_text},   {"verdict", rep.verdict},
                   {"samples", samples}};
  if (!rep.notes.empty()) j["notes"] = rep.notes;
  return j;
}

struct VerifyRunResult {
  std::vector<std::pair<Table, std::vector<RowReport>>> tables;
  std::vector<EquivCheck> equivalences;
  int rows_total = 0, rows_match = 0, rows_inconclusive = 0, rows_mismatch = 0;
  double elapsed_seconds = 0;
};

inline nlohmann::json verify_report_json(const VerifyRunResult& run, std::uint64_t seed, int samples,
                                         bool with_timings) {
  nlohmann::json tables = nlohmann::json::array();
  for (const auto& [table, reports] : run.tables) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : reports) rows.push_back(row_report_json(r));
    tables.push_back({{"id", table.id},
                      {"title", table.title},
                      {"ambient", alg_name_str(table.ambient)},
                      {"rows", rows}});
  }
  nlohmann::json equiv = nlohmann::json::array();
  for (const auto& e : run.equivalences)
    equiv.push_back({{"name", e.name}, {"ok", e.ok}, {"detail", e.detail}});
  nlohmann::json unverified = nlohmann::json::array();
  for (const auto& [table, reports] : run.tables)
    for (const auto& r : reports)
      for (const auto& n : r.notes)
        if (n.rfind("equiv:", 0) == 0)
          unverified.push_back(table.id + " row " + std::to_string(r.row_index) + ": " + n.substr(6) +
                               " (claimed inner-automorphism equivalence; witness not printed)");
  std::vector<std::string> deviations = Catalog::instance().known_deviations();
  for (const auto& [table, reports] : run.tables)
    for (const auto& r : reports)
      for (const auto& n : r.notes)
        if (n.rfind("erratum:", 0) == 0)
          deviations.push_back(table.id + " row " + std::to_string(r.row_index) + ": " + n.substr(8));
  nlohmann::json j{
      {"tool", "lie2"},
      {"schema", 1},
      {"version", "1.0.0"},
      {"seed", seed},
      {"samples_per_row", samples},
      {"known_deviations", deviations},
      {"tables", tables},
      {"equivalence_checks", equiv},
      {"unverified_equivalences", unverified},
      {"summary",
       {{"rows_total", run.rows_total},
        {"rows_match", run.rows_match},
        {"rows_inconclusive", run.rows_inconclusive},
        {"rows_mismatch", run.rows_mismatch}}}};
  if (with_timings) j["elapsed_seconds"] = run.elapsed_seconds;
  return j;
}

}  // namespace lie2

namespace lie2 {

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (a + 1) + 0xbf58476d1ce4e5b9ULL * (b + 1);
  z ^= z >> 30;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

// Full verification pass over the given tables; row order in the result is
// fixed, so any --jobs value produces the same report.
inline VerifyRunResult run_verify(const std::vector<Table>& tables, int samples, std::uint64_t seed,
                                  int jobs = 1) {
  const auto t0 = std::chrono::steady_clock::now();
  VerifyRunResult run;
  const Catalog& cat = Catalog::instance();
  static FingerprintCache cache;
  for (const auto& t : tables) run.tables.push_back({t, std::vector<RowReport>(t.rows.size())});
  struct Job {
    size_t ti, ri;
  };
  std::vector<Job> jobs_list;
  for (size_t ti = 0; ti < tables.size(); ++ti)
    for (size_t ri = 0; ri < tables[ti].rows.size(); ++ri) jobs_list.push_back({ti, ri});
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= jobs_list.size()) return;
      const auto [ti, ri] = jobs_list[i];
      const TableRow& row = tables[ti].rows[ri];
      std::vector<std::string> sample_notes;
      RowReport rep;
      try {
        const auto envs = sample_row_params(row, samples, mix_seed(seed, ti, ri), &sample_notes);
        rep = verify_row(row, envs, cat, cache);
      } catch (const std::exception& e) {
        rep.table_id = row.table_id;
        rep.verdict = "mismatch";
        rep.notes.push_back(std::string("error: ") + e.what());
      }
      rep.row_index = static_cast<int>(ri) + 1;
      for (auto& n : sample_notes) rep.notes.push_back(n);
      run.tables[ti].second[ri] = std::move(rep);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& [table, reports] : run.tables)
    for (const auto& r : reports) {
      ++run.rows_total;
      if (r.verdict == "match") ++run.rows_match;
      else if (r.verdict == "inconclusive") ++run.rows_inconclusive;
      else ++run.rows_mismatch;
    }
  run.equivalences = verify_equivalence_rules();
  run.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return run;
}

}  // namespace lie2
