#pragma once

// Deterministic, seeded sampling of rational parameter assignments subject
// to exact conditions. Candidates come from a fixed height-ordered stream of
// small rationals; the seed drives a reproducible walk, so a given seed
// always produces byte-identical samples.

#include <algorithm>
#include <random>

#include "lie2/expr.hpp"

namespace lie2 {

inline const std::vector<Rat>& rational_stream() {
  static const std::vector<Rat> stream = [] {
    std::vector<Rat> out;
    // ordered by height = max(|p|, q), small values first
    for (int h = 1; h <= 9; ++h)
      for (int q = 1; q <= h; ++q)
        for (int p = -h; p <= h; ++p) {
          if (std::max(std::abs(p), q) != h) continue;
          Rat r = make_rat(p, q);
          if (std::find(out.begin(), out.end(), r) != out.end()) continue;
          out.push_back(r);
        }
    out.insert(out.begin(), Rat(0));
    return out;
  }();
  return stream;
}

struct SampleSpec {
  std::vector<std::string> names;
  std::vector<CondPtr> conditions;  // all must hold
};

struct UnsatisfiableConditions : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// `count` admissible assignments; deterministic for a fixed seed.
inline std::vector<Env> sample_envs(const SampleSpec& spec, int count, std::uint64_t seed) {
  std::vector<Env> out;
  auto admissible = [&](const Env& e) {
    try {
      for (const auto& c : spec.conditions)
        if (!eval_cond(c, e)) return false;
    } catch (const std::domain_error&) {
      return false;  // e.g. division by zero inside a condition
    }
    return true;
  };
  if (spec.names.empty()) {
    Env e;
    if (!admissible(e)) throw UnsatisfiableConditions("parameter-free conditions do not hold");
    out.push_back(e);
    return out;
  }
  const auto& stream = rational_stream();
  std::mt19937_64 rng(seed);
  for (std::uint64_t trial = 0; trial < 200000 && static_cast<int>(out.size()) < count; ++trial) {
    // small window first, widening as trials accumulate
    const std::uint64_t window = std::min<std::uint64_t>(stream.size(), 12 + trial / 16);
    Env e;
    for (const auto& name : spec.names) e[name] = Quad(stream[rng() % window]);
    if (!admissible(e)) continue;
    if (std::find(out.begin(), out.end(), e) != out.end()) continue;
    out.push_back(e);
  }
  if (static_cast<int>(out.size()) < count)
    throw UnsatisfiableConditions("could not find " + std::to_string(count) + " admissible parameter assignments");
  return out;
}

}  // namespace lie2
