#pragma once

// Isomorphism-class fingerprints and claimed-class verification. The
// fingerprint collects exact basis-independent data (series dimensions,
// Killing rank, derivation-algebra dimension, nilradical/radical profiles,
// and the scale-free adjoint spectrum invariant); identification is by
// invariants, never by constructing an isomorphism.

#include <mutex>
#include <sstream>

#include <json.hpp>

#include "lie2/catalog.hpp"

namespace lie2 {

// ---- rational eigenvalue extraction --------------------------------------

// Integer square root floor.
inline BigInt isqrt(const BigInt& n) {
  if (n < 0) throw std::domain_error("isqrt of negative");
  if (n == 0) return 0;
  BigInt x = n, y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

// Prime factorization by trial division; the leftover (if any) is returned
// as a single factor and may itself be composite.
inline std::vector<std::pair<BigInt, int>> factorize(BigInt n, const BigInt& trial_limit = 1000000) {
  std::vector<std::pair<BigInt, int>> fs;
  if (n < 0) n = -n;
  for (BigInt p = 2; p <= trial_limit && p * p <= n; p == 2 ? p = 3 : p += 2) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) { n /= p; ++e; }
    fs.push_back({p, e});
  }
  if (n > 1) fs.push_back({n, 1});
  return fs;
}

// All roots of a monic polynomial with rational coefficients, provided every
// root is rational; nullopt otherwise. cp holds c_1..c_n of
// l^n + c_1 l^(n-1) + ... + c_n.
inline std::optional<std::vector<Rat>> rational_roots(const std::vector<Rat>& cp) {
  std::vector<Rat> coeffs;  // full coefficient list, leading first
  coeffs.push_back(Rat(1));
  for (const Rat& c : cp) coeffs.push_back(c);
  std::vector<Rat> roots;
  auto deflate = [&](const Rat& r) {
    // synthetic division by (x - r)
    std::vector<Rat> next;
    Rat carry(0);
    for (size_t i = 0; i + 1 < coeffs.size(); ++i) {
      carry = coeffs[i] + carry * r;
      next.push_back(carry);
    }
    coeffs = next;
  };
  auto try_root = [&](const Rat& cand) {
    Rat v(0);
    for (const Rat& c : coeffs) v = v * cand + c;
    if (!v.is_zero()) return false;
    roots.push_back(cand);
    deflate(cand);
    return true;
  };
  while (coeffs.size() > 1) {
    // zero roots first
    if (coeffs.back().is_zero()) {
      roots.push_back(Rat(0));
      coeffs.pop_back();
      continue;
    }
    const size_t deg = coeffs.size() - 1;
    // minimal D with c_j D^j integral for all j: then m = D * root is an
    // integer root of the monic integer polynomial q(m) = D^deg p(m/D)
    BigInt D = 1;
    for (size_t j = 1; j <= deg; ++j) {
      BigInt m = 1;
      for (const auto& [p, e] : factorize(denominator(coeffs[j]))) {
        int need = (e + static_cast<int>(j) - 1) / static_cast<int>(j);
        for (int t = 0; t < need; ++t) m *= p;
      }
      D = lcm(D, m);
    }
    BigInt a0 = numerator(coeffs[deg]);
    {
      Rat scaled = coeffs[deg];
      for (size_t t = 0; t < deg; ++t) scaled *= Rat(D);
      a0 = numerator(scaled);  // integral by construction
      if (a0 < 0) a0 = -a0;
    }
    // enumerate divisors of a0 from its factorization
    auto fs = factorize(a0);
    std::vector<BigInt> divisors{BigInt(1)};
    bool overflow = false;
    for (const auto& [p, e] : fs) {
      const size_t base = divisors.size();
      BigInt pk = 1;
      for (int t = 1; t <= e && !overflow; ++t) {
        pk *= p;
        for (size_t i = 0; i < base; ++i) {
          divisors.push_back(divisors[i] * pk);
          if (divisors.size() > 200000) { overflow = true; break; }
        }
      }
    }
    if (overflow) return std::nullopt;
    bool found = false;
    for (const BigInt& d : divisors) {
      if (try_root(Rat(d, D)) || try_root(Rat(-d, D))) { found = true; break; }
    }
    if (!found) return std::nullopt;
  }
  return roots;
}

// ---- fingerprint ----------------------------------------------------------

struct Fingerprint {
  int dim = 0;
  std::vector<int> derived, lcs, ucs;
  int center_dim = 0;
  int killing_rank = 0;
  int der_dim = -1;
  bool abelian = false, nilpotent = false, solvable = false, semisimple = false;
  int nilradical_dim = -1;  // solvable only
  int radical_dim = -1;     // non-solvable only
  int torus_codim = -1;
  std::string spectrum_kind;  // none | codim1 | codim2 | unsupported:<why>
  int spec_k = -1;
  std::vector<std::string> spec_ratios;
  std::vector<std::string> weight_rows;
  std::shared_ptr<Fingerprint> sub;  // nilradical (solvable) or radical (levi) profile

  friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
    auto tie = [](const Fingerprint& f) {
      return std::tie(f.dim, f.derived, f.lcs, f.ucs, f.center_dim, f.killing_rank, f.der_dim,
                      f.abelian, f.nilpotent, f.solvable, f.semisimple, f.nilradical_dim,
                      f.radical_dim, f.torus_codim, f.spectrum_kind, f.spec_k, f.spec_ratios,
                      f.weight_rows);
    };
    if (tie(a) != tie(b)) return false;
    if (!a.sub != !b.sub) return false;
    return !a.sub || *a.sub == *b.sub;
  }

  // name of the first differing field, as a mismatch witness
  std::string diff(const Fingerprint& o) const {
    auto show = [](const std::vector<int>& v) {
      std::string s = "(";
      for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      return s + ")";
    };
    if (dim != o.dim) return "dim " + std::to_string(dim) + " vs " + std::to_string(o.dim);
    if (derived != o.derived) return "derived series dims " + show(derived) + " vs " + show(o.derived);
    if (lcs != o.lcs) return "lower central series dims " + show(lcs) + " vs " + show(o.lcs);
    if (ucs != o.ucs) return "upper central series dims " + show(ucs) + " vs " + show(o.ucs);
    if (center_dim != o.center_dim) return "center dim";
    if (killing_rank != o.killing_rank) return "killing rank";
    if (der_dim != o.der_dim) return "derivation algebra dim " + std::to_string(der_dim) + " vs " + std::to_string(o.der_dim);
    if (nilpotent != o.nilpotent) return "nilpotency flag";
    if (solvable != o.solvable) return "solvability flag";
    if (semisimple != o.semisimple) return "semisimplicity flag";
    if (abelian != o.abelian) return "abelian flag";
    if (nilradical_dim != o.nilradical_dim) return "nilradical dim";
    if (radical_dim != o.radical_dim) return "radical dim";
    if (torus_codim != o.torus_codim) return "torus codim";
    if (spectrum_kind != o.spectrum_kind) return "spectrum kind '" + spectrum_kind + "' vs '" + o.spectrum_kind + "'";
    if (spec_k != o.spec_k) return "spectrum index k";
    if (spec_ratios != o.spec_ratios) return "spectrum ratio list";
    if (weight_rows != o.weight_rows) return "weight configuration";
    if (!!sub != !!o.sub) return "sub-profile presence";
    if (sub && !(*sub == *o.sub)) return "sub-profile: " + sub->diff(*o.sub);
    return "equal";
  }

  nlohmann::json to_json() const {
    nlohmann::json j{{"dim", dim},          {"derived", derived},
                     {"lcs", lcs},          {"ucs", ucs},
                     {"center", center_dim},{"killing_rank", killing_rank},
                     {"der_dim", der_dim},  {"abelian", abelian},
                     {"nilpotent", nilpotent}, {"solvable", solvable},
                     {"semisimple", semisimple}};
    if (nilradical_dim >= 0) j["nilradical_dim"] = nilradical_dim;
    if (radical_dim >= 0) j["radical_dim"] = radical_dim;
    if (torus_codim >= 0) j["torus_codim"] = torus_codim;
    if (!spectrum_kind.empty() && spectrum_kind != "none") {
      j["spectrum"] = spectrum_kind;
      if (spec_k >= 0) j["spec_k"] = spec_k;
      if (!spec_ratios.empty()) j["spec_ratios"] = spec_ratios;
      if (!weight_rows.empty()) j["weights"] = weight_rows;
    }
    if (sub) j["sub"] = sub->to_json();
    return j;
  }
};

namespace detail {

template <class K>
std::vector<int> chain_dims(const std::vector<Subspace<K>>& chain) {
  std::vector<int> d;
  for (const auto& s : chain) d.push_back(s.dim());
  if (d.empty() || d.back() != 0) d.push_back(d.empty() ? 0 : d.back());
  return d;
}

// complement basis vector indices: standard coordinates not pivotal in S
template <class K>
std::vector<int> complement_indices(const Subspace<K>& S) {
  std::vector<char> pivot(S.ambient, 0);
  for (int i = 0; i < S.dim(); ++i)
    for (int j = 0; j < S.ambient; ++j)
      if (!is_zero(S.basis(i, j))) { pivot[j] = 1; break; }
  std::vector<int> out;
  for (int j = 0; j < S.ambient; ++j)
    if (!pivot[j]) out.push_back(j);
  return out;
}

// codim-1 spectrum: char poly of ad(x) for any x outside the nilradical,
// canonicalized by the exactly scale-invariant ratios c_j^k / c_k^j.
template <class K>
void spectrum_codim1(const LieAlgebra<K>& A, const Vec<K>& x, Fingerprint& fp) {
  const std::vector<K> cp = charpoly(A.ad(x));
  int k = -1;
  for (size_t i = 0; i < cp.size(); ++i)
    if (!is_zero(cp[i])) { k = static_cast<int>(i) + 1; break; }
  if (k < 0) {  // nilpotent ad: cannot happen for x outside the nilradical
    fp.spectrum_kind = "unsupported:nilpotent-complement";
    return;
  }
  fp.spectrum_kind = "codim1";
  fp.spec_k = k;
  const K ck = cp[k - 1];
  for (size_t j = static_cast<size_t>(k) + 1; j <= cp.size(); ++j) {
    // ratio c_j^k / c_k^j, exactly invariant under x -> s*x and x -> x + n
    K num(1), den(1);
    for (int t = 0; t < k; ++t) num *= cp[j - 1];
    for (size_t t = 0; t < j; ++t) den *= ck;
    fp.spec_ratios.push_back(scalar_str(num / den));
  }
}

struct WeightRow {
  std::vector<Rat> coords;  // in the chosen weight basis (2 entries; 1 if rank 1)
  int mult, in_der, in_cen;
  std::string str() const {
    std::string s;
    for (const Rat& c : coords) s += scalar_str(c) + ",";
    return s + "|" + std::to_string(mult) + "," + std::to_string(in_der) + "," + std::to_string(in_cen);
  }
  bool operator<(const WeightRow& o) const { return str() < o.str(); }
};

// codim-2 spectrum: the labeled weight configuration of a commuting
// complement pair on the nilradical, canonicalized over all rational weight
// bases (finite matching search) and weight permutation.
template <class K>
void spectrum_codim2(const LieAlgebra<K>& A, const Subspace<K>& nr, Fingerprint& fp) {
  if constexpr (!std::is_same_v<K, Rat>) {
    fp.spectrum_kind = "unsupported:quad-codim2";
    return;
  } else {
    // Weights are taken against a Cartan subalgebra H (nilpotent,
    // self-normalizing): its generalized weight decomposition of the
    // nilradical exists and the weight functionals descend to g/NR, so the
    // configuration is independent of the choice of H.
    Subspace<K> H;
    try {
      H = solvable_cartan(A);
    } catch (const InvariantViolation& e) {
      fp.spectrum_kind = std::string("unsupported:") + e.what();
      return;
    }
    // two Cartan elements independent modulo the nilradical
    std::optional<Vec<K>> t1o, t2o;
    for (int i = 0; i < H.dim(); ++i) {
      const Vec<K> h = H.row(i);
      if (!t1o) {
        if (!nr.contains(h)) t1o = h;
        continue;
      }
      Vec<K> probe = h;  // independent mod NR iff not in NR + <t1>
      Subspace<K> nt = nr.sum(Subspace<K>::span(A.n, {*t1o}));
      if (!nt.contains(probe)) { t2o = h; break; }
    }
    if (!t1o || !t2o) {
      fp.spectrum_kind = "unsupported:cartan-inside-nilradical";
      return;
    }
    const Vec<K> t1 = *t1o, t2 = *t2o;
    const int d = nr.dim();
    auto restrict_to_nr = [&](const Vec<K>& t) {
      Mat<K> M(d, d);
      for (int c = 0; c < d; ++c) {
        auto co = nr.coords(A.bracket(t, nr.row(c)));
        if (!co) throw InvariantViolation("nilradical not invariant under complement");
        for (int r = 0; r < d; ++r) M(r, c) = (*co)[r];
      }
      return M;
    };
    const Mat<K> M1 = restrict_to_nr(t1), M2 = restrict_to_nr(t2);
    auto roots1 = rational_roots(charpoly(M1));
    auto roots2 = rational_roots(charpoly(M2));
    if (!roots1 || !roots2) {
      fp.spectrum_kind = "unsupported:irrational-weights";
      return;
    }
    auto gen_eigenspace = [&](const Mat<K>& M, const Rat& lam) {
      Mat<K> shifted = M;
      for (int i = 0; i < d; ++i) shifted(i, i) -= lam;
      Mat<K> power = shifted;
      for (int i = 1; i < d; ++i) power = power * shifted;
      Mat<K> ker = kernel(power);
      std::vector<Vec<K>> vs;
      for (int r = 0; r < ker.rows; ++r) {
        Vec<K> v(d);
        for (int c = 0; c < d; ++c) v[c] = ker(r, c);
        vs.push_back(v);
      }
      return Subspace<K>::span(d, vs);
    };
    std::vector<Rat> l1(roots1->begin(), roots1->end()), l2(roots2->begin(), roots2->end());
    std::sort(l1.begin(), l1.end());
    l1.erase(std::unique(l1.begin(), l1.end()), l1.end());
    std::sort(l2.begin(), l2.end());
    l2.erase(std::unique(l2.begin(), l2.end()), l2.end());
    // structures of the nilradical for labeling
    const LieAlgebra<K> N = induced_algebra(A, nr);
    const Subspace<K> nder = bracket_space(N, whole_space(N), whole_space(N));
    const Subspace<K> ncen = center(N);
    struct RawWeight {
      Rat a, b;
      int mult, in_der, in_cen;
    };
    std::vector<RawWeight> weights;
    int total = 0;
    for (const Rat& a : l1) {
      const Subspace<K> V1 = gen_eigenspace(M1, a);
      for (const Rat& b : l2) {
        const Subspace<K> V = V1.intersect(gen_eigenspace(M2, b));
        if (V.dim() == 0) continue;
        RawWeight w{a, b, V.dim(), V.intersect(nder).dim(), V.intersect(ncen).dim()};
        weights.push_back(w);
        total += V.dim();
      }
    }
    if (total != d) {
      fp.spectrum_kind = "unsupported:nonsplit-weights";
      return;
    }
    fp.spectrum_kind = "codim2";
    // canonicalize: try every ordered pair of independent weights as basis
    std::vector<std::string> best;
    auto consider = [&](const std::vector<WeightRow>& rows) {
      std::vector<WeightRow> sorted = rows;
      std::sort(sorted.begin(), sorted.end());
      std::vector<std::string> strs;
      for (const auto& r : sorted) strs.push_back(r.str());
      if (best.empty() || strs < best) best = strs;
    };
    bool rank2 = false;
    for (size_t p = 0; p < weights.size(); ++p)
      for (size_t q = 0; q < weights.size(); ++q) {
        if (p == q) continue;
        const Rat det = weights[p].a * weights[q].b - weights[p].b * weights[q].a;
        if (is_zero(det)) continue;
        rank2 = true;
        std::vector<WeightRow> rows;
        for (const auto& w : weights) {
          // solve w = x * w_p + y * w_q
          const Rat x = (w.a * weights[q].b - w.b * weights[q].a) / det;
          const Rat y = (weights[p].a * w.b - weights[p].b * w.a) / det;
          rows.push_back({{x, y}, w.mult, w.in_der, w.in_cen});
        }
        consider(rows);
      }
    if (!rank2) {
      // all weights on one line: coordinates relative to each nonzero weight
      for (size_t p = 0; p < weights.size(); ++p) {
        if (is_zero(weights[p].a) && is_zero(weights[p].b)) continue;
        std::vector<WeightRow> rows;
        const bool use_a = !is_zero(weights[p].a);
        for (const auto& w : weights) {
          const Rat c = use_a ? w.a / weights[p].a : w.b / weights[p].b;
          rows.push_back({{c}, w.mult, w.in_der, w.in_cen});
        }
        consider(rows);
      }
    }
    fp.weight_rows = best;
  }
}

}  // namespace detail

template <class K>
Fingerprint fingerprint(const LieAlgebra<K>& A) {
  Fingerprint fp;
  fp.dim = A.n;
  fp.derived = detail::chain_dims(derived_series(A));
  fp.lcs = detail::chain_dims(lower_central_series(A));
  {
    auto ucs = upper_central_series(A);
    for (const auto& s : ucs) fp.ucs.push_back(s.dim());
  }
  fp.center_dim = fp.ucs.empty() ? 0 : fp.ucs.front();
  fp.killing_rank = rank(killing_form(A));
  fp.der_dim = derivation_dim(A);
  fp.abelian = is_abelian(A);
  fp.nilpotent = fp.lcs.back() == 0;
  fp.solvable = fp.derived.back() == 0;
  fp.semisimple = A.n > 0 && fp.killing_rank == A.n;
  fp.spectrum_kind = "none";
  if (fp.solvable) {
    const Subspace<K> nr = nilradical(A);
    fp.nilradical_dim = nr.dim();
    fp.torus_codim = A.n - nr.dim();
    if (nr.dim() < A.n) {
      fp.sub = std::make_shared<Fingerprint>(fingerprint(induced_algebra(A, nr)));
      if (fp.torus_codim == 1) {
        const auto comp = detail::complement_indices(nr);
        detail::spectrum_codim1(A, A.basis_vec(comp[0]), fp);
      } else if (fp.torus_codim == 2) {
        detail::spectrum_codim2(A, nr, fp);
      } else {
        fp.spectrum_kind = "unsupported:codim>2";
      }
    }
  } else if (!fp.semisimple) {
    const Subspace<K> rad = radical(A);
    fp.radical_dim = rad.dim();
    if (rad.dim() > 0) fp.sub = std::make_shared<Fingerprint>(fingerprint(induced_algebra(A, rad)));
  }
  return fp;
}

}  // namespace lie2

namespace lie2 {

// ---- sl2 triples and module decomposition --------------------------------

template <class K>
struct Sl2Triple {
  Vec<K> h, e, f;
};

// Locate an sl2 triple inside the span of the given generators: for each
// ordered candidate pair (e, f) try h = [e,f] with a scale correction on f.
// Covers every generator ordering the tables use; returns nullopt when no
// pair normalizes.
template <class K>
std::optional<Sl2Triple<K>> find_sl2_triple(const LieAlgebra<K>& A, const std::vector<Vec<K>>& cands) {
  auto scaled = [](const Vec<K>& v, const K& s) {
    Vec<K> r = v;
    for (auto& x : r) x *= s;
    return r;
  };
  for (const Vec<K>& e : cands) {
    if (vec_is_zero(e) || !is_nilpotent_mat(A.ad(e))) continue;
    for (const Vec<K>& f0 : cands) {
      if (&f0 == &e) continue;
      const Vec<K> h0 = A.bracket(e, f0);
      if (vec_is_zero(h0)) continue;
      // want [h0, e] = c e with c != 0, then rescale f by 2/c
      const Vec<K> he = A.bracket(h0, e);
      K c(0);
      bool prop = true;
      for (int i = 0; i < A.n; ++i) {
        if (is_zero(e[i])) {
          if (!is_zero(he[i])) { prop = false; break; }
        } else {
          K ratio = he[i] / e[i];
          if (is_zero(c)) c = ratio;
          else if (ratio != c) { prop = false; break; }
        }
      }
      if (!prop || is_zero(c)) continue;
      const K s = K(2) / c;
      const Vec<K> f = scaled(f0, s);
      const Vec<K> h = scaled(h0, s);
      if (A.bracket(h, e) == scaled(e, K(2)) && A.bracket(h, f) == scaled(f, K(-2)) &&
          A.bracket(e, f) == h)
        return Sl2Triple<K>{h, e, f};
    }
  }
  return std::nullopt;
}

struct Sl2Decomposition {
  std::vector<int> highest;  // multiset of highest weights n (V(n)), descending
  friend bool operator==(const Sl2Decomposition&, const Sl2Decomposition&) = default;
  std::string str() const {
    std::string s;
    for (int n : highest) s += (s.empty() ? "" : "+") + std::string("V(") + std::to_string(n) + ")";
    return s.empty() ? "0" : s;
  }
};

struct Sl2Error : std::domain_error {
  using std::domain_error::domain_error;
};

// Highest weights of the triple's action on an invariant subspace, via
// eigenspaces of ad(h) intersected with ker(ad e).
template <class K>
Sl2Decomposition decompose_sl2(const LieAlgebra<K>& A, const Sl2Triple<K>& t, const Subspace<K>& space) {
  auto scaled = [](const Vec<K>& v, const K& s) {
    Vec<K> r = v;
    for (auto& x : r) x *= s;
    return r;
  };
  if (A.bracket(t.h, t.e) != scaled(t.e, K(2))) throw Sl2Error("sl2 relation [h,e] = 2e fails");
  if (A.bracket(t.h, t.f) != scaled(t.f, K(-2))) throw Sl2Error("sl2 relation [h,f] = -2f fails");
  if (A.bracket(t.e, t.f) != t.h) throw Sl2Error("sl2 relation [e,f] = h fails");
  const int d = space.dim();
  auto op_on = [&](const Vec<K>& x) {
    Mat<K> M(d, d);
    for (int c = 0; c < d; ++c) {
      auto co = space.coords(A.bracket(x, space.row(c)));
      if (!co) throw Sl2Error("space is not invariant under the sl2 triple");
      for (int r = 0; r < d; ++r) M(r, c) = (*co)[r];
    }
    return M;
  };
  const Mat<K> Mh = op_on(t.h), Me = op_on(t.e);
  // integer eigenvalues of ad h; highest-weight vectors are killed by ad e
  Sl2Decomposition out;
  int total = 0, eigensum = 0;
  for (int n = -d; n <= d; ++n) {
    Mat<K> shift = Mh;
    for (int i = 0; i < d; ++i) shift(i, i) -= K(n);
    const int en = d - rank(shift);
    eigensum += en;
    if (n < 0 || en == 0) continue;
    Mat<K> stacked(2 * d, d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        stacked(r, c) = shift(r, c);
        stacked(d + r, c) = Me(r, c);
      }
    const int mult = d - rank(stacked);
    for (int m = 0; m < mult; ++m) out.highest.push_back(n);
    total += mult * (n + 1);
  }
  if (eigensum != d || total != d)
    throw Sl2Error("space is not an integral sl2 module (weight sum " + std::to_string(total) + " of " + std::to_string(d) + ")");
  std::sort(out.highest.rbegin(), out.highest.rend());
  return out;
}

}  // namespace lie2

namespace lie2 {

// ---- claimed-class verification -------------------------------------------

struct Verdict {
  enum Kind { Match, Mismatch, Inconclusive } kind = Mismatch;
  std::string matched;  // description of the matching candidate
  std::string detail;   // witness field / reason
};

class FingerprintCache {
 public:
  const Fingerprint& of_claim(const Catalog& cat, const ConcreteClass& c) {
    std::scoped_lock lk(mu_);
    auto it = cache_.find(c.describe);
    if (it != cache_.end()) return it->second;
    Fingerprint fp = c.needs_quad ? fingerprint(build_claim<Quad>(cat, c)) : fingerprint(build_claim<Rat>(cat, c));
    return cache_.emplace(c.describe, std::move(fp)).first->second;
  }

  template <class K>
  static LieAlgebra<K> build_claim(const Catalog& cat, const ConcreteClass& c) {
    LieAlgebra<K> sum(0);
    for (const auto& part : c.parts) {
      LieAlgebra<K> piece = cat.instantiate<K>(part.id, part.env);
      sum = sum.n == 0 ? piece : direct_sum(sum, piece);
    }
    return sum;
  }

 private:
  std::mutex mu_;
  std::map<std::string, Fingerprint> cache_;
};

// Known non-separating fingerprint pairs (dim, kind) -> reason. Kept empty:
// any inconclusive row must carry a documented reason from this table.
inline const std::map<std::pair<int, std::string>, std::string>& ambiguity_list() {
  static const std::map<std::pair<int, std::string>, std::string> list;
  return list;
}

// Eigenvalues of the adjoint action on the nilradical, used to derive
// wildcard parameters; nullopt when irrational or not codim-1 toral.
template <class K>
std::optional<std::vector<Rat>> nilradical_eigenvalues(const LieAlgebra<K>& A) {
  if constexpr (!std::is_same_v<K, Rat>) return std::nullopt;
  else {
    if (!is_solvable(A) || is_nilpotent(A)) return std::nullopt;
    const Subspace<K> nr = nilradical(A);
    const auto comp = detail::complement_indices(nr);
    if (comp.size() != 1) return std::nullopt;
    const int d = nr.dim();
    Mat<K> M(d, d);
    for (int c = 0; c < d; ++c) {
      auto co = nr.coords(A.bracket(A.basis_vec(comp[0]), nr.row(c)));
      if (!co) return std::nullopt;
      for (int r = 0; r < d; ++r) M(r, c) = (*co)[r];
    }
    return rational_roots(charpoly(M));
  }
}

// Fill wildcard parameters of a candidate from the subalgebra's own
// eigenvalue ratios; bounded enumeration, deduplicated.
template <class K>
std::vector<ConcreteClass> expand_wildcards(const Catalog& cat, const ConcreteClass& cand,
                                            const LieAlgebra<K>& A) {
  std::vector<std::pair<size_t, std::string>> wild;  // (part index, param name)
  for (size_t p = 0; p < cand.parts.size(); ++p)
    for (const auto& cp : cat.entry(cand.parts[p].id).params)
      if (!cand.parts[p].env.count(cp.name)) wild.push_back({p, cp.name});
  if (wild.empty()) return {cand};
  auto eig = nilradical_eigenvalues(A);
  if (!eig) return {};
  std::vector<Rat> ratios{Rat(0)};
  for (const Rat& num : *eig)
    for (const Rat& den : *eig) {
      if (is_zero(den)) continue;
      const Rat r = num / den;
      if (std::find(ratios.begin(), ratios.end(), r) == ratios.end()) ratios.push_back(r);
    }
  std::vector<ConcreteClass> out{cand};
  for (const auto& [pi, pname] : wild) {
    std::vector<ConcreteClass> next;
    for (const ConcreteClass& c : out)
      for (const Rat& r : ratios) {
        ConcreteClass c2 = c;
        c2.parts[pi].env[pname] = Quad(r);
        next.push_back(std::move(c2));
      }
    out = std::move(next);
  }
  // re-apply hard constraints and refresh descriptions
  std::vector<ConcreteClass> ok;
  for (ConcreteClass& c : out) {
    bool good = true;
    for (const auto& p : c.parts)
      for (const auto& cp : cat.entry(p.id).params) {
        if (!cp.require || !p.env.count(cp.name)) continue;
        try {
          if (!eval_cond(cp.require, p.env)) good = false;
        } catch (const std::domain_error&) {
          good = false;
        }
      }
    if (!good) continue;
    std::string d;
    for (const auto& p : c.parts) d += (d.empty() ? "" : " + ") + Catalog::display_name(p.id, p.env);
    c.describe = d;
    bool dup = false;
    for (const auto& prev : ok)
      if (prev.describe == c.describe) { dup = true; break; }
    if (!dup) ok.push_back(std::move(c));
  }
  return ok;
}

// Verdict for "A is isomorphic to the claimed class at these row parameters".
template <class K>
Verdict match_class(const LieAlgebra<K>& A, const ClassSpec& spec, const Env& row_env,
                    const Catalog& cat, FingerprintCache& cache) {
  // applicable alternatives: guarded specs pick the first true guard (or the
  // final unguarded else); a plain spec is its single unguarded alternative
  std::vector<const ClassAlt*> applicable;
  if (spec.mode == ClassSpec::Guarded) {
    for (const auto& alt : spec.alts) {
      if (!alt.guard) { applicable.push_back(&alt); break; }
      bool g = false;
      try {
        g = eval_cond(alt.guard, row_env);
      } catch (const std::domain_error&) {
        g = false;
      }
      if (g) { applicable.push_back(&alt); break; }
    }
    if (applicable.empty()) return {Verdict::Mismatch, "", "no class branch applies at this sample"};
  } else {
    for (const auto& alt : spec.alts) applicable.push_back(&alt);
  }

  const Fingerprint fpA = fingerprint(A);
  Verdict v;
  v.kind = Verdict::Mismatch;
  std::string first_diff;
  for (const ClassAlt* alt : applicable) {
    std::vector<ConcreteClass> cands = resolve_candidates(cat, alt->parts, row_env);
    std::vector<ConcreteClass> expanded;
    for (const auto& c : cands)
      for (auto& e : expand_wildcards(cat, c, A)) expanded.push_back(std::move(e));
    for (const ConcreteClass& cand : expanded) {
      const Fingerprint& fpC = cache.of_claim(cat, cand);
      if (fpA == fpC) {
        auto amb = ambiguity_list().find({A.n, cand.parts.size() == 1 ? cat.entry(cand.parts[0].id).kind : "sum"});
        if (amb != ambiguity_list().end()) return {Verdict::Inconclusive, cand.describe, amb->second};
        return {Verdict::Match, cand.describe, ""};
      }
      if (first_diff.empty()) first_diff = cand.describe + ": " + fpA.diff(fpC);
    }
  }
  v.detail = first_diff.empty() ? "no admissible candidate classes at this sample" : first_diff;
  return v;
}

// ---- Levi structure verification -------------------------------------------

struct LeviReport {
  bool ok = false;
  std::string detail;
  Sl2Decomposition rho;  // highest weights of the Levi action on the radical
};

// Radical class parts and expected rho blocks implied by a claimed Levi
// class (one A1 factor plus solvable/abelian parts, possibly via A1:... ids).
struct LeviClaim {
  std::vector<ClassPart> radical_parts;
  std::vector<int> rho;  // block dimensions j
  int levi_count = 0;
};

inline LeviClaim levi_claim_profile(const Catalog& cat, const std::vector<ClassPart>& parts) {
  LeviClaim lc;
  for (const ClassPart& p : parts) {
    for (int m = 0; m < p.mult; ++m) {
      if (p.base == "A1" && p.params.empty()) {
        ++lc.levi_count;
        continue;
      }
      const CatalogEntry& e = cat.entry(p.base);
      if (e.kind == "levi") {
        ++lc.levi_count;
        ClassSpec rad = parse_class(e.radical_class);
        for (const auto& rp : rad.alts[0].parts) lc.radical_parts.push_back(rp);
        for (int j : e.rho) lc.rho.push_back(j);
      } else {
        ClassPart cp = p;
        cp.mult = 1;
        lc.radical_parts.push_back(cp);
        lc.rho.insert(lc.rho.end(), e.dim, 1);  // trivial blocks
      }
    }
  }
  std::sort(lc.rho.rbegin(), lc.rho.rend());
  return lc;
}

// Checks that levi_gens + radical_gens span a closed direct sum, the radical
// generators span the radical, the levi span is an sl2, the radical matches
// the claimed class, and the sl2 action decomposes as the claimed rho.
template <class K>
LeviReport verify_levi(const LieAlgebra<K>& A, const std::vector<Vec<K>>& levi_gens,
                       const std::vector<Vec<K>>& radical_gens, const ClassSpec& claimed,
                       const Env& row_env, const Catalog& cat, FingerprintCache& cache) {
  LeviReport rep;
  const Subspace<K> Sl = Subspace<K>::span(A.n, levi_gens);
  const Subspace<K> Sr = Subspace<K>::span(A.n, radical_gens);
  const Subspace<K> S = Sl.sum(Sr);
  if (S.dim() != Sl.dim() + Sr.dim()) {
    rep.detail = "levi and radical spans are not a direct sum";
    return rep;
  }
  LieAlgebra<K> B;
  try {
    B = induced_algebra(A, S);
  } catch (const NotSubalgebra& e) {
    rep.detail = e.what();
    return rep;
  }
  // radical_gens must span radical(B)
  const Subspace<K> radB = radical(B);
  std::vector<Vec<K>> rad_in_B;
  for (const auto& g : radical_gens) {
    auto co = S.coords(g);
    if (!co) { rep.detail = "radical generator escapes the span"; return rep; }
    rad_in_B.push_back(*co);
  }
  if (!(Subspace<K>::span(B.n, rad_in_B) == radB)) {
    rep.detail = "claimed radical span is not the radical";
    return rep;
  }
  // the levi span must be a semisimple subalgebra carrying an sl2 triple
  std::vector<Vec<K>> levi_in_B;
  for (const auto& g : levi_gens) {
    auto co = S.coords(g);
    if (!co) { rep.detail = "levi generator escapes the span"; return rep; }
    levi_in_B.push_back(*co);
  }
  Subspace<K> SlB = Subspace<K>::span(B.n, levi_in_B);
  try {
    LieAlgebra<K> L = induced_algebra(B, SlB);
    if (!is_semisimple(L)) { rep.detail = "levi span is not semisimple"; return rep; }
  } catch (const NotSubalgebra&) {
    rep.detail = "levi span is not a subalgebra";
    return rep;
  }
  auto triple = find_sl2_triple(B, levi_in_B);
  if (!triple) { rep.detail = "levi span does not normalize to an sl2 triple"; return rep; }
  // claim profile: radical class fingerprint plus rho decomposition
  const LeviClaim lc = levi_claim_profile(cat, claimed.alts.at(0).parts);
  if (lc.levi_count != 1) { rep.detail = "claimed class does not have exactly one A1 factor"; return rep; }
  const LieAlgebra<K> R = induced_algebra(B, radB, "radical");
  const Fingerprint fpR = fingerprint(R);
  std::vector<ConcreteClass> cands = resolve_candidates(cat, lc.radical_parts, row_env);
  bool matched = false;
  std::string witness;
  for (const auto& cand : cands) {
    const Fingerprint& fpC = cache.of_claim(cat, cand);
    if (fpR == fpC) { matched = true; break; }
    if (witness.empty()) witness = fpR.diff(fpC);
  }
  if (!matched) {
    rep.detail = "radical class mismatch: " + (witness.empty() ? "no candidates" : witness);
    return rep;
  }
  try {
    rep.rho = decompose_sl2(B, *triple, radB);
  } catch (const Sl2Error& e) {
    rep.detail = e.what();
    return rep;
  }
  std::vector<int> want;
  for (int j : lc.rho) want.push_back(j - 1);
  std::sort(want.rbegin(), want.rend());
  if (rep.rho.highest != want) {
    rep.detail = "levi action decomposes as " + rep.rho.str() + ", claimed rho implies " +
                 Sl2Decomposition{want}.str();
    return rep;
  }
  rep.ok = true;
  return rep;
}

}  // namespace lie2
