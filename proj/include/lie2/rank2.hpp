#pragma once

// The four rank-2 ambient algebras with named Chevalley generators.
// C2, A2 and A1xA1 derive their structure constants from the defining
// matrix realizations (sp4 / sl3 / sl2+sl2); the matrix commutator is the
// single source of truth there and verify_realization is the regression
// gate. G2 is built from its commutation-relation table (all N constants)
// and answers to Jacobi.

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "lie2/analysis.hpp"

namespace lie2 {

enum class AlgName { C2, A2, A1xA1, G2 };

inline std::string alg_name_str(AlgName n) {
  switch (n) {
    case AlgName::C2: return "c2";
    case AlgName::A2: return "a2";
    case AlgName::A1xA1: return "a1a1";
    case AlgName::G2: return "g2";
  }
  return "?";
}

inline std::optional<AlgName> parse_alg_name(const std::string& s) {
  if (s == "c2" || s == "C2") return AlgName::C2;
  if (s == "a2" || s == "A2") return AlgName::A2;
  if (s == "a1a1" || s == "A1xA1" || s == "a1xa1") return AlgName::A1xA1;
  if (s == "g2" || s == "G2") return AlgName::G2;
  return std::nullopt;
}

using Root = std::pair<int, int>;  // m*alpha + n*beta

struct RootSystem {
  AlgName name;
  std::vector<Root> positive;
  Mat<Rat> gram;     // ((a,a),(a,b);(b,a),(b,b))
  Mat<Rat> cartan;   // cartan(s, t): value of simple root t's functional... see pairing()

  // Value of the root functional (m a + n b) on the coroot H_s (s=0: Ha, 1: Hb).
  Rat pairing(const Root& r, int s) const {
    return Rat(r.first) * cartan(0, s) + Rat(r.second) * cartan(1, s);
  }
  // Same, on a general Cartan element x*Ha + y*Hb.
  Rat weight(const Root& r, const Rat& x, const Rat& y) const {
    return x * pairing(r, 0) + y * pairing(r, 1);
  }
  bool is_root(const Root& r) const {
    for (const Root& p : positive)
      if (p == r || Root{-p.first, -p.second} == r) return true;
    return false;
  }
  Rat norm(const Rat& m, const Rat& n) const {  // (m a + n b, m a + n b)
    return m * m * gram(0, 0) + 2 * m * n * gram(0, 1) + n * n * gram(1, 1);
  }
};

struct ChevalleyAlgebra {
  LieAlgebra<Rat> alg;
  RootSystem roots;
  std::vector<std::string> labels;
  std::map<std::string, int> index;

  int npos() const { return static_cast<int>(roots.positive.size()); }
  int xi(int r) const { return 2 + r; }
  int yi(int r) const { return 2 + npos() + r; }

  int root_index(const Root& r) const {
    for (int i = 0; i < npos(); ++i)
      if (roots.positive[i] == r) return i;
    return -1;
  }

  Vec<Rat> gen(const std::string& label) const {
    auto it = index.find(label);
    if (it == index.end()) throw std::domain_error("unknown generator '" + label + "' in " + alg_name_str(roots.name));
    return alg.basis_vec(it->second);
  }

  // Cartan element x*Ha + y*Hb.
  Vec<Rat> cartan_vec(const Rat& x, const Rat& y) const {
    Vec<Rat> v(alg.n, Rat(0));
    v[0] = x;
    v[1] = y;
    return v;
  }

  // Coordinates in the Cartan if the vector lies there.
  std::optional<std::pair<Rat, Rat>> cartan_coords(const Vec<Rat>& v) const {
    for (int i = 2; i < alg.n; ++i)
      if (!is_zero(v[i])) return std::nullopt;
    return std::make_pair(v[0], v[1]);
  }
};

namespace detail {

inline Mat<Rat> ematrix(int n, std::initializer_list<std::tuple<int, int, int>> entries) {
  Mat<Rat> m(n, n);
  for (auto [i, j, v] : entries) m(i, j) = Rat(v);
  return m;
}

inline RootSystem make_roots(AlgName name) {
  RootSystem rs;
  rs.name = name;
  rs.gram = Mat<Rat>(2, 2);
  rs.cartan = Mat<Rat>(2, 2);
  auto set2 = [](Mat<Rat>& m, Rat a, Rat b, Rat c, Rat d) {
    m(0, 0) = a; m(0, 1) = b; m(1, 0) = c; m(1, 1) = d;
  };
  switch (name) {
    case AlgName::C2:
      rs.positive = {{1, 0}, {0, 1}, {1, 1}, {1, 2}};
      set2(rs.gram, 4, -2, -2, 2);
      // alpha(Ha), alpha(Hb); beta(Ha), beta(Hb)
      set2(rs.cartan, 2, -2, -1, 2);
      break;
    case AlgName::A2:
      rs.positive = {{1, 0}, {0, 1}, {1, 1}};
      set2(rs.gram, 2, -1, -1, 2);
      set2(rs.cartan, 2, -1, -1, 2);
      break;
    case AlgName::A1xA1:
      rs.positive = {{1, 0}, {0, 1}};
      set2(rs.gram, 2, 0, 0, 2);
      set2(rs.cartan, 2, 0, 0, 2);
      break;
    case AlgName::G2:
      rs.positive = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
      set2(rs.gram, 1, Rat(-3, 2), Rat(-3, 2), 3);
      set2(rs.cartan, 2, -1, -3, 2);
      break;
  }
  return rs;
}

struct MatrixGens {
  int size = 0;
  std::vector<Mat<Rat>> mats;  // in basis order Ha, Hb, X..., Y...
};

inline MatrixGens matrix_gens(AlgName name) {
  MatrixGens g;
  auto E = [&](int i, int j) { return ematrix(g.size, {{i - 1, j - 1, 1}}); };
  switch (name) {
    case AlgName::C2: {
      g.size = 4;
      Mat<Rat> Xa = E(2, 4);
      Mat<Rat> Xb = E(1, 2) - E(4, 3);
      Mat<Rat> Xab = E(1, 4) + E(2, 3);
      Mat<Rat> Xa2b = E(1, 3);
      Mat<Rat> Ya = Xa.transposed(), Yb = Xb.transposed(), Yab = Xab.transposed(), Ya2b = Xa2b.transposed();
      Mat<Rat> Ha = Xa * Ya - Ya * Xa;
      Mat<Rat> Hb = Xb * Yb - Yb * Xb;
      g.mats = {Ha, Hb, Xa, Xb, Xab, Xa2b, Ya, Yb, Yab, Ya2b};
      break;
    }
    case AlgName::A2: {
      g.size = 3;
      Mat<Rat> Ha = ematrix(3, {{0, 0, 1}, {1, 1, -1}});
      Mat<Rat> Hb = ematrix(3, {{1, 1, 1}, {2, 2, -1}});
      Mat<Rat> Xa = E(1, 2), Ya = E(2, 1), Xb = E(2, 3), Yb = E(3, 2);
      Mat<Rat> Xab = ematrix(3, {{0, 2, -1}});
      Mat<Rat> Yab = ematrix(3, {{2, 0, -1}});
      g.mats = {Ha, Hb, Xa, Xb, Xab, Ya, Yb, Yab};
      break;
    }
    case AlgName::A1xA1: {
      g.size = 4;
      Mat<Rat> Ha = ematrix(4, {{0, 0, 1}, {1, 1, -1}});
      Mat<Rat> Hb = ematrix(4, {{2, 2, 1}, {3, 3, -1}});
      g.mats = {Ha, Hb, E(1, 2), E(3, 4), E(2, 1), E(4, 3)};
      break;
    }
    case AlgName::G2:
      throw std::domain_error("no matrix realization of g2 in scope");
  }
  return g;
}

// All G2 structure constants N_{mu,nu}; seeded from the printed table and
// closed under N_{mu,nu} = -N_{nu,mu} = -N_{-mu,-nu}.
inline const std::map<std::pair<Root, Root>, Rat>& g2_ntable() {
  static const std::map<std::pair<Root, Root>, Rat> table = [] {
    std::map<std::pair<Root, Root>, Rat> n;
    auto R = [](int m, int k) { return Root{m, k}; };
    auto neg = [](Root r) { return Root{-r.first, -r.second}; };
    const Root a = R(1, 0), b = R(0, 1), ab = R(1, 1), a2b = R(2, 1), a3b = R(3, 1), a3b2 = R(3, 2);
    std::vector<std::tuple<Root, Root, int>> seed = {
        {b, a, 1},          {b, a3b, 1},        {a3b, neg(a3b2), 1},
        {a2b, neg(a3b), 1}, {a2b, neg(a3b2), 1}, {neg(a3b2), ab, 1},
        {neg(a3b2), b, 1},  {neg(a3b), a, 1},   {neg(ab), b, 1},
        {ab, a, 2},         {a, neg(a2b), 2},   {neg(a2b), ab, 2},
        {a, a2b, 3},        {a, neg(ab), 3},    {ab, a2b, 3}};
    for (auto& [u, v, c] : seed) {
      n[{u, v}] = Rat(c);
      n[{v, u}] = Rat(-c);
      n[{neg(u), neg(v)}] = Rat(-c);
      n[{neg(v), neg(u)}] = Rat(c);
    }
    return n;
  }();
  return table;
}

inline ChevalleyAlgebra build_from_matrices(AlgName name) {
  const MatrixGens g = matrix_gens(name);
  const int dim = static_cast<int>(g.mats.size());
  const int nn = g.size * g.size;
  // stacked matrix basis for coordinate extraction
  Mat<Rat> basis(nn, dim);
  for (int k = 0; k < dim; ++k)
    for (int e = 0; e < nn; ++e) basis(e, k) = g.mats[k].a[e];
  ChevalleyAlgebra ca;
  ca.roots = make_roots(name);
  ca.alg = LieAlgebra<Rat>(dim, alg_name_str(name));
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      Mat<Rat> comm = g.mats[i] * g.mats[j] - g.mats[j] * g.mats[i];
      std::vector<Rat> rhs(comm.a.begin(), comm.a.end());
      auto coords = solve(basis, rhs);
      if (!coords) throw std::logic_error("matrix commutator escapes the spanned algebra");
      for (int k = 0; k < dim; ++k) ca.alg.set(i, j, k, (*coords)[k]);
    }
  return ca;
}

inline ChevalleyAlgebra build_g2() {
  ChevalleyAlgebra ca;
  ca.roots = make_roots(AlgName::G2);
  const int p = 6, dim = 14;
  ca.alg = LieAlgebra<Rat>(dim, "g2");
  auto& A = ca.alg;
  const auto& pos = ca.roots.positive;
  auto coroot_coeffs = [&](const Root& r) {
    // H_mu = (m Ha + 3n Hb)/(mu,mu)
    const Rat nn = ca.roots.norm(r.first, r.second);
    return std::make_pair(Rat(r.first) / nn, Rat(3 * r.second) / nn);
  };
  // [H, X_mu] and [H, Y_mu]
  for (int s = 0; s < 2; ++s)
    for (int r = 0; r < p; ++r) {
      const Rat w = ca.roots.pairing(pos[r], s);
      A.set(s, 2 + r, 2 + r, w);
      A.set(s, 2 + p + r, 2 + p + r, -w);
    }
  // [X_mu, Y_mu] = H_mu
  for (int r = 0; r < p; ++r) {
    auto [xa, xb] = coroot_coeffs(pos[r]);
    A.set(2 + r, 2 + p + r, 0, xa);
    A.set(2 + r, 2 + p + r, 1, xb);
  }
  // [X_mu, X_nu] = N_{mu,nu} X_{mu+nu} over all root pairs, X_{-mu} = Y_mu
  auto vec_index = [&](const Root& r) -> int {
    for (int i = 0; i < p; ++i) {
      if (pos[i] == r) return 2 + i;
      if (Root{-pos[i].first, -pos[i].second} == r) return 2 + p + i;
    }
    return -1;
  };
  std::vector<Root> all;
  for (const Root& r : pos) {
    all.push_back(r);
    all.push_back({-r.first, -r.second});
  }
  const auto& N = g2_ntable();
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j) {
      const Root u = all[i], v = all[j];
      if (u.first == -v.first && u.second == -v.second) continue;  // [X,Y] handled
      const Root sum{u.first + v.first, u.second + v.second};
      const int target = vec_index(sum);
      if (target < 0) continue;  // mu+nu not a root
      auto it = N.find({u, v});
      if (it == N.end()) throw std::logic_error("missing G2 structure constant");
      A.set(vec_index(u), vec_index(v), target, it->second);
    }
  return ca;
}

inline void attach_labels(ChevalleyAlgebra& ca) {
  ca.labels = {"Ha", "Hb"};
  for (const Root& r : ca.roots.positive)
    ca.labels.push_back("X(" + std::to_string(r.first) + "," + std::to_string(r.second) + ")");
  for (const Root& r : ca.roots.positive)
    ca.labels.push_back("Y(" + std::to_string(r.first) + "," + std::to_string(r.second) + ")");
  for (size_t i = 0; i < ca.labels.size(); ++i) ca.index[ca.labels[i]] = static_cast<int>(i);
}

}  // namespace detail

inline const ChevalleyAlgebra& build(AlgName name) {
  static const std::map<AlgName, ChevalleyAlgebra> cache = [] {
    std::map<AlgName, ChevalleyAlgebra> m;
    for (AlgName n : {AlgName::C2, AlgName::A2, AlgName::A1xA1}) {
      ChevalleyAlgebra ca = detail::build_from_matrices(n);
      detail::attach_labels(ca);
      m.emplace(n, std::move(ca));
    }
    ChevalleyAlgebra g2 = detail::build_g2();
    detail::attach_labels(g2);
    m.emplace(AlgName::G2, std::move(g2));
    return m;
  }();
  return cache.at(name);
}

struct MatrixRealization {
  int size = 0;
  std::vector<Mat<Rat>> mats;  // indexed like the Chevalley basis
};

inline MatrixRealization matrix_realization(AlgName name) {
  detail::MatrixGens g = detail::matrix_gens(name);  // throws for G2
  return {g.size, std::move(g.mats)};
}

// Oracle tying abstract constants to matrices: empty result means every
// generator pair brackets identically on both sides.
inline std::vector<std::string> verify_realization(AlgName name) {
  const ChevalleyAlgebra& ca = build(name);
  const MatrixRealization mr = matrix_realization(name);
  const int dim = ca.alg.n, nn = mr.size * mr.size;
  Mat<Rat> basis(nn, dim);
  for (int k = 0; k < dim; ++k)
    for (int e = 0; e < nn; ++e) basis(e, k) = mr.mats[k].a[e];
  std::vector<std::string> mismatches;
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      Mat<Rat> comm = mr.mats[i] * mr.mats[j] - mr.mats[j] * mr.mats[i];
      std::vector<Rat> rhs(comm.a.begin(), comm.a.end());
      auto coords = solve(basis, rhs);
      if (!coords) {
        mismatches.push_back(ca.labels[i] + "," + ca.labels[j] + ": commutator outside span");
        continue;
      }
      for (int k = 0; k < dim; ++k)
        if ((*coords)[k] != ca.alg.cc(i, j, k)) {
          mismatches.push_back(ca.labels[i] + "," + ca.labels[j] + ": coefficient of " + ca.labels[k] +
                               " is " + scalar_str((*coords)[k]) + " vs " + scalar_str(ca.alg.cc(i, j, k)));
          break;
        }
    }
  return mismatches;
}

// The paper's named toral elements. C2: T(a,b) = (a+b)Ha + a Hb.
// G2: H(c,d) = c Ha + 3d Hb (the line through the metric dual of c a + d b).
// A2 / A1xA1: plain a Ha + b Hb.
inline Vec<Rat> toral(AlgName name, const Rat& a, const Rat& b) {
  const ChevalleyAlgebra& ca = build(name);
  switch (name) {
    case AlgName::C2: return ca.cartan_vec(a + b, a);
    case AlgName::G2: return ca.cartan_vec(a, 3 * b);
    default: return ca.cartan_vec(a, b);
  }
}

// Coroot-normalized toral element H_{m a + n b} = 2 t_mu / (mu,mu); defined
// for any (m,n) != 0 (the paper uses it for non-roots too, e.g. 9a+5b).
inline Vec<Rat> coroot(AlgName name, const Rat& m, const Rat& n) {
  if (name != AlgName::G2) throw std::domain_error("coroot atom only used for g2 tables");
  const ChevalleyAlgebra& ca = build(name);
  const Rat nn = ca.roots.norm(m, n);
  if (is_zero(nn)) throw std::domain_error("coroot of zero vector");
  return ca.cartan_vec(m / nn, 3 * n / nn);
}

// Simple reflections acting on Cartan coordinates (x, y):
// s_g(h) = h - g(h) H_g.
inline std::pair<Rat, Rat> reflect(const RootSystem& rs, int s, const Rat& x, const Rat& y) {
  const Rat w = x * rs.cartan(s, 0) + y * rs.cartan(s, 1);  // value of simple root s on h
  return s == 0 ? std::make_pair(x - w, y) : std::make_pair(x, y - w);
}

inline std::vector<std::pair<Rat, Rat>> weyl_orbit_coords(AlgName name, const Rat& x, const Rat& y) {
  const RootSystem rs = build(name).roots;
  std::vector<std::pair<Rat, Rat>> orbit{{x, y}};
  for (size_t i = 0; i < orbit.size(); ++i) {
    for (int s = 0; s < 2; ++s) {
      auto im = reflect(rs, s, orbit[i].first, orbit[i].second);
      if (std::find(orbit.begin(), orbit.end(), im) == orbit.end()) orbit.push_back(im);
    }
  }
  return orbit;
}

inline std::vector<Vec<Rat>> weyl_orbit(AlgName name, const Vec<Rat>& v) {
  const ChevalleyAlgebra& ca = build(name);
  auto coords = ca.cartan_coords(v);
  if (!coords) throw std::domain_error("weyl_orbit: vector outside the Cartan subalgebra");
  std::vector<Vec<Rat>> out;
  for (auto& [x, y] : weyl_orbit_coords(name, coords->first, coords->second))
    out.push_back(ca.cartan_vec(x, y));
  return out;
}

// Orbit of the line through (x, y): projective representatives normalized
// so the first nonzero coordinate is 1.
inline std::vector<std::pair<Rat, Rat>> weyl_line_orbit(AlgName name, const Rat& x, const Rat& y) {
  const RootSystem rs = build(name).roots;
  auto norm = [](std::pair<Rat, Rat> p) {
    if (!is_zero(p.first)) return std::make_pair(Rat(1), p.second / p.first);
    return std::make_pair(Rat(0), Rat(1));
  };
  std::vector<std::pair<Rat, Rat>> orbit{norm({x, y})};
  for (size_t i = 0; i < orbit.size(); ++i)
    for (int s = 0; s < 2; ++s) {
      auto im = norm(reflect(rs, s, orbit[i].first, orbit[i].second));
      if (std::find(orbit.begin(), orbit.end(), im) == orbit.end()) orbit.push_back(im);
    }
  return orbit;
}

inline int weyl_group_order(AlgName name) {
  const RootSystem rs = build(name).roots;
  // 2x2 matrices of the two reflections in (x, y) coordinates
  auto refl_mat = [&](int s) {
    Mat<Rat> m = Mat<Rat>::identity(2);
    auto [x0, y0] = reflect(rs, s, Rat(1), Rat(0));
    auto [x1, y1] = reflect(rs, s, Rat(0), Rat(1));
    m(0, 0) = x0; m(1, 0) = y0;
    m(0, 1) = x1; m(1, 1) = y1;
    return m;
  };
  std::vector<Mat<Rat>> group{Mat<Rat>::identity(2)};
  std::vector<Mat<Rat>> gens{refl_mat(0), refl_mat(1)};
  for (size_t i = 0; i < group.size(); ++i)
    for (const auto& g : gens) {
      Mat<Rat> im = g * group[i];
      if (std::find(group.begin(), group.end(), im) == group.end()) group.push_back(im);
    }
  return static_cast<int>(group.size());
}

}  // namespace lie2
