#pragma once

// Brute-force reference evaluations shared by the unit tests and the
// acceptance run. They use dense vectors and enumerate every basis tuple.

#include "gen.hpp"
#include "h3l/split.hpp"

#include <algorithm>

namespace oracle {

using namespace h3l;

// ---- Hom-Jacobi by enumeration ----------------------------------------------

struct DenseBracket {
  std::size_t n;
  std::vector<std::optional<Vec>> T;  // [(i*n+j)*n+k]
  std::vector<std::optional<Vec>> alpha;

  explicit DenseBracket(const Hom3Lie& L) : n(L.dim()) {
    T.resize(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (auto v = L.bracket.basis(i, j, k)) T[(i * n + j) * n + k] = v->to_dense(n);
    for (std::size_t i = 0; i < n; ++i)
      if (auto c = L.alpha.col_opt(i)) alpha.push_back(c->to_dense(n));
      else alpha.push_back(std::nullopt);
  }

  std::optional<Vec> tri(const Vec& u, const Vec& v, const Vec& w) const {
    Vec out = zero_vec(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (v[j] == 0) continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (w[k] == 0) continue;
          const auto& t = T[(i * n + j) * n + k];
          if (!t) return std::nullopt;
          out = out + (u[i] * v[j] * w[k]) * *t;
        }
      }
    }
    return out;
  }
};

struct JacobiVerdict {
  bool holds = true;
  std::uint64_t evaluated = 0, skipped = 0;
};

// [a x1, a x2, [y1,y2,y3]] = [[x1,x2,y1], a y2, a y3] + [a y1, [x1,x2,y2], a y3]
// + [a y1, a y2, [x1,x2,y3]] on every ordered basis 5-tuple; alpha = id gives
// the plain identity. Tuples touching an undefined value are skipped.
inline JacobiVerdict hom_jacobi(const Hom3Lie& L, bool use_alpha = true) {
  const DenseBracket d(L);
  const std::size_t n = d.n;
  JacobiVerdict out;
  std::vector<std::optional<Vec>> a(n);
  std::vector<Vec> u(n);
  for (std::size_t i = 0; i < n; ++i) {
    u[i] = unit_vec(n, i);
    a[i] = use_alpha ? d.alpha[i] : std::optional<Vec>(u[i]);
  }
  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t x2 = 0; x2 < n; ++x2)
      for (std::size_t y1 = 0; y1 < n; ++y1)
        for (std::size_t y2 = 0; y2 < n; ++y2)
          for (std::size_t y3 = 0; y3 < n; ++y3) {
            auto skip = [&] { ++out.skipped; };
            if (!a[x1] || !a[x2] || !a[y1] || !a[y2] || !a[y3]) {
              skip();
              continue;
            }
            const auto inner = d.tri(u[y1], u[y2], u[y3]);
            const auto b1 = d.tri(u[x1], u[x2], u[y1]), b2 = d.tri(u[x1], u[x2], u[y2]),
                       b3 = d.tri(u[x1], u[x2], u[y3]);
            if (!inner || !b1 || !b2 || !b3) {
              skip();
              continue;
            }
            const auto lhs = d.tri(*a[x1], *a[x2], *inner);
            const auto r1 = d.tri(*b1, *a[y2], *a[y3]), r2 = d.tri(*a[y1], *b2, *a[y3]),
                       r3 = d.tri(*a[y1], *a[y2], *b3);
            if (!lhs || !r1 || !r2 || !r3) {
              skip();
              continue;
            }
            ++out.evaluated;
            if (*lhs != *r1 + *r2 + *r3) out.holds = false;
          }
  return out;
}

// ---- connections by chain enumeration ----------------------------------------

// g(alpha^k, alpha^k) as P^T M P with P = AH^k.
inline RootForm pull(const RootForm& g, const Matrix& AH, int k) {
  const Matrix P = power(AH, k);
  return {P.transpose() * g.matrix * P};
}

inline bool member(const std::vector<RootForm>& set, const RootForm& f) {
  return std::find(set.begin(), set.end(), f) != set.end();
}

// The alpha used here always has order dividing 12.
inline std::vector<RootForm> orbit_of(const RootForm& g, const Matrix& AH) {
  std::vector<RootForm> out;
  for (int k = -12; k <= 12; ++k)
    if (!member(out, pull(g, AH, k))) out.push_back(pull(g, AH, k));
  return out;
}

inline std::vector<RootForm> pm(const std::vector<RootForm>& s) {
  std::vector<RootForm> out = s;
  for (const auto& f : s)
    if (!member(out, -f)) out.push_back(-f);
  return out;
}

struct System {
  std::vector<RootForm> gamma, lambda;
  Matrix AH;

  // +-Gamma, +-Lambda and 0
  std::vector<RootForm> steps() const {
    std::vector<RootForm> s = pm(gamma);
    for (const auto& l : pm(lambda))
      if (!member(s, l)) s.push_back(l);
    s.push_back(RootForm::zero(AH.rows()));
    return s;
  }
  std::vector<RootForm> pm_orbit(const RootForm& g) const { return pm(orbit_of(g, AH)); }
};

// Connected through the orbit or a chain {g1, g2, g3}: g1 in the orbit of
// `from`, g2 and g3 steps, (g1 + g2 + g3)(alpha^-1) in +-orbit(to).
inline bool connected_len3(const System& S, const RootForm& from, const RootForm& to) {
  const auto target = S.pm_orbit(to);
  if (member(S.pm_orbit(from), to)) return true;
  const auto steps = S.steps();
  for (const auto& g1 : orbit_of(from, S.AH)) {
    if (!member(steps, g1)) continue;
    for (const auto& g2 : steps)
      for (const auto& g3 : steps)
        if (member(target, pull(g1, S.AH, -1) + pull(g2 + g3, S.AH, -1))) return true;
  }
  return false;
}

// Checks a chain against the definition, summing each bar gamma_i from scratch.
inline bool valid_chain(const System& S, const std::vector<RootForm>& chain, const RootForm& from,
                        const RootForm& to) {
  if (chain.size() < 3 || chain.size() % 2 == 0) return false;
  const int n = static_cast<int>(chain.size() / 2);
  const auto steps = S.steps();
  for (const auto& c : chain)
    if (!member(steps, c)) return false;
  if (!member(orbit_of(from, S.AH), chain[0])) return false;
  const auto pg = pm(S.gamma);
  for (int i = 1; i <= n; ++i) {
    RootForm bar = pull(chain[0], S.AH, -i);
    for (int j = 1; j <= i; ++j)
      bar = bar + pull(chain[2 * j - 1], S.AH, -i - 1 + j) + pull(chain[2 * j], S.AH, -i - 1 + j);
    if (i < n && !member(pg, bar)) return false;
    if (i == n && !member(S.pm_orbit(to), bar)) return false;
  }
  return true;
}

struct ConnectionAgreement {
  std::uint64_t pairs = 0, disagreements = 0, bad_chains = 0, short_connected = 0;
};

// The search is breadth first: a connection of length <= 3, when one exists,
// is the one it reports.
inline ConnectionAgreement compare_search(const System& S) {
  ConnectionAgreement out;
  for (const auto& from : S.gamma)
    for (const auto& to : S.gamma) {
      ++out.pairs;
      const Connection c = connected(S.gamma, S.lambda, S.AH, from, to);
      if (c.connected && !c.via_orbit && !valid_chain(S, c.chain, from, to)) ++out.bad_chains;
      const bool found_short = c.connected && (c.via_orbit || c.chain.size() <= 3);
      const bool expected = connected_len3(S, from, to);
      out.short_connected += expected;
      if (found_short != expected) ++out.disagreements;
    }
  return out;
}

// ---- random systems with alpha of finite order ------------------------------

// Antisymmetric form with M(0,1) = c01, M(0,2) = c02, M(1,2) = c12.
inline RootForm form3(const Q& c01, const Q& c02, const Q& c12) {
  Matrix m(3, 3);
  m(0, 1) = c01;
  m(1, 0) = -c01;
  m(0, 2) = c02;
  m(2, 0) = -c02;
  m(1, 2) = c12;
  m(2, 1) = -c12;
  return {m};
}

inline Matrix finite_order(int which) {
  Matrix m = Matrix::identity(3);
  switch (which) {
    case 1:
      for (std::size_t i = 0; i < 3; ++i) m(i, i) = -1;
      break;
    case 2:  // cyclic permutation
      m = Matrix(3, 3);
      m(1, 0) = 1;
      m(2, 1) = 1;
      m(0, 2) = 1;
      break;
    case 3:
      m(1, 1) = -1;
      break;
    case 4:  // quarter turn in the first two coordinates
      m = Matrix(3, 3);
      m(1, 0) = 1;
      m(0, 1) = -1;
      m(2, 2) = 1;
      break;
    default:
      break;
  }
  return m;
}

inline System random_system(gen::Rng& r) {
  System S;
  S.AH = finite_order(r.range(0, 4));
  auto rf = [&] {
    RootForm f;
    do f = form3(r.range(-2, 2), r.range(-1, 1), r.range(-1, 1));
    while (f.is_zero());
    return f;
  };
  const int ng = r.range(1, 3), nl = r.range(0, 2);
  for (int i = 0; i < ng; ++i)
    for (const auto& o : orbit_of(rf(), S.AH))
      if (!member(S.gamma, o)) S.gamma.push_back(o);
  for (int i = 0; i < nl; ++i) {
    const RootForm l = rf();
    if (!member(S.lambda, l)) S.lambda.push_back(l);
  }
  return S;
}

}  // namespace oracle
