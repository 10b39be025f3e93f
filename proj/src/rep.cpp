#include "h3l/rep.hpp"

#include <stdexcept>

namespace h3l {

PairAction::PairAction(std::size_t source_dim, std::size_t target_dim)
    : n_(source_dim),
      m_(target_dim),
      maps_(source_dim * (source_dim > 0 ? source_dim - 1 : 0) / 2, LinMap(target_dim, target_dim)) {}

std::size_t PairAction::index(std::size_t i, std::size_t j) const {
  if (i >= j || j >= n_) throw std::out_of_range("pair index must satisfy i < j < dim");
  // Pairs (i, j) with i < j listed row by row.
  return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

void PairAction::set(std::size_t i, std::size_t j, LinMap map) {
  if (map.in_dim() != m_ || map.out_dim() != m_)
    throw std::invalid_argument("rho matrix has the wrong shape");
  if (i == j) throw std::invalid_argument("rho(e_i, e_i) is zero by antisymmetry");
  if (i < j)
    maps_[index(i, j)] = std::move(map);
  else
    maps_[index(j, i)] = map.scaled(-1);
}

LinMap PairAction::get(std::size_t i, std::size_t j) const {
  if (i == j) return LinMap(m_, m_);
  return i < j ? maps_[index(i, j)] : maps_[index(j, i)].scaled(-1);
}

bool PairAction::is_zero() const {
  for (const auto& m : maps_)
    if (!m.is_zero() || !m.total()) return false;
  return true;
}

std::optional<SVec> PairAction::apply(std::size_t i, std::size_t j, const SVec& v) const {
  if (i == j) return SVec{};
  if (i < j) return maps_[index(i, j)].apply(v);
  auto r = maps_[index(j, i)].apply(v);
  if (r) *r = r->scaled(-1);
  return r;
}

std::optional<SVec> rho_apply(const PairAction& rho, const SVec& x, const SVec& y, const SVec& v) {
  SVec out;
  for (const auto& [i, ci] : x)
    for (const auto& [j, cj] : y) {
      if (i == j) continue;
      auto r = rho.apply(i, j, v);
      if (!r) return std::nullopt;
      out.add_scaled(*r, ci * cj);
    }
  return out;
}

LinMap rho_map(const PairAction& rho, const SVec& x, const SVec& y) {
  const std::size_t m = rho.target_dim();
  LinMap out(m, m);
  for (std::size_t b = 0; b < m; ++b) {
    auto r = rho_apply(rho, x, y, SVec::unit(static_cast<std::uint32_t>(b)));
    if (r)
      out.set_col(b, std::move(*r));
    else
      out.set_undefined(b);
  }
  return out;
}

namespace {

std::vector<std::string> v_labels(std::size_t m) {
  std::vector<std::string> l;
  for (std::size_t i = 0; i < m; ++i) l.push_back("v" + std::to_string(i + 1));
  return l;
}

/// Precomputed data shared by the Hom-representation checks.
struct RepTables {
  const Hom3Lie& alg;
  const HomRepresentation& rep;
  std::size_t n, m;
  std::vector<std::optional<SVec>> a;    // alpha(e_i)
  std::vector<std::optional<SVec>> phi;  // phi(e_v)
  std::vector<LinMap> ra;                // rho(alpha e_i, alpha e_j), i < j, row-major n*n
  std::vector<bool> ra_ok;

  RepTables(const Hom3Lie& g, const HomRepresentation& r)
      : alg(g), rep(r), n(g.dim()), m(r.action.target_dim()), a(n), phi(m), ra(n * n), ra_ok(n * n, false) {
    if (r.action.source_dim() != n) throw std::invalid_argument("rho source dimension mismatch");
    if (r.phi.in_dim() != m || r.phi.out_dim() != m)
      throw std::invalid_argument("phi has the wrong shape");
    for (std::size_t i = 0; i < n; ++i) a[i] = g.alpha.col_opt(i);
    for (std::size_t v = 0; v < m; ++v) phi[v] = r.phi.col_opt(v);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (a[i] && a[j]) {
          ra[i * n + j] = rho_map(r.action, *a[i], *a[j]);
          ra_ok[i * n + j] = true;
        }
  }

  /// rho(alpha e_i, alpha e_j)(w)
  std::optional<SVec> rho_alpha(std::size_t i, std::size_t j, const std::optional<SVec>& w) const {
    if (!w) return std::nullopt;
    if (i == j) return SVec{};
    const std::size_t lo = std::min(i, j), hi = std::max(i, j);
    if (!ra_ok[lo * n + hi]) return std::nullopt;
    auto r = ra[lo * n + hi].apply(*w);
    if (r && i > j) *r = r->scaled(-1);
    return r;
  }
  std::optional<SVec> rho(std::size_t i, std::size_t j, std::size_t v) const {
    return rep.action.apply(i, j, SVec::unit(static_cast<std::uint32_t>(v)));
  }
  /// rho(x, y)(phi e_v) for sparse x, y.
  std::optional<SVec> rho_phi(const std::optional<SVec>& x, const std::optional<SVec>& y,
                              std::size_t v) const {
    if (!x || !y || !phi[v]) return std::nullopt;
    return rho_apply(rep.action, *x, *y, *phi[v]);
  }
  std::optional<SVec> br(std::size_t i, std::size_t j, std::size_t k) const {
    return alg.bracket.basis(i, j, k);
  }
};

std::optional<SVec> sum(std::initializer_list<std::optional<SVec>> terms) {
  SVec s;
  for (const auto& t : terms) {
    if (!t) return std::nullopt;
    s.add_scaled(*t, 1);
  }
  return s;
}

std::optional<SVec> neg(std::optional<SVec> v) {
  if (v) *v = v->scaled(-1);
  return v;
}

TupleNames x_names(const Hom3Lie& alg, std::size_t xs) {
  return [&alg, xs](const std::size_t* t) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < xs; ++i)
      out.push_back("x" + std::to_string(i + 1) + "=" + alg.label(t[i]));
    out.push_back("v=v" + std::to_string(t[xs] + 1));
    return out;
  };
}

Sides hr2_sides(const RepTables& T, const std::size_t* t) {
  const std::size_t x1 = t[0], x2 = t[1], x3 = t[2], x4 = t[3], v = t[4];
  Sides s;
  s.lhs = T.rho_phi(T.br(x1, x2, x3), T.a[x4], v);
  s.rhs = sum({T.rho_alpha(x1, x2, T.rho(x3, x4, v)), T.rho_alpha(x2, x3, T.rho(x1, x4, v)),
               T.rho_alpha(x3, x1, T.rho(x2, x4, v))});
  return s;
}

Sides hr3_sides(const RepTables& T, const std::size_t* t) {
  const std::size_t x1 = t[0], x2 = t[1], x3 = t[2], x4 = t[3], v = t[4];
  Sides s;
  s.lhs = T.rho_alpha(x1, x2, T.rho(x3, x4, v));
  s.rhs = sum({T.rho_alpha(x3, x4, T.rho(x1, x2, v)), T.rho_phi(T.br(x1, x2, x3), T.a[x4], v),
               T.rho_phi(T.a[x3], T.br(x1, x2, x4), v)});
  return s;
}

Sides hr4_sides(const RepTables& T, const std::size_t* t) {
  const std::size_t x1 = t[0], x2 = t[1], x3 = t[2], x4 = t[3], v = t[4];
  Sides s;
  s.lhs = sum({T.rho_alpha(x1, x2, T.rho(x3, x4, v)), T.rho_alpha(x2, x3, T.rho(x1, x4, v)),
               T.rho_alpha(x3, x1, T.rho(x2, x4, v)), T.rho_alpha(x3, x4, T.rho(x1, x2, v)),
               T.rho_alpha(x1, x4, T.rho(x2, x3, v)), T.rho_alpha(x2, x4, T.rho(x3, x1, v))});
  s.rhs = SVec{};
  return s;
}

TupleSpace hr2_space(std::size_t n, std::size_t m) {
  TupleSpace s;
  s.increasing(n, 3).any(n).any(m);
  return s;
}

TupleSpace hr3_space(std::size_t n, std::size_t m) {
  TupleSpace s;
  s.increasing(n, 2).increasing(n, 2).any(m);
  return s;
}

}  // namespace

SuiteReport check_classical_rep(const Hom3Lie& alg, const PairAction& act) {
  const std::size_t n = alg.dim(), m = act.target_dim();
  if (act.source_dim() != n) throw std::invalid_argument("rho source dimension mismatch");
  auto rho = [&](std::size_t i, std::size_t j, const std::optional<SVec>& w) -> std::optional<SVec> {
    if (!w) return std::nullopt;
    return act.apply(i, j, *w);
  };
  auto rho_b = [&](const std::optional<SVec>& b, std::size_t j, std::size_t v) -> std::optional<SVec> {
    if (!b) return std::nullopt;
    return rho_apply(act, *b, SVec::unit(static_cast<std::uint32_t>(j)),
                     SVec::unit(static_cast<std::uint32_t>(v)));
  };
  auto ev = [](std::size_t v) { return std::optional<SVec>(SVec::unit(static_cast<std::uint32_t>(v))); };
  SuiteReport suite{"representation", {}};
  const auto labels = v_labels(m);

  TupleSpace s1;
  s1.increasing(n, 2).increasing(n, 2).any(m);
  suite.add(run_check(
      "mod1", s1,
      [&](const std::size_t* t) {
        const std::size_t x1 = t[0], x2 = t[1], x3 = t[2], x4 = t[3], v = t[4];
        Sides s;
        s.lhs = sum({rho(x1, x2, rho(x3, x4, ev(v))), neg(rho(x3, x4, rho(x1, x2, ev(v))))});
        s.rhs = sum({rho_b(alg.bracket.basis(x1, x2, x3), x4, v),
                     neg(rho_b(alg.bracket.basis(x1, x2, x4), x3, v))});
        return s;
      },
      x_names(alg, 4), labels));

  TupleSpace s2;
  s2.increasing(n, 3).any(n).any(m);
  suite.add(run_check(
      "mod2", s2,
      [&](const std::size_t* t) {
        const std::size_t x1 = t[0], x2 = t[1], x3 = t[2], x4 = t[3], v = t[4];
        Sides s;
        s.lhs = rho_b(alg.bracket.basis(x1, x2, x3), x4, v);
        s.rhs = sum({rho(x1, x2, rho(x3, x4, ev(v))), rho(x2, x3, rho(x1, x4, ev(v))),
                     rho(x3, x1, rho(x2, x4, ev(v)))});
        return s;
      },
      x_names(alg, 4), labels));
  return suite;
}

CheckReport check_hr1(const Hom3Lie& alg, const HomRepresentation& rep) {
  RepTables T(alg, rep);
  TupleSpace s;
  s.increasing(T.n, 2).any(T.m);
  return run_check(
      "hr1", s,
      [&](const std::size_t* t) {
        Sides r;
        r.lhs = T.rho_alpha(t[0], t[1], T.phi[t[2]]);
        auto inner = T.rho(t[0], t[1], t[2]);
        if (inner) r.rhs = rep.phi.apply(*inner);
        return r;
      },
      x_names(alg, 2), v_labels(T.m));
}

CheckReport check_hr2(const Hom3Lie& alg, const HomRepresentation& rep) {
  RepTables T(alg, rep);
  return run_check("hr2", hr2_space(T.n, T.m), [&](const std::size_t* t) { return hr2_sides(T, t); },
                   x_names(alg, 4), v_labels(T.m));
}

CheckReport check_hr3(const Hom3Lie& alg, const HomRepresentation& rep) {
  RepTables T(alg, rep);
  return run_check("hr3", hr3_space(T.n, T.m), [&](const std::size_t* t) { return hr3_sides(T, t); },
                   x_names(alg, 4), v_labels(T.m));
}

CheckReport check_hr4(const Hom3Lie& alg, const HomRepresentation& rep) {
  RepTables T(alg, rep);
  return run_check("hr4", hr3_space(T.n, T.m), [&](const std::size_t* t) { return hr4_sides(T, t); },
                   x_names(alg, 4), v_labels(T.m));
}

SuiteReport check_hom_rep(const Hom3Lie& alg, const HomRepresentation& rep) {
  SuiteReport s{"hom_representation", {}};
  s.add(check_hr1(alg, rep));
  s.add(check_hr2(alg, rep));
  s.add(check_hr3(alg, rep));
  return s;
}

Hr4Equivalence check_hr4_equivalence(const Hom3Lie& alg, const HomRepresentation& rep) {
  Hr4Equivalence out;
  if (!check_hr2(alg, rep).passed()) {
    out.note = "hr2 failed; equivalence untested";
    return out;
  }
  RepTables T(alg, rep);
  const TupleSpace space = hr3_space(T.n, T.m);
  bool hr3_all = true, hr4_all = true;
  std::uint64_t tuples = 0, disagreements = 0;
  const auto count = static_cast<std::int64_t>(space.count());
#pragma omp parallel for schedule(dynamic, 256) reduction(+ : tuples, disagreements) \
    reduction(&& : hr3_all, hr4_all)
  for (std::int64_t i = 0; i < count; ++i) {
    std::size_t t[5];
    space.decode(static_cast<std::uint64_t>(i), t);
    Sides s3 = hr3_sides(T, t);
    Sides s4 = hr4_sides(T, t);
    if (!s3.evaluable() || !s4.evaluable()) continue;
    const bool ok3 = *s3.lhs == *s3.rhs;
    const bool ok4 = *s4.lhs == *s4.rhs;
    ++tuples;
    if (ok3 != ok4) ++disagreements;
    hr3_all = hr3_all && ok3;
    hr4_all = hr4_all && ok4;
  }
  out.tested = true;
  out.hr3 = hr3_all;
  out.hr4 = hr4_all;
  out.agree = hr3_all == hr4_all;
  out.tuples = tuples;
  out.tuple_disagreements = disagreements;
  return out;
}

Subspace kernel_of_rep(const PairAction& rho) {
  const std::size_t n = rho.source_dim(), m = rho.target_dim();
  std::vector<LinMap> constraints;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t b = 0; b < m; ++b) {
      LinMap c(n, m);
      for (std::size_t i = 0; i < n; ++i) {
        auto r = rho.apply(i, j, SVec::unit(static_cast<std::uint32_t>(b)));
        if (r)
          c.set_col(i, std::move(*r));
        else
          c.set_undefined(i);
      }
      constraints.push_back(std::move(c));
    }
  return partial_kernel(n, constraints);
}

}  // namespace h3l
