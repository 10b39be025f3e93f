// The six derived identities of Hom 3-Lie-Rinehart algebras, plus ideals,
// the kernel of rho and the two centers.

#include "h3l/rinehart.hpp"

#include <array>
#include <stdexcept>

namespace h3l {

namespace {

SVec u(std::size_t i) { return SVec::unit(static_cast<std::uint32_t>(i)); }

// One term phi(rho(x_p, x_q)(a)) * alpha([x_r, x_s, x_t]); indices are 1-based
// positions in the 5-tuple.
struct RhoBracketTerm {
  std::array<int, 2> rho;
  std::array<int, 3> br;
};

// One term rho(x_p, x_q)(a) * rho(x_r, x_s)(b).
struct RhoRhoTerm {
  std::array<int, 2> first;
  std::array<int, 2> second;
};

using Six = std::array<RhoBracketTerm, 6>;

Six ho1_terms(IdentityReading r) {
  const std::array<int, 3> last = r == IdentityReading::Corrected ? std::array<int, 3>{3, 4, 1}
                                                                  : std::array<int, 3>{2, 4, 1};
  return {{{{4, 5}, {1, 2, 3}}, {{5, 3}, {1, 2, 4}}, {{3, 4}, {1, 2, 5}},
           {{2, 3}, {1, 4, 5}}, {{2, 4}, {3, 1, 5}}, {{2, 5}, last}}};
}

Six ho2_terms() {
  return {{{{4, 5}, {1, 2, 3}}, {{5, 3}, {1, 2, 4}}, {{3, 4}, {1, 2, 5}},
           {{3, 1}, {2, 4, 5}}, {{4, 1}, {3, 2, 5}}, {{5, 1}, {3, 4, 2}}}};
}

Six ho3_terms(IdentityReading r) {
  const std::array<int, 3> third = r == IdentityReading::Corrected ? std::array<int, 3>{3, 4, 1}
                                                                   : std::array<int, 3>{2, 4, 1};
  return {{{{2, 3}, {1, 4, 5}}, {{2, 4}, {3, 1, 5}}, {{2, 5}, third},
           {{1, 3}, {2, 4, 5}}, {{1, 4}, {3, 2, 5}}, {{1, 5}, {3, 4, 2}}}};
}

const std::vector<RhoRhoTerm> kHo4 = {{{1, 2}, {3, 4}}, {{1, 4}, {2, 3}}, {{2, 4}, {3, 1}}};
const std::vector<RhoRhoTerm> kHo5 = {{{1, 2}, {3, 4}}, {{2, 3}, {1, 4}}, {{3, 1}, {2, 4}}};
const std::vector<RhoRhoTerm> kHo6 = {
    {{1, 4}, {2, 3}}, {{2, 4}, {3, 1}}, {{2, 3}, {4, 1}}, {{3, 1}, {4, 2}}};

/// Tables of values used by every identity.
struct IdTables {
  const RinehartBundle& B;
  std::size_t n, m;
  // phi(rho(e_i, e_j)(e_a)) at (a * n + i) * n + j
  std::vector<std::optional<SVec>> phirho;
  // rho(e_i, e_j)(e_a)
  std::vector<std::optional<SVec>> rho;
  // alpha([e_p, e_q, e_r]) at (p * n + q) * n + r
  std::vector<std::optional<SVec>> abr;
  // alpha^2(e_i), phi(e_a), phi^2(e_a)
  std::vector<std::optional<SVec>> a2, phi1, phi2;

  explicit IdTables(const RinehartBundle& b)
      : B(b), n(b.L.dim()), m(b.A.dim()), phirho(m * n * n), rho(m * n * n), abr(n * n * n),
        a2(n), phi1(m), phi2(m) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          auto r = B.rho.apply(i, j, u(a));
          rho[(a * n + i) * n + j] = r;
          if (r) phirho[(a * n + i) * n + j] = B.A.phi.apply(*r);
        }
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t r = 0; r < n; ++r) {
          auto v = B.L.bracket.basis(p, q, r);
          if (v) abr[(p * n + q) * n + r] = B.L.alpha.apply(*v);
        }
    for (std::size_t i = 0; i < n; ++i) {
      auto a1 = B.L.alpha.col_opt(i);
      if (a1) a2[i] = B.L.alpha.apply(*a1);
    }
    for (std::size_t a = 0; a < m; ++a) {
      phi1[a] = B.A.phi.col_opt(a);
      if (phi1[a]) phi2[a] = B.A.phi.apply(*phi1[a]);
    }
  }

  /// Sum of phi(rho(..)(a)) * alpha([..]) over six terms; nullopt if undefined.
  std::optional<SVec> rho_bracket_sum(const Six& terms, std::size_t a, const std::size_t* x) const {
    SVec total;
    for (const auto& t : terms) {
      const std::size_t i = x[t.rho[0] - 1], j = x[t.rho[1] - 1];
      const auto& s = phirho[(a * n + i) * n + j];
      if (!s) return std::nullopt;
      if (s->empty()) continue;
      const std::size_t p = x[t.br[0] - 1], q = x[t.br[1] - 1], r = x[t.br[2] - 1];
      const auto& v = abr[(p * n + q) * n + r];
      if (!v) return std::nullopt;
      if (v->empty()) continue;
      auto term = B.action.act(*s, *v);
      if (!term) return std::nullopt;
      total.add_scaled(*term, 1);
    }
    return total;
  }

  /// Sum of rho(..)(a) * rho(..)(b) in A.
  std::optional<SVec> rho_rho_sum(const std::vector<RhoRhoTerm>& terms, std::size_t a,
                                  std::size_t b, const std::size_t* x) const {
    SVec total;
    for (const auto& t : terms) {
      const auto& ra = rho[(a * n + x[t.first[0] - 1]) * n + x[t.first[1] - 1]];
      if (!ra) return std::nullopt;
      if (ra->empty()) continue;
      const auto& rb = rho[(b * n + x[t.second[0] - 1]) * n + x[t.second[1] - 1]];
      if (!rb) return std::nullopt;
      if (rb->empty()) continue;
      auto p = B.A.mul(*ra, *rb);
      if (!p) return std::nullopt;
      total.add_scaled(*p, 1);
    }
    return total;
  }
};

struct Verdict {
  Outcome outcome = Outcome::Pass;
  std::string detail;
  std::optional<std::size_t> inner;  // failing b or c index
};

template <class Eval>
CheckReport run_identity(const std::string& name, const TupleSpace& space, const Eval& eval,
                         const std::vector<std::string>& slot_names, const RinehartBundle& B,
                         const std::vector<bool>& slot_is_a, const std::string& inner_name) {
  auto totals = scan_indices(space.count(), [&](std::uint64_t idx) {
    std::size_t t[8];
    space.decode(idx, t);
    return eval(t, false).outcome;
  });
  CheckReport r = report_from(name, totals);
  if (!inner_name.empty())
    r.note = "checked counts outer tuples; " + inner_name + " is quantified inside each tuple";
  if (totals.failed()) {
    std::size_t t[8];
    space.decode(totals.first_fail, t);
    Verdict v = eval(t, true);
    Witness w;
    for (std::size_t i = 0; i < slot_names.size(); ++i)
      w.tuple.push_back(slot_names[i] + "=" + (slot_is_a[i] ? B.A.label(t[i]) : B.L.label(t[i])));
    if (v.inner) w.tuple.push_back(inner_name + "=" + B.A.label(*v.inner));
    w.detail = v.detail;
    r.witness = std::move(w);
  }
  return r;
}

}  // namespace

SuiteReport check_identity_suite(const RinehartBundle& B, IdentityReading reading,
                                 bool require_full) {
  B.validate_shapes();
  SuiteReport s{"identities", {}};
  const char* ids[] = {"ho1", "ho2", "ho3", "ho4", "ho5", "ho6"};
  if (require_full && !check_full_rinehart(B).passed()) {
    for (const char* id : ids)
      s.add(CheckReport::blocked(id, "bundle is not a Hom 3-Lie-Rinehart algebra"));
    return s;
  }
  const IdTables T(B);
  const std::size_t n = T.n, m = T.m;
  const auto& labels = B.L.labels;

  // ho1: sum of six phi rho(..)(a) alpha[..] terms vanishes.
  {
    const Six terms = ho1_terms(reading);
    TupleSpace space;
    space.any(m).any(n, 5);
    auto eval = [&](const std::size_t* t, bool detail) {
      Verdict v;
      auto total = T.rho_bracket_sum(terms, t[0], t + 1);
      if (!total) v.outcome = Outcome::Skip;
      else if (!total->empty()) {
        v.outcome = Outcome::Fail;
        if (detail) v.detail = "sum = " + format_vec(*total, labels);
      }
      return v;
    };
    s.add(run_identity("ho1", space, eval, {"a", "x1", "x2", "x3", "x4", "x5"}, B,
                       {true, false, false, false, false, false}, ""));
  }

  // ho2, ho3: phi^2(b) times a six-term sum vanishes for every b.
  auto with_b = [&](const char* name, const Six& terms) {
    TupleSpace space;
    space.any(m).any(n, 5);
    auto eval = [&, terms](const std::size_t* t, bool detail) {
      Verdict v;
      auto inner = T.rho_bracket_sum(terms, t[0], t + 1);
      if (!inner) {
        v.outcome = Outcome::Skip;
        return v;
      }
      if (inner->empty()) return v;
      for (std::size_t b = 0; b < m; ++b) {
        if (!T.phi2[b]) {
          v.outcome = Outcome::Skip;
          return v;
        }
        auto val = B.action.act(*T.phi2[b], *inner);
        if (!val) {
          v.outcome = Outcome::Skip;
          return v;
        }
        if (!val->empty()) {
          v.outcome = Outcome::Fail;
          v.inner = b;
          if (detail) v.detail = "value = " + format_vec(*val, labels);
          return v;
        }
      }
      return v;
    };
    s.add(run_identity(name, space, eval, {"a", "x1", "x2", "x3", "x4", "x5"}, B,
                       {true, false, false, false, false, false}, "b"));
  };
  with_b("ho2", ho2_terms());
  with_b("ho3", ho3_terms(reading));

  // ho4..ho6: phi(W) alpha^2(x5), optionally times phi^2(c), where W is a
  // sum of products rho(..)(a) rho(..)(b) in A.
  auto rho_rho = [&](const char* name, const std::vector<RhoRhoTerm>& terms, bool with_c) {
    TupleSpace space;
    space.any(m, 2).any(n, 4);
    auto eval = [&, terms, with_c](const std::size_t* t, bool detail) {
      Verdict v;
      auto w = T.rho_rho_sum(terms, t[0], t[1], t + 2);
      if (!w) {
        v.outcome = Outcome::Skip;
        return v;
      }
      if (w->empty()) return v;
      auto pw = B.A.phi.apply(*w);
      if (!pw) {
        v.outcome = Outcome::Skip;
        return v;
      }
      const std::size_t cs = with_c ? m : 1;
      for (std::size_t c = 0; c < cs; ++c) {
        std::optional<SVec> coeff = pw;
        if (with_c) coeff = T.phi2[c] ? B.A.mul(*T.phi2[c], *pw) : std::nullopt;
        if (!coeff) {
          v.outcome = Outcome::Skip;
          return v;
        }
        for (std::size_t x5 = 0; x5 < n; ++x5) {
          std::optional<SVec> val;
          if (T.a2[x5]) val = B.action.act(*coeff, *T.a2[x5]);
          if (!val) {
            v.outcome = Outcome::Skip;
            return v;
          }
          if (!val->empty()) {
            v.outcome = Outcome::Fail;
            if (with_c) v.inner = c;
            if (detail)
              v.detail = "x5=" + B.L.label(x5) + ", value = " + format_vec(*val, labels);
            return v;
          }
        }
      }
      return v;
    };
    s.add(run_identity(name, space, eval, {"a", "b", "x1", "x2", "x3", "x4"}, B,
                       {true, true, false, false, false, false},
                       with_c ? "c" : ""));
    if (!with_c) s.checks.back().note = "checked counts (a, b, x1..x4); x5 is quantified inside";
  };
  rho_rho("ho4", kHo4, false);
  rho_rho("ho5", kHo5, true);
  rho_rho("ho6", kHo6, true);
  return s;
}

// ---------------------------------------------------------------- ideals

SuiteReport rinehart_ideal_laws(const RinehartBundle& B, const Subspace& I) {
  const std::size_t n = B.L.dim(), m = B.A.dim();
  if (I.ambient_dim() != n) throw std::invalid_argument("ideal ambient dimension mismatch");
  SuiteReport s;
  s.name = "rinehart_ideal";
  CheckReport lie = check_ideal(B.L, I);
  lie.name = "lie_ideal";
  s.add(std::move(lie));
  CheckReport mod, clo;
  mod.name = "a_stable";
  clo.name = "rho_closure";
  auto fail = [](CheckReport& r, std::vector<std::string> tuple, std::string detail) {
    ++r.violations;
    if (!r.witness) r.witness = Witness{std::move(tuple), std::move(detail)};
  };
  const auto& gens = I.basis();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const SVec x = SVec::from_dense(gens[g]);
    const std::string gname = "s" + std::to_string(g + 1);
    for (std::size_t a = 0; a < m; ++a) {
      auto ax = B.action.apply(a, x);
      if (!ax) {
        ++mod.skipped;
        continue;
      }
      ++mod.checked;
      if (!I.contains(ax->to_dense(n)))
        fail(mod, {gname, "a=" + B.A.label(a)}, "a*s = " + format_vec(*ax, B.L.labels) + " not in I");
    }
    // rho(s, e_j)(e_a) e_k
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < m; ++a) {
        auto coeff = rho_apply(B.rho, x, u(j), u(a));
        if (!coeff) {
          clo.skipped += n;
          continue;
        }
        if (coeff->empty()) {
          clo.checked += n;
          continue;
        }
        for (std::size_t k = 0; k < n; ++k) {
          auto v = B.action.act(*coeff, u(k));
          if (!v) {
            ++clo.skipped;
            continue;
          }
          ++clo.checked;
          if (!I.contains(v->to_dense(n)))
            fail(clo, {gname, "y=" + B.L.label(j), "a=" + B.A.label(a), "z=" + B.L.label(k)},
                 "rho(s,y)(a) z = " + format_vec(*v, B.L.labels) + " not in I");
        }
      }
  }
  for (CheckReport* r : {&mod, &clo}) r->status = r->violations ? Status::Fail : Status::Pass;
  s.add(std::move(mod));
  s.add(std::move(clo));
  return s;
}

CheckReport rinehart_ideal_check(const RinehartBundle& B, const Subspace& I) {
  const SuiteReport s = rinehart_ideal_laws(B, I);
  CheckReport r;
  r.name = "rinehart_ideal";
  for (const auto& c : s.checks) {
    r.checked += c.checked;
    r.skipped += c.skipped;
    r.violations += c.violations;
    if (!r.witness && c.witness) r.witness = c.witness;
  }
  r.status = r.violations ? Status::Fail : Status::Pass;
  return r;
}

KerRho ker_rho_ideal(const RinehartBundle& B) {
  KerRho out;
  out.ker = kernel_of_rep(B.rho);
  out.laws = rinehart_ideal_laws(B, out.ker);
  out.ideal = rinehart_ideal_check(B, out.ker);
  out.alpha_stable.name = "alpha_stable";
  bool ok = true;
  for (const auto& g : out.ker.basis()) {
    auto img = B.L.alpha.apply(SVec::from_dense(g));
    if (!img) {
      ++out.alpha_stable.skipped;
      continue;
    }
    ++out.alpha_stable.checked;
    if (!out.ker.contains(img->to_dense(B.L.dim()))) ok = false;
  }
  out.alpha_stable.status = ok ? Status::Pass : Status::Fail;
  out.alpha_stable.violations = ok ? 0 : 1;
  return out;
}

Centers centers(const RinehartBundle& B) {
  const std::size_t n = B.L.dim(), m = B.A.dim();
  Centers c;
  // Z_L(A): a with a.e_x = 0 for every x.
  std::vector<LinMap> za;
  for (std::size_t x = 0; x < n; ++x) {
    LinMap con(m, n);
    for (std::size_t a = 0; a < m; ++a) {
      auto v = B.action.apply(a, u(x));
      if (v)
        con.set_col(a, std::move(*v));
      else
        con.set_undefined(a);
    }
    za.push_back(std::move(con));
  }
  c.z_l_a = partial_kernel(m, za);

  // Z_rho(L): joint system of the center and kernel conditions.
  std::vector<LinMap> joint;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      LinMap con(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        auto v = B.L.bracket.basis(i, j, k);
        if (v)
          con.set_col(i, std::move(*v));
        else
          con.set_undefined(i);
      }
      joint.push_back(std::move(con));
    }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t b = 0; b < m; ++b) {
      LinMap con(n, m);
      for (std::size_t i = 0; i < n; ++i) {
        auto v = B.rho.apply(i, j, u(b));
        if (v)
          con.set_col(i, std::move(*v));
        else
          con.set_undefined(i);
      }
      joint.push_back(std::move(con));
    }
  c.z_rho_l = partial_kernel(n, joint);
  c.consistent = c.z_rho_l == center(B.L).intersect(kernel_of_rep(B.rho));
  return c;
}

}  // namespace h3l
