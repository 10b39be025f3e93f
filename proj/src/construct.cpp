#include "h3l/construct.hpp"

namespace h3l {

namespace {

SVec u(std::size_t i) { return SVec::unit(static_cast<std::uint32_t>(i)); }

bool is_identity(const LinMap& m) {
  return m.in_dim() == m.out_dim() && m == LinMap::identity(m.in_dim());
}

}  // namespace

SuiteReport check_twist_input(const TwistInput& in) {
  const RinehartBundle& B = in.base;
  B.validate_shapes();
  const std::size_t n = B.L.dim(), m = B.A.dim();
  if (in.alpha_new.in_dim() != n || in.alpha_new.out_dim() != n)
    throw std::invalid_argument("alpha_new has the wrong shape");
  if (in.phi_new.in_dim() != m || in.phi_new.out_dim() != m)
    throw std::invalid_argument("phi_new has the wrong shape");

  SuiteReport s{"twist_input", {}};
  s.add(CheckReport::verdict("base_classical", is_identity(B.L.alpha) && is_identity(B.A.phi),
                             "base must have alpha = id and phi = id"));
  SuiteReport base = check_full_rinehart(B);
  s.add(CheckReport::verdict("base_rinehart", base.passed(),
                             base.passed() ? "" : "base is not a 3-Lie-Rinehart algebra"));

  Hom3Lie twisted_l = B.L;
  twisted_l.alpha = in.alpha_new;
  CheckReport mult = check_multiplicative(twisted_l);
  mult.name = "alpha_endomorphism";
  s.add(mult);

  CommAlgebra twisted_a = B.A;
  twisted_a.phi = in.phi_new;
  CheckReport phim = *check_coefficients(twisted_a).find("phi_multiplicative");
  phim.name = "phi_endomorphism";
  s.add(phim);

  CheckReport hr1 = check_hr1(twisted_l, {B.rho, in.phi_new});
  hr1.name = "rho_phi_compatible";
  s.add(hr1);

  RinehartBundle probe = B;
  probe.L = twisted_l;
  probe.A = twisted_a;
  SuiteReport weak = check_weak_rinehart(probe);
  CheckReport al = *weak.find("alpha_a_linear");
  s.add(al);
  return s;
}

RinehartBundle twist(const TwistInput& in) {
  SuiteReport pre = check_twist_input(in);
  if (!pre.passed()) {
    for (const auto& c : pre.checks)
      if (!c.passed()) throw ConstructionError("twist precondition failed: " + c.name, pre);
  }
  const RinehartBundle& B = in.base;
  RinehartBundle out = B;
  out.name = B.name.empty() ? "twist" : B.name + "-twist";
  out.L.alpha = in.alpha_new;
  out.A.phi = in.phi_new;

  Bracket3 br(B.L.dim());
  for (const auto& e : B.L.bracket.entries()) {
    std::optional<SVec> v;
    if (e.value) v = in.alpha_new.apply(*e.value);
    if (v)
      br.set(e.idx[0], e.idx[1], e.idx[2], std::move(*v));
    else
      br.set_undefined(e.idx[0], e.idx[1], e.idx[2]);
  }
  out.L.bracket = std::move(br);

  const std::size_t n = B.L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      out.rho.set(i, j, in.phi_new.compose(B.rho.stored(i, j)));

  out.flags = {};
  out.H.reset();
  out.metadata["construction"] = "twist";
  return out;
}

SuiteReport check_tensor_input(const Hom3Lie& L, const CommAlgebra& A, const PairAction& rho) {
  if (rho.source_dim() != L.dim() || rho.target_dim() != A.dim())
    throw std::invalid_argument("rho has the wrong shape");
  SuiteReport s{"tensor_input", {}};
  s.add(check_multiplicative(L));
  s.add(check_hom_jacobi(L));
  s.append(check_coefficients(A));
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      SuiteReport d = check_phi_derivation(A, rho.stored(i, j));
      for (auto c : d.checks) {
        c.name = "rho(" + L.label(i) + "," + L.label(j) + ")_" + c.name;
        if (!c.passed()) s.add(std::move(c));
      }
    }
  s.append(check_hom_rep(L, {rho, A.phi}));
  return s;
}

RinehartBundle tensor_extension(const Hom3Lie& L, const CommAlgebra& A, const PairAction& rho) {
  SuiteReport pre = check_tensor_input(L, A, rho);
  if (!pre.passed()) {
    for (const auto& c : pre.checks)
      if (!c.passed()) throw ConstructionError("tensor precondition failed: " + c.name, pre);
  }
  const std::size_t n = L.dim(), m = A.dim(), N = n * m;
  auto gi = [n](std::size_t a, std::size_t x) { return static_cast<std::uint32_t>(a * n + x); };

  // c (x) y for c in A, y in L.
  auto tensor = [&](const SVec& c, const SVec& y) {
    std::vector<SVec::Entry> e;
    for (const auto& [a, ca] : c)
      for (const auto& [x, cx] : y) e.emplace_back(gi(a, x), ca * cx);
    return SVec::from_entries(std::move(e));
  };
  auto phi_prod = [&](std::initializer_list<std::size_t> as) -> std::optional<SVec> {
    std::optional<SVec> p;
    for (std::size_t a : as) {
      if (!p)
        p = u(a);
      else
        p = A.mul(*p, u(a));
      if (!p) return std::nullopt;
    }
    return A.phi.apply(*p);
  };

  RinehartBundle G;
  G.name = "tensor";
  G.L = Hom3Lie(N);
  G.L.labels.clear();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t x = 0; x < n; ++x) G.L.labels.push_back(A.label(a) + "*" + L.label(x));

  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      for (std::size_t k = j + 1; k < N; ++k) {
        const std::size_t a1 = i / n, x1 = i % n, a2 = j / n, x2 = j % n, a3 = k / n, x3 = k % n;
        SVec total;
        bool ok = true;
        auto add = [&](const std::optional<SVec>& coeff, const std::optional<SVec>& vec) {
          if (!ok) return;
          if (!coeff || !vec) {
            ok = false;
            return;
          }
          total.add_scaled(tensor(*coeff, *vec), 1);
        };
        auto rho_a = [&](std::size_t p, std::size_t q, std::size_t a) {
          return rho.apply(p, q, u(a));
        };
        auto prod = [&](const std::optional<SVec>& c, const std::optional<SVec>& d) -> std::optional<SVec> {
          if (!c || !d) return std::nullopt;
          return A.mul(*c, *d);
        };
        add(phi_prod({a1, a2, a3}), L.bracket.basis(x1, x2, x3));
        add(prod(phi_prod({a1, a2}), rho_a(x1, x2, a3)), L.alpha.col_opt(x3));
        add(prod(phi_prod({a2, a3}), rho_a(x2, x3, a1)), L.alpha.col_opt(x1));
        add(prod(phi_prod({a1, a3}), rho_a(x3, x1, a2)), L.alpha.col_opt(x2));
        if (!ok)
          G.L.bracket.set_undefined(i, j, k);
        else if (!total.empty())
          G.L.bracket.set(i, j, k, std::move(total));
      }

  G.L.alpha = LinMap(N, N);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t x = 0; x < n; ++x) {
      auto pa = A.phi.col_opt(a);
      auto ax = L.alpha.col_opt(x);
      if (pa && ax)
        G.L.alpha.set_col(gi(a, x), tensor(*pa, *ax));
      else
        G.L.alpha.set_undefined(gi(a, x));
    }

  G.A = A;
  G.action = ModuleAction(m, N);
  for (std::size_t b = 0; b < m; ++b) {
    LinMap act(N, N);
    for (std::size_t a = 0; a < m; ++a) {
      const auto& ba = A.product(b, a);
      for (std::size_t x = 0; x < n; ++x) {
        if (ba)
          act.set_col(gi(a, x), tensor(*ba, u(x)));
        else
          act.set_undefined(gi(a, x));
      }
    }
    G.action.set(b, std::move(act));
  }

  G.rho = PairAction(N, m);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      const std::size_t a1 = i / n, x1 = i % n, a2 = j / n, x2 = j % n;
      LinMap r(m, m);
      auto coeff = phi_prod({a1, a2});
      for (std::size_t c = 0; c < m; ++c) {
        auto v = rho.apply(x1, x2, u(c));
        std::optional<SVec> val;
        if (coeff && v) val = A.mul(*coeff, *v);
        if (val)
          r.set_col(c, std::move(*val));
        else
          r.set_undefined(c);
      }
      G.rho.set(i, j, std::move(r));
    }
  G.metadata["construction"] = "tensor";
  return G;
}

}  // namespace h3l
