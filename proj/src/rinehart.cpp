#include "h3l/rinehart.hpp"

#include <stdexcept>

namespace h3l {

// ---------------------------------------------------------------- CommAlgebra

CommAlgebra::CommAlgebra(std::size_t dim)
    : phi(LinMap::identity(dim)), m_(dim), mult_(dim * dim, SVec{}) {
  for (std::size_t i = 0; i < dim; ++i) labels.push_back("a" + std::to_string(i + 1));
}

CommAlgebra CommAlgebra::scalars() {
  CommAlgebra a(1);
  a.set_product(0, 0, SVec::unit(0));
  a.unit = SVec::unit(0);
  a.labels = {"1"};
  return a;
}

void CommAlgebra::set_product(std::size_t i, std::size_t j, SVec value) {
  if (i >= m_ || j >= m_) throw std::out_of_range("product index out of range");
  if (value.extent() > m_) throw std::out_of_range("product value beyond dimension");
  mult_[i * m_ + j] = value;
  mult_[j * m_ + i] = std::move(value);
}

void CommAlgebra::set_undefined(std::size_t i, std::size_t j) {
  mult_.at(i * m_ + j).reset();
  mult_.at(j * m_ + i).reset();
}

std::optional<SVec> CommAlgebra::mul(const SVec& a, const SVec& b) const {
  SVec r;
  for (const auto& [i, ci] : a)
    for (const auto& [j, cj] : b) {
      const auto& p = mult_[i * m_ + j];
      if (!p) return std::nullopt;
      r.add_scaled(*p, ci * cj);
    }
  return r;
}

std::string CommAlgebra::label(std::size_t i) const {
  return i < labels.size() ? labels[i] : "a" + std::to_string(i + 1);
}

// ---------------------------------------------------------------- ModuleAction

ModuleAction::ModuleAction(std::size_t a_dim, std::size_t l_dim)
    : n_(l_dim), maps_(a_dim, LinMap(l_dim, l_dim)) {}

ModuleAction ModuleAction::scalar(std::size_t l_dim) {
  ModuleAction m(1, l_dim);
  m.maps_[0] = LinMap::identity(l_dim);
  return m;
}

void ModuleAction::set(std::size_t a, LinMap m) {
  if (m.in_dim() != n_ || m.out_dim() != n_) throw std::invalid_argument("action matrix shape");
  maps_.at(a) = std::move(m);
}

std::optional<SVec> ModuleAction::act(const SVec& a, const SVec& x) const {
  SVec r;
  for (const auto& [i, c] : a) {
    auto v = maps_.at(i).apply(x);
    if (!v) return std::nullopt;
    r.add_scaled(*v, c);
  }
  return r;
}

void RinehartBundle::validate_shapes() const {
  const std::size_t n = L.dim(), m = A.dim();
  if (L.alpha.in_dim() != n || L.alpha.out_dim() != n)
    throw std::invalid_argument("alpha is not " + std::to_string(n) + "x" + std::to_string(n));
  if (A.phi.in_dim() != m || A.phi.out_dim() != m)
    throw std::invalid_argument("phi is not " + std::to_string(m) + "x" + std::to_string(m));
  if (action.a_dim() != m || action.l_dim() != n)
    throw std::invalid_argument("action must have one " + std::to_string(n) + "x" +
                                std::to_string(n) + " matrix per basis element of A");
  if (rho.source_dim() != n || rho.target_dim() != m)
    throw std::invalid_argument("rho must map pairs of L into " + std::to_string(m) + "x" +
                                std::to_string(m) + " matrices");
  if (A.unit && A.unit->extent() > m) throw std::invalid_argument("unit vector beyond dim A");
  if (H)
    for (const auto& h : *H)
      if (h.size() != n) throw std::invalid_argument("H vector of the wrong length");
}

// ---------------------------------------------------------------- helpers

namespace {

SVec u(std::size_t i) { return SVec::unit(static_cast<std::uint32_t>(i)); }

std::optional<SVec> sum(std::initializer_list<std::optional<SVec>> terms) {
  SVec s;
  for (const auto& t : terms) {
    if (!t) return std::nullopt;
    s.add_scaled(*t, 1);
  }
  return s;
}

std::optional<SVec> mul(const CommAlgebra& A, const std::optional<SVec>& a,
                        const std::optional<SVec>& b) {
  if (!a || !b) return std::nullopt;
  return A.mul(*a, *b);
}

std::optional<SVec> apply_opt(const LinMap& f, const std::optional<SVec>& v) {
  if (!v) return std::nullopt;
  return f.apply(*v);
}

std::optional<SVec> act(const ModuleAction& M, const std::optional<SVec>& a,
                        const std::optional<SVec>& x) {
  if (!a || !x) return std::nullopt;
  return M.act(*a, *x);
}

TupleNames names(std::vector<std::pair<std::string, const std::vector<std::string>*>> slots) {
  return [slots = std::move(slots)](const std::size_t* t) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      const auto& labs = *slots[i].second;
      out.push_back(slots[i].first + "=" +
                    (t[i] < labs.size() ? labs[t[i]] : std::to_string(t[i] + 1)));
    }
    return out;
  };
}

std::vector<std::string> ensure_labels(const std::vector<std::string>& l, std::size_t n,
                                       const char* prefix) {
  if (l.size() == n) return l;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

}  // namespace

// ---------------------------------------------------------------- checks

SuiteReport check_phi_derivation(const CommAlgebra& A, const LinMap& D) {
  const std::size_t m = A.dim();
  if (D.in_dim() != m || D.out_dim() != m) throw std::invalid_argument("derivation shape");
  const auto al = ensure_labels(A.labels, m, "a");
  SuiteReport s{"phi_derivation", {}};
  auto phi = [&](std::size_t i) { return A.phi.col_opt(i); };
  auto d = [&](std::size_t i) { return D.col_opt(i); };

  TupleSpace p;
  p.increasing(m, 1).any(m);
  s.add(run_check(
      "hd1", p,
      [&](const std::size_t* t) {
        const std::size_t a = t[0], b = t[1];
        Sides r;
        r.lhs = apply_opt(D, A.product(a, b));
        r.rhs = sum({mul(A, phi(a), d(b)), mul(A, d(a), phi(b))});
        return r;
      },
      names({{"a", &al}, {"b", &al}}), al));

  TupleSpace q;
  q.any(m, 3);
  s.add(run_check(
      "hd2", q,
      [&](const std::size_t* t) {
        const std::size_t a = t[0], b = t[1], c = t[2];
        Sides r;
        r.lhs = apply_opt(D, mul(A, A.product(a, b), u(c)));
        r.rhs = sum({mul(A, apply_opt(A.phi, A.product(a, b)), d(c)),
                     mul(A, apply_opt(A.phi, A.product(b, c)), d(a)),
                     mul(A, apply_opt(A.phi, A.product(a, c)), d(b))});
        return r;
      },
      names({{"a", &al}, {"b", &al}, {"c", &al}}), al));
  return s;
}

SuiteReport check_coefficients(const CommAlgebra& A) {
  const std::size_t m = A.dim();
  const auto al = ensure_labels(A.labels, m, "a");
  SuiteReport s{"coefficients", {}};
  TupleSpace p;
  p.any(m, 2);
  s.add(run_check(
      "phi_multiplicative", p,
      [&](const std::size_t* t) {
        Sides r;
        r.lhs = apply_opt(A.phi, A.product(t[0], t[1]));
        r.rhs = mul(A, A.phi.col_opt(t[0]), A.phi.col_opt(t[1]));
        return r;
      },
      names({{"a", &al}, {"b", &al}}), al));
  TupleSpace q;
  q.any(m, 3);
  s.add(run_check(
      "associative", q,
      [&](const std::size_t* t) {
        Sides r;
        r.lhs = mul(A, A.product(t[0], t[1]), u(t[2]));
        r.rhs = mul(A, u(t[0]), A.product(t[1], t[2]));
        return r;
      },
      names({{"a", &al}, {"b", &al}, {"c", &al}}), al));
  if (A.unit) {
    TupleSpace one;
    one.any(m);
    s.add(run_check(
        "unit", one,
        [&](const std::size_t* t) {
          Sides r;
          r.lhs = A.mul(*A.unit, u(t[0]));
          r.rhs = u(t[0]);
          return r;
        },
        names({{"a", &al}}), al));
  }
  return s;
}

SuiteReport check_weak_rinehart(const RinehartBundle& B) {
  B.validate_shapes();
  const std::size_t n = B.L.dim(), m = B.A.dim();
  const auto ll = ensure_labels(B.L.labels, n, "e");
  const auto al = ensure_labels(B.A.labels, m, "a");
  SuiteReport s{"weak_rinehart", {}};
  s.append(check_coefficients(B.A));
  s.add(check_multiplicative(B.L));
  s.add(check_hom_jacobi(B.L));

  // rho(e_i, e_j) is a phi-derivation of A.
  TupleSpace der;
  der.increasing(n, 2).increasing(m, 1).any(m);
  s.add(run_check(
      "rho_phi_derivation", der,
      [&](const std::size_t* t) {
        const std::size_t i = t[0], j = t[1], a = t[2], b = t[3];
        auto D = [&](const std::optional<SVec>& v) -> std::optional<SVec> {
          if (!v) return std::nullopt;
          return B.rho.apply(i, j, *v);
        };
        Sides r;
        r.lhs = D(B.A.product(a, b));
        r.rhs = sum({mul(B.A, B.A.phi.col_opt(a), D(u(b))), mul(B.A, D(u(a)), B.A.phi.col_opt(b))});
        return r;
      },
      names({{"x", &ll}, {"y", &ll}, {"a", &al}, {"b", &al}}), al));

  const HomRepresentation rep = B.representation();
  s.add(check_hr1(B.L, rep));
  s.add(check_hr2(B.L, rep));
  s.add(check_hr3(B.L, rep));

  TupleSpace ax;
  ax.any(m).any(n);
  s.add(run_check(
      "alpha_a_linear", ax,
      [&](const std::size_t* t) {
        const std::size_t a = t[0], x = t[1];
        Sides r;
        r.lhs = apply_opt(B.L.alpha, B.action.apply(a, u(x)));
        r.rhs = act(B.action, B.A.phi.col_opt(a), B.L.alpha.col_opt(x));
        return r;
      },
      names({{"a", &al}, {"x", &ll}}), ll));

  TupleSpace lb;
  lb.increasing(n, 2).any(m).any(n);
  s.add(run_check(
      "bracket_a_linear", lb,
      [&](const std::size_t* t) {
        const std::size_t x = t[0], y = t[1], a = t[2], z = t[3];
        Sides r;
        auto az = B.action.apply(a, u(z));
        if (az) r.lhs = bracket(B.L.bracket, u(x), u(y), *az);
        auto bxyz = B.L.bracket.basis(x, y, z);
        r.rhs = sum({act(B.action, B.A.phi.col_opt(a), bxyz),
                     act(B.action, B.rho.apply(x, y, u(a)), B.L.alpha.col_opt(z))});
        return r;
      },
      names({{"x", &ll}, {"y", &ll}, {"a", &al}, {"z", &ll}}), ll));

  TupleSpace ma;
  ma.increasing(m, 1).any(m).any(n);
  s.add(run_check(
      "module_associative", ma,
      [&](const std::size_t* t) {
        const std::size_t a = t[0], b = t[1], x = t[2];
        Sides r;
        r.lhs = act(B.action, B.A.product(a, b), u(x));
        r.rhs = act(B.action, u(a), B.action.apply(b, u(x)));
        return r;
      },
      names({{"a", &al}, {"b", &al}, {"x", &ll}}), ll));

  if (B.A.unit) {
    TupleSpace ux;
    ux.any(n);
    s.add(run_check(
        "module_unit", ux,
        [&](const std::size_t* t) {
          Sides r;
          r.lhs = B.action.act(*B.A.unit, u(t[0]));
          r.rhs = u(t[0]);
          return r;
        },
        names({{"x", &ll}}), ll));
  }
  return s;
}

SuiteReport check_a_linearity(const RinehartBundle& B) {
  B.validate_shapes();
  const std::size_t n = B.L.dim(), m = B.A.dim();
  const auto ll = ensure_labels(B.L.labels, n, "e");
  const auto al = ensure_labels(B.A.labels, m, "a");
  SuiteReport s{"a_linearity", {}};
  TupleSpace space;
  space.any(m).any(n).any(n).any(m);
  auto tuple_names = names({{"a", &al}, {"x", &ll}, {"y", &ll}, {"c", &al}});
  auto rhs = [&](std::size_t a, std::size_t x, std::size_t y, std::size_t c) {
    return mul(B.A, B.A.phi.col_opt(a), B.rho.apply(x, y, u(c)));
  };
  s.add(run_check(
      "rho_a_linear_left", space,
      [&](const std::size_t* t) {
        const std::size_t a = t[0], x = t[1], y = t[2], c = t[3];
        Sides r;
        auto ax = B.action.apply(a, u(x));
        if (ax) r.lhs = rho_apply(B.rho, *ax, u(y), u(c));
        r.rhs = rhs(a, x, y, c);
        return r;
      },
      tuple_names, al));
  s.add(run_check(
      "rho_a_linear_right", space,
      [&](const std::size_t* t) {
        const std::size_t a = t[0], x = t[1], y = t[2], c = t[3];
        Sides r;
        auto ay = B.action.apply(a, u(y));
        if (ay) r.lhs = rho_apply(B.rho, u(x), *ay, u(c));
        r.rhs = rhs(a, x, y, c);
        return r;
      },
      tuple_names, al));
  return s;
}

SuiteReport check_full_rinehart(const RinehartBundle& B) {
  SuiteReport s = check_weak_rinehart(B);
  s.name = "rinehart";
  if (!s.passed()) {
    s.add(CheckReport::blocked("rho_a_linear_left", "weak axioms fail"));
    s.add(CheckReport::blocked("rho_a_linear_right", "weak axioms fail"));
    return s;
  }
  s.append(check_a_linearity(B));
  return s;
}

}  // namespace h3l
