#include "h3l/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace h3l {

// ---------------------------------------------------------------- Bracket3

Bracket3::Bracket3(std::size_t n) : n_(n), slot_(n * n * n, 0) {}

namespace {

// Sorts three distinct indices; returns the permutation sign.
int sort3(std::array<std::size_t, 3>& a) {
  int sign = 1;
  for (int pass = 0; pass < 2; ++pass)
    for (int i = 0; i < 2 - pass; ++i)
      if (a[i] > a[i + 1]) {
        std::swap(a[i], a[i + 1]);
        sign = -sign;
      }
  return sign;
}

}  // namespace

void Bracket3::store(std::size_t i, std::size_t j, std::size_t k, std::optional<SVec> v) {
  if (i >= n_ || j >= n_ || k >= n_) throw std::out_of_range("bracket index out of range");
  if (i == j || j == k || i == k)
    throw std::invalid_argument("bracket entry with a repeated index");
  if (v && v->extent() > n_) throw std::out_of_range("bracket value beyond dimension");
  std::array<std::size_t, 3> a{i, j, k};
  const int sign = sort3(a);
  if (v && sign < 0) *v = v->scaled(-1);
  std::int32_t& s0 = slot(a[0], a[1], a[2]);
  std::size_t id;
  if (s0 != 0) {
    id = static_cast<std::size_t>(s0 - 1);
    values_[id] = std::move(v);
  } else {
    id = values_.size();
    values_.push_back(std::move(v));
    keys_.push_back({static_cast<std::uint32_t>(a[0]), static_cast<std::uint32_t>(a[1]),
                     static_cast<std::uint32_t>(a[2])});
  }
  const auto code = static_cast<std::int32_t>(id + 1);
  // All six orderings, with the permutation sign relative to a.
  const std::size_t p = a[0], q = a[1], r = a[2];
  slot(p, q, r) = code;
  slot(q, r, p) = code;
  slot(r, p, q) = code;
  slot(q, p, r) = -code;
  slot(p, r, q) = -code;
  slot(r, q, p) = -code;
}

void Bracket3::set(std::size_t i, std::size_t j, std::size_t k, SVec value) {
  store(i, j, k, std::move(value));
}

void Bracket3::set_undefined(std::size_t i, std::size_t j, std::size_t k) {
  store(i, j, k, std::nullopt);
}

std::optional<SVec> Bracket3::basis(std::size_t i, std::size_t j, std::size_t k) const {
  Slot s = at(i, j, k);
  if (s.undefined) return std::nullopt;
  if (s.sign == 0) return SVec{};
  return s.sign > 0 ? *s.value : s.value->scaled(-1);
}

std::vector<Bracket3::Entry> Bracket3::entries() const {
  std::vector<Entry> out;
  for (std::size_t id = 0; id < values_.size(); ++id) {
    if (values_[id] && values_[id]->empty()) continue;
    out.push_back({keys_[id], values_[id]});
  }
  std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.idx < b.idx; });
  return out;
}

bool Bracket3::operator==(const Bracket3& o) const {
  if (n_ != o.n_) return false;
  auto a = entries();
  auto b = o.entries();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].idx != b[i].idx || a[i].value != b[i].value) return false;
  return true;
}

std::optional<SVec> bracket(const Bracket3& b, const SVec& u, const SVec& v, const SVec& w) {
  SVec r;
  for (const auto& [i, ci] : u)
    for (const auto& [j, cj] : v) {
      if (i == j) continue;
      Q cij = ci * cj;
      for (const auto& [k, ck] : w) {
        if (k == i || k == j) continue;
        auto s = b.at(i, j, k);
        if (s.undefined) return std::nullopt;
        if (s.sign == 0) continue;
        r.add_scaled(*s.value, s.sign > 0 ? Q(cij * ck) : Q(-cij * ck));
      }
    }
  return r;
}

// ---------------------------------------------------------------- Hom3Lie

Hom3Lie::Hom3Lie(std::size_t n) : bracket(n), alpha(LinMap::identity(n)) {
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
}

std::string Hom3Lie::label(std::size_t i) const {
  return i < labels.size() ? labels[i] : "e" + std::to_string(i + 1);
}

std::string format_vec(const SVec& v, const std::vector<std::string>& labels) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [i, c] : v) {
    if (!s.empty()) s += " + ";
    std::string name = i < labels.size() ? labels[i] : "e" + std::to_string(i + 1);
    s += (c == 1 ? std::string() : to_string(c) + "*") + name;
  }
  return s;
}

Vec bracket_eval(const Hom3Lie& alg, const Vec& u, const Vec& v, const Vec& w) {
  const std::size_t n = alg.dim();
  if (u.size() != n || v.size() != n || w.size() != n)
    throw std::invalid_argument("bracket_eval: vector length does not match dimension");
  auto r = bracket(alg.bracket, SVec::from_dense(u), SVec::from_dense(v), SVec::from_dense(w));
  if (!r) throw std::domain_error("bracket_eval: result leaves the truncation window");
  return r->to_dense(n);
}

LinMap ad(const Hom3Lie& alg, const SVec& x, const SVec& y) {
  const std::size_t n = alg.dim();
  LinMap m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    auto r = bracket(alg.bracket, x, y, SVec::unit(static_cast<std::uint32_t>(k)));
    if (r)
      m.set_col(k, std::move(*r));
    else
      m.set_undefined(k);
  }
  return m;
}

namespace {

SVec e(std::size_t i) { return SVec::unit(static_cast<std::uint32_t>(i)); }

std::string bind(const std::string& var, const Hom3Lie& alg, std::size_t i) {
  return var + "=" + alg.label(i);
}

std::string diff_detail(const SVec& lhs, const SVec& rhs, const std::vector<std::string>& labels) {
  return "lhs = " + format_vec(lhs, labels) + ", rhs = " + format_vec(rhs, labels);
}

// Increasing pairs / triples, listed once for index decoding.
std::vector<std::array<std::size_t, 2>> increasing_pairs(std::size_t n) {
  std::vector<std::array<std::size_t, 2>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.push_back({i, j});
  return out;
}

std::vector<std::array<std::size_t, 3>> increasing_triples(std::size_t n) {
  std::vector<std::array<std::size_t, 3>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) out.push_back({i, j, k});
  return out;
}

struct JacobiTerms {
  std::optional<SVec> lhs, rhs;
};

JacobiTerms jacobi_sides(const Bracket3& b, std::size_t x1, std::size_t x2, std::size_t x3,
                         std::size_t y2, std::size_t y3) {
  JacobiTerms t;
  auto inner = b.basis(x1, x2, x3);
  if (!inner) return t;
  auto lhs = bracket(b, *inner, e(y2), e(y3));
  if (!lhs) return t;
  SVec rhs;
  const std::size_t xs[3][3] = {{x1, x2, x3}, {x2, x3, x1}, {x3, x1, x2}};
  for (const auto& row : xs) {
    auto in = b.basis(row[0], y2, y3);
    if (!in) return t;
    auto term = bracket(b, *in, e(row[1]), e(row[2]));
    if (!term) return t;
    rhs.add_scaled(*term, 1);
  }
  t.lhs = std::move(lhs);
  t.rhs = std::move(rhs);
  return t;
}

JacobiTerms hom_jacobi_sides(const Hom3Lie& alg, const std::vector<std::optional<SVec>>& a,
                             std::size_t x1, std::size_t x2, std::size_t x3, std::size_t x4,
                             std::size_t x5) {
  JacobiTerms t;
  const Bracket3& b = alg.bracket;
  if (!a[x1] || !a[x2] || !a[x3] || !a[x4] || !a[x5]) return t;
  auto b345 = b.basis(x3, x4, x5);
  auto b123 = b.basis(x1, x2, x3);
  auto b124 = b.basis(x1, x2, x4);
  auto b125 = b.basis(x1, x2, x5);
  if (!b345 || !b123 || !b124 || !b125) return t;
  auto lhs = bracket(b, *a[x1], *a[x2], *b345);
  auto r1 = bracket(b, *b123, *a[x4], *a[x5]);
  auto r2 = bracket(b, *a[x3], *b124, *a[x5]);
  auto r3 = bracket(b, *a[x3], *a[x4], *b125);
  if (!lhs || !r1 || !r2 || !r3) return t;
  t.lhs = std::move(lhs);
  t.rhs = *r1 + *r2 + *r3;
  return t;
}

std::vector<std::optional<SVec>> alpha_images(const Hom3Lie& alg) {
  std::vector<std::optional<SVec>> a(alg.dim());
  for (std::size_t i = 0; i < alg.dim(); ++i) a[i] = alg.alpha.col_opt(i);
  return a;
}

}  // namespace

CheckReport check_jacobi(const Hom3Lie& alg) {
  const auto xs = increasing_triples(alg.dim());
  const auto ys = increasing_pairs(alg.dim());
  const std::uint64_t count = static_cast<std::uint64_t>(xs.size()) * ys.size();
  auto eval = [&](std::uint64_t idx) {
    const auto& x = xs[idx / ys.size()];
    const auto& y = ys[idx % ys.size()];
    return jacobi_sides(alg.bracket, x[0], x[1], x[2], y[0], y[1]);
  };
  auto totals = scan_indices(count, [&](std::uint64_t idx) {
    auto t = eval(idx);
    if (!t.lhs) return Outcome::Skip;
    return *t.lhs == *t.rhs ? Outcome::Pass : Outcome::Fail;
  });
  CheckReport r = report_from("jacobi", totals);
  if (totals.failed()) {
    const auto& x = xs[totals.first_fail / ys.size()];
    const auto& y = ys[totals.first_fail % ys.size()];
    auto t = eval(totals.first_fail);
    r.witness = Witness{{bind("x1", alg, x[0]), bind("x2", alg, x[1]), bind("x3", alg, x[2]),
                         bind("y2", alg, y[0]), bind("y3", alg, y[1])},
                        diff_detail(*t.lhs, *t.rhs, alg.labels)};
  }
  return r;
}

CheckReport check_hom_jacobi(const Hom3Lie& alg) {
  const auto a = alpha_images(alg);
  const auto p = increasing_pairs(alg.dim());
  const auto t3 = increasing_triples(alg.dim());
  const std::uint64_t count = static_cast<std::uint64_t>(p.size()) * t3.size();
  auto eval = [&](std::uint64_t idx) {
    const auto& x = p[idx / t3.size()];
    const auto& y = t3[idx % t3.size()];
    return hom_jacobi_sides(alg, a, x[0], x[1], y[0], y[1], y[2]);
  };
  auto totals = scan_indices(count, [&](std::uint64_t idx) {
    auto t = eval(idx);
    if (!t.lhs) return Outcome::Skip;
    return *t.lhs == *t.rhs ? Outcome::Pass : Outcome::Fail;
  });
  CheckReport r = report_from("hom_jacobi", totals);
  if (totals.failed()) {
    const auto& x = p[totals.first_fail / t3.size()];
    const auto& y = t3[totals.first_fail % t3.size()];
    auto t = eval(totals.first_fail);
    r.witness = Witness{{bind("x1", alg, x[0]), bind("x2", alg, x[1]), bind("x3", alg, y[0]),
                         bind("x4", alg, y[1]), bind("x5", alg, y[2])},
                        diff_detail(*t.lhs, *t.rhs, alg.labels)};
  }
  return r;
}

CheckReport check_multiplicative(const Hom3Lie& alg) {
  const auto a = alpha_images(alg);
  const auto t3 = increasing_triples(alg.dim());
  auto eval = [&](std::uint64_t idx) {
    JacobiTerms t;
    const auto& x = t3[idx];
    if (!a[x[0]] || !a[x[1]] || !a[x[2]]) return t;
    auto b = alg.bracket.basis(x[0], x[1], x[2]);
    if (!b) return t;
    auto lhs = alg.alpha.apply(*b);
    auto rhs = bracket(alg.bracket, *a[x[0]], *a[x[1]], *a[x[2]]);
    if (!lhs || !rhs) return t;
    t.lhs = std::move(lhs);
    t.rhs = std::move(rhs);
    return t;
  };
  auto totals = scan_indices(t3.size(), [&](std::uint64_t idx) {
    auto t = eval(idx);
    if (!t.lhs) return Outcome::Skip;
    return *t.lhs == *t.rhs ? Outcome::Pass : Outcome::Fail;
  });
  CheckReport r = report_from("multiplicative", totals);
  if (totals.failed()) {
    const auto& x = t3[totals.first_fail];
    auto t = eval(totals.first_fail);
    r.witness = Witness{{bind("x", alg, x[0]), bind("y", alg, x[1]), bind("z", alg, x[2])},
                        diff_detail(*t.lhs, *t.rhs, alg.labels)};
  }
  return r;
}

bool is_regular(const Hom3Lie& alg) {
  if (!alg.alpha.total()) return false;
  return is_invertible(alg.alpha.to_matrix()) && check_multiplicative(alg).passed();
}

Subspace center(const Hom3Lie& alg) {
  const std::size_t n = alg.dim();
  std::vector<LinMap> constraints;
  for (const auto& [j, k] : increasing_pairs(n)) {
    LinMap c(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      auto v = alg.bracket.basis(i, j, k);
      if (v)
        c.set_col(i, std::move(*v));
      else
        c.set_undefined(i);
    }
    constraints.push_back(std::move(c));
  }
  return partial_kernel(n, constraints);
}

namespace {

// Checks that every bracket of generators lands in `target` and that alpha
// preserves s. `first` ranges over s, the other two slots over `others`.
CheckReport bracket_closure(const Hom3Lie& alg, const Subspace& s,
                            const std::vector<Vec>& second, const std::vector<Vec>& third,
                            const std::string& name) {
  CheckReport r;
  r.name = name;
  const auto& gens = s.basis();
  auto fail = [&](std::vector<std::string> tuple, std::string detail) {
    ++r.violations;
    if (!r.witness) r.witness = Witness{std::move(tuple), std::move(detail)};
  };
  for (std::size_t g = 0; g < gens.size(); ++g) {
    auto ag = alg.alpha.apply(SVec::from_dense(gens[g]));
    if (!ag) {
      ++r.skipped;
    } else {
      ++r.checked;
      if (!s.contains(ag->to_dense(alg.dim())))
        fail({"alpha(s" + std::to_string(g + 1) + ")"}, "alpha image leaves the subspace");
    }
    for (std::size_t i = 0; i < second.size(); ++i)
      for (std::size_t j = 0; j < third.size(); ++j) {
        auto v = bracket(alg.bracket, SVec::from_dense(gens[g]), SVec::from_dense(second[i]),
                         SVec::from_dense(third[j]));
        if (!v) {
          ++r.skipped;
          continue;
        }
        ++r.checked;
        if (!s.contains(v->to_dense(alg.dim())))
          fail({"s" + std::to_string(g + 1), "u" + std::to_string(i + 1),
                "v" + std::to_string(j + 1)},
               "bracket = " + format_vec(*v, alg.labels) + " is outside the subspace");
      }
  }
  r.status = r.violations ? Status::Fail : Status::Pass;
  return r;
}

}  // namespace

CheckReport check_subalgebra(const Hom3Lie& alg, const Subspace& s) {
  if (s.ambient_dim() != alg.dim()) throw std::invalid_argument("subspace ambient mismatch");
  return bracket_closure(alg, s, s.basis(), s.basis(), "subalgebra");
}

CheckReport check_ideal(const Hom3Lie& alg, const Subspace& s) {
  if (s.ambient_dim() != alg.dim()) throw std::invalid_argument("subspace ambient mismatch");
  const auto full = Subspace::full(alg.dim()).basis();
  return bracket_closure(alg, s, full, full, "ideal");
}

// ---------------------------------------------------------------- reference

namespace reference {

namespace {

std::optional<Vec> dense_bracket(const Bracket3& b, const Vec& u, const Vec& v, const Vec& w) {
  const std::size_t n = b.dim();
  Vec r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(u[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_zero(v[j])) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (is_zero(w[k])) continue;
        auto val = b.basis(i, j, k);
        if (!val) return std::nullopt;
        Q c = u[i] * v[j] * w[k];
        for (const auto& [idx, x] : *val) r[idx] += c * x;
      }
    }
  }
  return r;
}

std::optional<Vec> dense_alpha(const Hom3Lie& alg, std::size_t i) {
  if (!alg.alpha.defined(i)) return std::nullopt;
  return alg.alpha.col(i).to_dense(alg.dim());
}

Vec unit(std::size_t n, std::size_t i) { return unit_vec(n, i); }

}  // namespace

CheckReport check_jacobi(const Hom3Lie& alg) {
  const std::size_t n = alg.dim();
  const auto& b = alg.bracket;
  CheckReport r;
  r.name = "jacobi";
  std::size_t x[5];
  for (std::uint64_t idx = 0, total = static_cast<std::uint64_t>(n) * n * n * n * n; idx < total;
       ++idx) {
    Radix({n, n, n, n, n}).decode(idx, x);
    auto in = dense_bracket(b, unit(n, x[0]), unit(n, x[1]), unit(n, x[2]));
    std::optional<Vec> lhs = in ? dense_bracket(b, *in, unit(n, x[3]), unit(n, x[4])) : std::nullopt;
    Vec rhs(n);
    bool ok = lhs.has_value();
    const std::size_t rows[3][3] = {{x[0], x[1], x[2]}, {x[1], x[2], x[0]}, {x[2], x[0], x[1]}};
    for (const auto& row : rows) {
      if (!ok) break;
      auto inner = dense_bracket(b, unit(n, row[0]), unit(n, x[3]), unit(n, x[4]));
      auto t = inner ? dense_bracket(b, *inner, unit(n, row[1]), unit(n, row[2])) : std::nullopt;
      if (!t) ok = false;
      else rhs = rhs + *t;
    }
    if (!ok) {
      ++r.skipped;
      continue;
    }
    ++r.checked;
    if (*lhs != rhs && r.violations++ == 0)
      r.witness = Witness{{"x1=" + alg.label(x[0]), "x2=" + alg.label(x[1]),
                           "x3=" + alg.label(x[2]), "y2=" + alg.label(x[3]),
                           "y3=" + alg.label(x[4])},
                          {}};
  }
  r.status = r.violations ? Status::Fail : Status::Pass;
  return r;
}

CheckReport check_hom_jacobi(const Hom3Lie& alg) {
  const std::size_t n = alg.dim();
  const auto& b = alg.bracket;
  CheckReport r;
  r.name = "hom_jacobi";
  std::size_t x[5];
  for (std::uint64_t idx = 0, total = static_cast<std::uint64_t>(n) * n * n * n * n; idx < total;
       ++idx) {
    Radix({n, n, n, n, n}).decode(idx, x);
    std::optional<Vec> a[5];
    bool ok = true;
    for (int i = 0; i < 5; ++i) {
      a[i] = dense_alpha(alg, x[i]);
      if (!a[i]) ok = false;
    }
    std::optional<Vec> lhs, r1, r2, r3;
    if (ok) {
      auto b345 = dense_bracket(b, unit(n, x[2]), unit(n, x[3]), unit(n, x[4]));
      auto b123 = dense_bracket(b, unit(n, x[0]), unit(n, x[1]), unit(n, x[2]));
      auto b124 = dense_bracket(b, unit(n, x[0]), unit(n, x[1]), unit(n, x[3]));
      auto b125 = dense_bracket(b, unit(n, x[0]), unit(n, x[1]), unit(n, x[4]));
      if (b345) lhs = dense_bracket(b, *a[0], *a[1], *b345);
      if (b123) r1 = dense_bracket(b, *b123, *a[3], *a[4]);
      if (b124) r2 = dense_bracket(b, *a[2], *b124, *a[4]);
      if (b125) r3 = dense_bracket(b, *a[2], *a[3], *b125);
      ok = lhs && r1 && r2 && r3;
    }
    if (!ok) {
      ++r.skipped;
      continue;
    }
    ++r.checked;
    if (*lhs != *r1 + *r2 + *r3 && r.violations++ == 0)
      r.witness = Witness{{"x1=" + alg.label(x[0]), "x2=" + alg.label(x[1]),
                           "x3=" + alg.label(x[2]), "x4=" + alg.label(x[3]),
                           "x5=" + alg.label(x[4])},
                          {}};
  }
  r.status = r.violations ? Status::Fail : Status::Pass;
  return r;
}

}  // namespace reference

}  // namespace h3l
