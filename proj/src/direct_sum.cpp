#include "split_internal.hpp"

namespace h3l {

using detail::dv;
using detail::sv;

namespace {

SVec shift(const SVec& v, std::size_t off) {
  std::vector<SVec::Entry> e;
  for (const auto& [i, c] : v) e.emplace_back(static_cast<std::uint32_t>(i + off), c);
  return SVec::from_entries(std::move(e));
}

std::optional<SVec> shift(const std::optional<SVec>& v, std::size_t off) {
  if (!v) return std::nullopt;
  return shift(*v, off);
}

Vec embed(const Vec& v, std::size_t off, std::size_t total) {
  Vec out = zero_vec(total);
  for (std::size_t i = 0; i < v.size(); ++i) out[off + i] = v[i];
  return out;
}

Subspace embed(const Subspace& S, std::size_t off, std::size_t total) {
  std::vector<Vec> b;
  for (const auto& v : S.basis()) b.push_back(embed(v, off, total));
  return Subspace::span(total, b);
}

// Writes the columns of m into M at (off, off).
void place(LinMap& M, const LinMap& m, std::size_t off) {
  for (std::size_t j = 0; j < m.in_dim(); ++j) {
    if (m.defined(j))
      M.set_col(off + j, shift(m.col(j), off));
    else
      M.set_undefined(off + j);
  }
}

LinMap restrict_map(const LinMap& m, std::size_t off, std::size_t len) {
  LinMap r(len, len);
  for (std::size_t j = 0; j < len; ++j) {
    const auto& c = m.col_opt(off + j);
    if (!c) {
      r.set_undefined(j);
      continue;
    }
    std::vector<SVec::Entry> e;
    for (const auto& [i, v] : *c) {
      if (i < off || i >= off + len) throw std::invalid_argument("block is not invariant");
      e.emplace_back(static_cast<std::uint32_t>(i - off), v);
    }
    r.set_col(j, SVec::from_entries(std::move(e)));
  }
  return r;
}

RootForm extend(const RootForm& f, std::size_t off, std::size_t total) {
  RootForm g = RootForm::zero(total);
  for (std::size_t i = 0; i < f.dim(); ++i)
    for (std::size_t j = 0; j < f.dim(); ++j) g.matrix(off + i, off + j) = f.matrix(i, j);
  return g;
}

Subspace cartan_of(const RinehartBundle& B) {
  if (B.H) return Subspace::span(B.L.dim(), *B.H);
  return auto_cartan(B.L);
}

bool shares_algebra(const RinehartBundle& B1, const RinehartBundle& B2) {
  return B1.A == B2.A && B1.rho.is_zero() && B2.rho.is_zero();
}

// The bundle structure on the block [off, off + len) of L.
RinehartBundle restrict_block(const RinehartBundle& B, std::size_t off, std::size_t len) {
  RinehartBundle R;
  R.name = B.name + "-block";
  R.L = Hom3Lie(len);
  for (std::size_t i = 0; i < len; ++i) R.L.labels[i] = B.L.label(off + i);
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 1; j < len; ++j)
      for (std::size_t k = j + 1; k < len; ++k) {
        auto v = B.L.bracket.basis(off + i, off + j, off + k);
        if (!v) {
          R.L.bracket.set_undefined(i, j, k);
          continue;
        }
        std::vector<SVec::Entry> e;
        for (const auto& [t, c] : *v) {
          if (t < off || t >= off + len) throw std::invalid_argument("block is not an ideal");
          e.emplace_back(static_cast<std::uint32_t>(t - off), c);
        }
        if (!e.empty()) R.L.bracket.set(i, j, k, SVec::from_entries(std::move(e)));
      }
  R.L.alpha = restrict_map(B.L.alpha, off, len);
  R.A = B.A;
  R.action = ModuleAction(B.A.dim(), len);
  for (std::size_t a = 0; a < B.A.dim(); ++a) R.action.set(a, restrict_map(B.action.of(a), off, len));
  R.rho = PairAction(len, B.A.dim());
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 1; j < len; ++j) R.rho.set(i, j, B.rho.stored(off + i, off + j));
  return R;
}

}  // namespace

RinehartBundle direct_sum_bundle(const RinehartBundle& B1, const RinehartBundle& B2) {
  B1.validate_shapes();
  B2.validate_shapes();
  const std::size_t n1 = B1.L.dim(), n2 = B2.L.dim(), n = n1 + n2;
  const bool shared = shares_algebra(B1, B2);
  const std::size_t m1 = B1.A.dim(), m2 = B2.A.dim();
  const std::size_t m = shared ? m1 : m1 + m2;
  const std::size_t aoff2 = shared ? 0 : m1;

  RinehartBundle B;
  B.name = (B1.name.empty() ? "B1" : B1.name) + "+" + (B2.name.empty() ? "B2" : B2.name);
  B.L = Hom3Lie(n);
  B.L.labels.clear();
  for (std::size_t i = 0; i < n1; ++i) B.L.labels.push_back(B1.L.label(i) + "'1");
  for (std::size_t i = 0; i < n2; ++i) B.L.labels.push_back(B2.L.label(i) + "'2");
  for (const auto& [blk, off] : {std::pair{&B1, std::size_t{0}}, std::pair{&B2, n1}})
    for (const auto& e : blk->L.bracket.entries()) {
      if (e.value)
        B.L.bracket.set(e.idx[0] + off, e.idx[1] + off, e.idx[2] + off, shift(*e.value, off));
      else
        B.L.bracket.set_undefined(e.idx[0] + off, e.idx[1] + off, e.idx[2] + off);
    }
  B.L.alpha = LinMap(n, n);
  place(B.L.alpha, B1.L.alpha, 0);
  place(B.L.alpha, B2.L.alpha, n1);

  if (shared) {
    B.A = B1.A;
    B.action = ModuleAction(m, n);
    for (std::size_t a = 0; a < m; ++a) {
      LinMap act(n, n);
      place(act, B1.action.of(a), 0);
      place(act, B2.action.of(a), n1);
      B.action.set(a, std::move(act));
    }
  } else {
    B.A = CommAlgebra(m);
    B.A.labels.clear();
    for (std::size_t i = 0; i < m1; ++i) B.A.labels.push_back(B1.A.label(i) + "'1");
    for (std::size_t i = 0; i < m2; ++i) B.A.labels.push_back(B2.A.label(i) + "'2");
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j) {
        if ((i < m1) != (j < m1)) continue;
        const std::size_t off = i < m1 ? 0 : m1;
        auto p = shift((i < m1 ? B1.A : B2.A).product(i - off, j - off), off);
        if (p)
          B.A.set_product(i, j, std::move(*p));
        else
          B.A.set_undefined(i, j);
      }
    B.A.phi = LinMap(m, m);
    place(B.A.phi, B1.A.phi, 0);
    place(B.A.phi, B2.A.phi, m1);
    if (B1.A.unit && B2.A.unit) B.A.unit = *B1.A.unit + shift(*B2.A.unit, m1);
    B.action = ModuleAction(m, n);
    for (std::size_t a = 0; a < m1; ++a) {
      LinMap act(n, n);
      place(act, B1.action.of(a), 0);
      B.action.set(a, std::move(act));
    }
    for (std::size_t a = 0; a < m2; ++a) {
      LinMap act(n, n);
      place(act, B2.action.of(a), n1);
      B.action.set(m1 + a, std::move(act));
    }
  }

  B.rho = PairAction(n, m);
  for (const auto& [blk, off] : {std::pair{&B1, std::size_t{0}}, std::pair{&B2, n1}}) {
    const std::size_t aoff = blk == &B1 ? 0 : aoff2;
    const std::size_t len = blk->L.dim();
    for (std::size_t i = 0; i < len; ++i)
      for (std::size_t j = i + 1; j < len; ++j) {
        LinMap r(m, m);
        place(r, blk->rho.stored(i, j), aoff);
        B.rho.set(off + i, off + j, std::move(r));
      }
  }

  if (B1.H && B2.H) {
    std::vector<Vec> hs;
    for (const auto& h : *B1.H) hs.push_back(embed(h, 0, n));
    for (const auto& h : *B2.H) hs.push_back(embed(h, n1, n));
    B.H = std::move(hs);
  }
  B.metadata["construction"] = "direct_sum";
  return B;
}

SuiteReport direct_sum_vs_split(const RinehartBundle& B1, const RinehartBundle& B2) {
  SuiteReport s{"direct_sum_vs_split", {}};
  const std::size_t n1 = B1.L.dim(), n2 = B2.L.dim(), n = n1 + n2;
  const Subspace H1 = cartan_of(B1), H2 = cartan_of(B2);
  const RootDecomposition d1 = root_decompose(B1.L, H1), d2 = root_decompose(B2.L, H2);
  const WeightDecomposition w1 = weight_decompose(B1, d1), w2 = weight_decompose(B2, d2);
  const std::size_t h1 = d1.h(), h = h1 + d2.h();

  RinehartBundle B1h = B1, B2h = B2;
  B1h.H = H1.basis();
  B2h.H = H2.basis();
  const RinehartBundle B = direct_sum_bundle(B1h, B2h);
  const bool shared = shares_algebra(B1, B2);
  const Subspace H = Subspace::span(n, *B.H);
  const RootDecomposition d = root_decompose(B.L, H);
  const WeightDecomposition w = weight_decompose(B, d);

  // Gamma = Gamma_1 + Gamma_2 after zero extension, with matching spaces.
  std::vector<FormSpace> expected;
  for (const auto& r : d1.roots) expected.push_back({extend(r.form, 0, h), embed(r.space, 0, n)});
  for (const auto& r : d2.roots) expected.push_back({extend(r.form, h1, h), embed(r.space, n1, n)});
  bool same = expected.size() == d.roots.size();
  for (const auto& e : expected) {
    auto sp = d.space_of(e.form);
    same = same && sp && *sp == e.space;
  }
  s.add(CheckReport::verdict("roots_union", same,
                             same ? "" : "roots of the sum differ from the extended summand roots"));

  const std::size_t m = B.A.dim();
  std::vector<FormSpace> wexp;
  if (!shared) {
    for (const auto& x : w1.weights) wexp.push_back({extend(x.form, 0, h), embed(x.space, 0, m)});
    for (const auto& x : w2.weights)
      wexp.push_back({extend(x.form, h1, h), embed(x.space, B1.A.dim(), m)});
  }
  bool wsame = wexp.size() == w.weights.size();
  for (const auto& e : wexp) {
    auto sp = w.space_of(e.form);
    wsame = wsame && sp && *sp == e.space;
  }
  s.add(CheckReport::verdict("weights_union", wsame));

  // Converse direction: split along the blocks and decompose each summand.
  for (std::size_t j = 0; j < 2; ++j) {
    const std::size_t off = j == 0 ? 0 : n1, len = j == 0 ? n1 : n2;
    std::vector<Vec> gb;
    for (std::size_t i = 0; i < len; ++i) gb.push_back(unit_vec(n, off + i));
    const Subspace G = Subspace::span(n, gb);
    IdealSplit sp = split_ideal(B, d, G);
    const std::string tag = "G" + std::to_string(j + 1) + "_";
    for (auto c : sp.report.checks) {
      c.name = tag + c.name;
      s.add(std::move(c));
    }
    const RootDecomposition& dj = j == 0 ? d1 : d2;
    bool ok = true;
    std::string why;
    try {
      const RinehartBundle R = restrict_block(B, off, len);
      std::vector<Vec> hb;
      for (const auto& v : sp.in_H.basis()) hb.push_back(Vec(v.begin() + off, v.begin() + off + len));
      const RootDecomposition dr = root_decompose(R.L, Subspace::span(len, hb));
      ok = dr.roots.size() == dj.roots.size();
      for (std::size_t r = 0; ok && r < dr.roots.size(); ++r)
        ok = dr.roots[r].form == dj.roots[r].form && dr.roots[r].space == dj.roots[r].space;
      if (!ok) why = "restricted decomposition differs from the summand's";
    } catch (const std::exception& e) {
      ok = false;
      why = e.what();
    }
    s.add(CheckReport::verdict(tag + "summand_split", ok, why));
  }
  return s;
}

}  // namespace h3l
