#include "split_internal.hpp"

namespace h3l {

using detail::dv;
using detail::sv;
using detail::Tally;

namespace {

struct Labelled {
  std::string name;  // "0" or "r3"
  RootForm form;
  Subspace space;
};

std::vector<Labelled> with_zero(const RootForm& zero, const Subspace& zero_space,
                                const std::vector<FormSpace>& list, const char* prefix) {
  std::vector<Labelled> out{{"0", zero, zero_space}};
  for (std::size_t i = 0; i < list.size(); ++i)
    out.push_back({prefix + std::to_string(i + 1), list[i].form, list[i].space});
  return out;
}

// Tests v in target space, or v = 0 when the target form is not present.
bool lands(const std::optional<Subspace>& target, const Vec& v) {
  return target ? target->contains(v) : is_zero(v);
}

Witness make_witness(std::vector<std::string> tuple, const SVec& v, const std::vector<std::string>& labels,
                     bool target_present) {
  return {std::move(tuple), format_vec(v, labels) + (target_present ? " outside the target space"
                                                                    : " nonzero but target is not a root")};
}

Subspace image(const Subspace& S, const Matrix& M) { return S.image(M); }

}  // namespace

SuiteReport check_root_properties(const RinehartBundle& B, const RootDecomposition& dec,
                                  const WeightDecomposition& wdec, int kmax) {
  const std::size_t n = B.L.dim(), m = B.A.dim(), h = dec.h();
  const RootForm zero = RootForm::zero(h);
  const auto G = with_zero(zero, dec.H, dec.roots, "r");
  const auto W = with_zero(zero, wdec.A0, wdec.weights, "w");
  const auto& AH = dec.AH;
  SuiteReport s{"root_system", {}};
  std::vector<std::string> alabels;
  for (std::size_t i = 0; i < m; ++i) alabels.push_back(B.A.label(i));

  // 1) phi^k(A_l) = A_{l(alpha^{-k})}, 2) alpha^k(L_g) = L_{g(alpha^{-k})}.
  auto powers = [&](const char* name, const LinMap& map, const std::vector<Labelled>& list,
                    auto space_of) {
    Tally t(name);
    if (!map.total()) {
      t.r = CheckReport::blocked(name, "map leaves the window");
      return t.done();
    }
    const Matrix M = map.to_matrix();
    const bool invertible = is_invertible(M);
    for (std::size_t i = 1; i < list.size(); ++i)
      for (int k = -kmax; k <= kmax; ++k) {
        if (k < 0 && !invertible) {
          t.skip();
          continue;
        }
        const RootForm target = pullback_root(list[i].form, AH, -k);
        auto sp = space_of(target);
        const Subspace img = image(list[i].space, power(M, k));
        t.test(sp && *sp == img, [&] {
          return Witness{{list[i].name, "k=" + std::to_string(k)},
                         sp ? "image differs from the target space" : "pulled-back form not in the system"};
        });
      }
    return t.done();
  };
  s.add(powers("item1_phi_powers", B.A.phi, W, [&](const RootForm& f) {
    return f.is_zero() ? std::nullopt : wdec.space_of(f);
  }));
  s.add(powers("item2_alpha_powers", B.L.alpha, G, [&](const RootForm& f) {
    return f.is_zero() ? std::nullopt : dec.space_of(f);
  }));

  // 3) [L_g1, L_g2, L_g3] in L_{(g1+g2+g3)(alpha^{-1})}
  {
    Tally t("item3_bracket");
    for (std::size_t a = 0; a < G.size(); ++a)
      for (std::size_t b = a; b < G.size(); ++b)
        for (std::size_t c = b; c < G.size(); ++c) {
          const RootForm target = pullback_root(G[a].form + G[b].form + G[c].form, AH, -1);
          const auto sp = dec.space_of(target);
          for (const auto& x : G[a].space.basis())
            for (const auto& y : G[b].space.basis())
              for (const auto& z : G[c].space.basis()) {
                auto r = bracket(B.L.bracket, sv(x), sv(y), sv(z));
                if (!r) {
                  t.skip();
                  continue;
                }
                t.test(lands(sp, dv(*r, n)), [&] {
                  return make_witness({G[a].name, G[b].name, G[c].name}, *r, B.L.labels, sp.has_value());
                });
              }
        }
    s.add(t.done());
  }

  // 4) A_l1 A_l2 in A_{l1+l2}
  {
    Tally t("item4_product");
    for (std::size_t a = 0; a < W.size(); ++a)
      for (std::size_t b = a; b < W.size(); ++b) {
        const auto sp = wdec.space_of(W[a].form + W[b].form);
        for (const auto& x : W[a].space.basis())
          for (const auto& y : W[b].space.basis()) {
            auto r = B.A.mul(sv(x), sv(y));
            if (!r) {
              t.skip();
              continue;
            }
            t.test(lands(sp, dv(*r, m)), [&] {
              return make_witness({W[a].name, W[b].name}, *r, alabels, sp.has_value());
            });
          }
      }
    s.add(t.done());
  }

  // 5) A_l L_g in L_{l+g}
  {
    Tally t("item5_action");
    for (const auto& w : W)
      for (const auto& g : G) {
        const auto sp = dec.space_of(w.form + g.form);
        for (const auto& a : w.space.basis())
          for (const auto& x : g.space.basis()) {
            auto r = B.action.act(sv(a), sv(x));
            if (!r) {
              t.skip();
              continue;
            }
            t.test(lands(sp, dv(*r, n)), [&] {
              return make_witness({w.name, g.name}, *r, B.L.labels, sp.has_value());
            });
          }
      }
    s.add(t.done());
  }

  // 6) rho(L_g1, L_g2)(A_l) in A_{(g1+g2+l)(alpha^{-1})}
  {
    Tally t("item6_rho");
    for (std::size_t a = 0; a < G.size(); ++a)
      for (std::size_t b = a; b < G.size(); ++b)
        for (const auto& w : W) {
          const auto sp = wdec.space_of(pullback_root(G[a].form + G[b].form + w.form, AH, -1));
          for (const auto& x : G[a].space.basis())
            for (const auto& y : G[b].space.basis())
              for (const auto& c : w.space.basis()) {
                auto r = rho_apply(B.rho, sv(x), sv(y), sv(c));
                if (!r) {
                  t.skip();
                  continue;
                }
                t.test(lands(sp, dv(*r, m)), [&] {
                  return make_witness({G[a].name, G[b].name, w.name}, *r, alabels, sp.has_value());
                });
              }
        }
    s.add(t.done());
  }
  return s;
}

}  // namespace h3l
