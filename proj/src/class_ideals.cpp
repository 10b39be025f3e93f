#include "split_internal.hpp"

namespace h3l {

using detail::dv;
using detail::sv;
using detail::Tally;

namespace {

// Span of A_{-xi} L_xi over xi with -xi a weight, plus zero-sum brackets,
// for the given root indices. Generators leaving the window are counted.
Subspace generated_zero_part(const RinehartBundle& B, const RootDecomposition& dec,
                             const WeightDecomposition& wdec, const std::vector<std::size_t>& members,
                             std::uint64_t& skipped) {
  const std::size_t n = B.L.dim();
  std::vector<Vec> gens;
  for (std::size_t xi : members) {
    const auto& root = dec.roots[xi];
    auto Aneg = wdec.space_of(-root.form);
    if (!Aneg || (-root.form).is_zero()) continue;
    for (const auto& a : Aneg->basis())
      for (const auto& x : root.space.basis()) {
        auto r = B.action.act(sv(a), sv(x));
        if (!r) {
          ++skipped;
          continue;
        }
        gens.push_back(dv(*r, n));
      }
  }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i; j < members.size(); ++j)
      for (std::size_t k = j; k < members.size(); ++k) {
        const auto& a = dec.roots[members[i]];
        const auto& b = dec.roots[members[j]];
        const auto& c = dec.roots[members[k]];
        if (!(a.form + b.form + c.form).is_zero()) continue;
        for (const auto& x : a.space.basis())
          for (const auto& y : b.space.basis())
            for (const auto& z : c.space.basis()) {
              auto r = bracket(B.L.bracket, sv(x), sv(y), sv(z));
              if (!r) {
                ++skipped;
                continue;
              }
              gens.push_back(dv(*r, n));
            }
      }
  return Subspace::span(n, gens);
}

std::vector<std::size_t> all_indices(std::size_t r) {
  std::vector<std::size_t> v(r);
  for (std::size_t i = 0; i < r; ++i) v[i] = i;
  return v;
}

std::string ideal_name(std::size_t c) { return "I" + std::to_string(c + 1); }

}  // namespace

ClassIdeal class_ideal(const RinehartBundle& B, const RootDecomposition& dec,
                       const WeightDecomposition& wdec, const std::vector<std::size_t>& members) {
  const std::size_t n = B.L.dim();
  ClassIdeal ci;
  ci.members = members;
  ci.L0 = generated_zero_part(B, dec, wdec, members, ci.skipped);
  std::vector<Subspace> parts;
  for (std::size_t i : members) parts.push_back(dec.roots[i].space);
  ci.Lclass = sum_of(n, parts);
  ci.I = ci.L0 + ci.Lclass;
  ci.l0_in_H = dec.H.contains(ci.L0);
  ci.l0_meets_trivially = ci.L0.intersect(ci.Lclass).is_zero();
  return ci;
}

SuiteReport check_class_ideal_laws(const RinehartBundle& B, const std::vector<ClassIdeal>& ideals) {
  const std::size_t n = B.L.dim(), m = B.A.dim();
  SuiteReport s{"class_ideals", {}};
  for (std::size_t c = 0; c < ideals.size(); ++c) {
    const auto& I = ideals[c].I;
    const auto& b = I.basis();
    const std::string nm = ideal_name(c);

    Tally br(nm + "_bracket_closed");
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j)
        for (std::size_t k = j + 1; k < b.size(); ++k) {
          auto r = bracket(B.L.bracket, sv(b[i]), sv(b[j]), sv(b[k]));
          if (!r) {
            br.skip();
            continue;
          }
          br.test(I.contains(dv(*r, n)), [&] {
            return Witness{{"g" + std::to_string(i + 1), "g" + std::to_string(j + 1),
                            "g" + std::to_string(k + 1)},
                           format_vec(*r, B.L.labels) + " outside " + nm};
          });
        }
    s.add(br.done());

    Tally al(nm + "_alpha_closed");
    for (std::size_t i = 0; i < b.size(); ++i) {
      auto r = B.L.alpha.apply(sv(b[i]));
      if (!r) {
        al.skip();
        continue;
      }
      al.test(I.contains(dv(*r, n)), [&] {
        return Witness{{"g" + std::to_string(i + 1)}, format_vec(*r, B.L.labels) + " outside " + nm};
      });
    }
    s.add(al.done());

    Tally ac(nm + "_A_closed");
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t i = 0; i < b.size(); ++i) {
        auto r = B.action.apply(a, sv(b[i]));
        if (!r) {
          ac.skip();
          continue;
        }
        ac.test(I.contains(dv(*r, n)), [&] {
          return Witness{{B.A.label(a), "g" + std::to_string(i + 1)},
                         format_vec(*r, B.L.labels) + " outside " + nm};
        });
      }
    s.add(ac.done());

    CheckReport id = rinehart_ideal_check(B, I);
    id.name = nm + "_ideal";
    s.add(std::move(id));

    s.add(CheckReport::verdict(nm + "_L0_in_H", ideals[c].l0_in_H));
    s.add(CheckReport::verdict(nm + "_L0_meets_trivially", ideals[c].l0_meets_trivially));
  }

  // [I_c, I_d, I_e] = 0 whenever the classes are not all equal.
  Tally orth("orthogonality");
  const std::size_t r = ideals.size();
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t d = c; d < r; ++d)
      for (std::size_t e = d; e < r; ++e) {
        if (c == d && d == e) continue;
        for (const auto& x : ideals[c].I.basis())
          for (const auto& y : ideals[d].I.basis())
            for (const auto& z : ideals[e].I.basis()) {
              auto v = bracket(B.L.bracket, sv(x), sv(y), sv(z));
              if (!v) {
                orth.skip();
                continue;
              }
              orth.test(v->empty(), [&] {
                return Witness{{ideal_name(c), ideal_name(d), ideal_name(e)},
                               "bracket " + format_vec(*v, B.L.labels) + " is nonzero"};
              });
            }
      }
  s.add(orth.done());
  return s;
}

DirectSumResult direct_sum_decompose(const RinehartBundle& B, const RootDecomposition& dec,
                                     const WeightDecomposition& wdec,
                                     const std::vector<ClassIdeal>& ideals) {
  const std::size_t n = B.L.dim();
  DirectSumResult res;
  res.report.name = "direct_sum";

  Centers z = centers(B);
  res.z_rho_zero = z.z_rho_l.is_zero();
  res.report.add(CheckReport::verdict("hyp_z_rho_zero", res.z_rho_zero,
                                      res.z_rho_zero ? "" : "Z_rho(L) has dimension " +
                                                                std::to_string(z.z_rho_l.dim())));

  std::uint64_t skipped = 0;
  const Subspace gen = generated_zero_part(B, dec, wdec, all_indices(dec.roots.size()), skipped);
  res.h_generated = gen.contains(dec.H);
  std::string note;
  if (!res.h_generated) {
    for (const auto& h : dec.H.basis())
      if (!gen.contains(h)) {
        res.gap = h;
        break;
      }
    note = "gap " + format_vec(sv(*res.gap), B.L.labels) + " not generated";
  }
  CheckReport hg = CheckReport::verdict("hyp_H_generated", res.h_generated, note);
  hg.skipped = skipped;
  res.report.add(std::move(hg));

  if (!res.z_rho_zero || !res.h_generated) {
    res.report.add(CheckReport::blocked("direct_sum", "hypotheses do not hold"));
    return res;
  }
  std::vector<Subspace> parts;
  for (const auto& ci : ideals) parts.push_back(ci.I);
  const bool direct = is_direct_sum(parts);
  const bool full = sum_of(n, parts) == Subspace::full(n);
  res.asserted = direct && full;
  res.report.add(CheckReport::verdict("direct_sum", res.asserted,
                                      !direct ? "sum of class ideals is not direct"
                                      : !full ? "class ideals do not exhaust L"
                                              : ""));
  if (ideals.size() == 1)
    res.report.add(CheckReport::verdict("single_class", true, "Gamma is one class"));
  return res;
}

IdealSplit split_ideal(const RinehartBundle& B, const RootDecomposition& dec, const Subspace& I) {
  const std::size_t n = B.L.dim();
  IdealSplit out;
  out.report.name = "split_ideal";

  CheckReport id = check_ideal(B.L, I);
  id.name = "is_ideal";
  out.report.add(std::move(id));

  std::vector<Vec> img;
  bool defined = true;
  for (const auto& v : I.basis()) {
    auto a = B.L.alpha.apply(sv(v));
    if (!a) {
      defined = false;
      break;
    }
    img.push_back(dv(*a, n));
  }
  out.report.add(CheckReport::verdict("alpha_stable", defined && Subspace::span(n, img) == I));

  out.in_H = I.intersect(dec.H);
  std::vector<Subspace> parts{out.in_H};
  for (const auto& r : dec.roots) {
    out.components.push_back(I.intersect(r.space));
    parts.push_back(out.components.back());
  }
  out.report.add(CheckReport::verdict("components_sum_to_I", sum_of(n, parts) == I));

  if (dec.H.contains(I)) {
    const bool central = center(B.L).contains(I);
    out.report.add(CheckReport::verdict("inside_H_is_central", central,
                                        central ? "" : "ideal inside H is not central"));
  }
  return out;
}

WeightClassResult weight_class_decompose(const RinehartBundle& B, const WeightDecomposition& wdec,
                                         const RootDecomposition& dec) {
  const std::size_t m = B.A.dim();
  WeightClassResult out;
  out.report.name = "weight_classes";
  const auto gamma = dec.forms();
  const auto lambda = wdec.forms();
  out.partition = weight_classes(gamma, lambda, dec.AH);
  out.report.add(CheckReport::verdict("equivalence", out.partition.equivalence_ok));

  std::uint64_t skipped = 0;
  // A_{0,[l]} generators for the given weight indices.
  auto zero_part = [&](const std::vector<std::size_t>& members) {
    std::vector<Vec> gens;
    for (std::size_t bi : members) {
      const auto& beta = wdec.weights[bi];
      if (auto neg = wdec.space_of(-beta.form); neg && !beta.form.is_zero())
        for (const auto& a : neg->basis())
          for (const auto& c : beta.space.basis()) {
            auto r = B.A.mul(sv(a), sv(c));
            if (!r) {
              ++skipped;
              continue;
            }
            gens.push_back(dv(*r, m));
          }
      for (const auto& xi : dec.roots)
        for (const auto& eta : dec.roots) {
          if (!(xi.form + eta.form + beta.form).is_zero()) continue;
          for (const auto& x : xi.space.basis())
            for (const auto& y : eta.space.basis())
              for (const auto& c : beta.space.basis()) {
                auto r = rho_apply(B.rho, sv(x), sv(y), sv(c));
                if (!r) {
                  ++skipped;
                  continue;
                }
                gens.push_back(dv(*r, m));
              }
        }
    }
    return Subspace::span(m, gens);
  };

  Tally in0("A0_parts_in_A0");
  for (const auto& cls : out.partition.classes) {
    Subspace z = zero_part(cls);
    std::vector<Subspace> ps{z};
    for (std::size_t i : cls) ps.push_back(wdec.weights[i].space);
    out.A0_parts.push_back(z);
    out.parts.push_back(sum_of(m, ps));
    in0.test(wdec.A0.contains(z), [&] { return Witness{{"class " + std::to_string(out.parts.size())}, ""}; });
  }
  out.report.add(in0.done());

  Tally ann("annihilation");
  for (std::size_t c = 0; c < out.parts.size(); ++c)
    for (std::size_t d = c + 1; d < out.parts.size(); ++d)
      for (const auto& a : out.parts[c].basis())
        for (const auto& b : out.parts[d].basis()) {
          auto r = B.A.mul(sv(a), sv(b));
          if (!r) {
            ann.skip();
            continue;
          }
          ann.test(r->empty(), [&] {
            return Witness{{"class " + std::to_string(c + 1), "class " + std::to_string(d + 1)},
                           "nonzero product"};
          });
        }
  out.report.add(ann.done());

  const bool zla = centers(B).z_l_a.is_zero();
  const Subspace gen = zero_part(all_indices(wdec.weights.size()));
  const bool a0_gen = gen.contains(wdec.A0);
  out.report.add(CheckReport::verdict("hyp_Z_L_A_zero", zla));
  CheckReport g = CheckReport::verdict("hyp_A0_generated", a0_gen);
  g.skipped = skipped;
  out.report.add(std::move(g));
  if (zla && a0_gen) {
    const bool ok = is_direct_sum(out.parts) && sum_of(m, out.parts) == Subspace::full(m);
    out.report.add(CheckReport::verdict("direct_sum", ok));
  } else {
    out.report.add(CheckReport::blocked("direct_sum", "hypotheses do not hold"));
  }
  return out;
}

}  // namespace h3l
