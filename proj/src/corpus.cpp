#include "h3l/corpus.hpp"

#include "h3l/construct.hpp"
#include "h3l/split.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace h3l {

namespace {

constexpr int kMaxParam = 6;

std::vector<Monomial> polys_xyz(int d) {
  std::vector<Monomial> out;
  for (int t = 0; t <= d; ++t)
    for (int a = t; a >= 0; --a)
      for (int b = t - a; b >= 0; --b) out.push_back({a, b, t - a - b, 0});
  return out;
}

std::vector<int> frequencies(int K, bool zero) {
  std::vector<int> ks;
  for (int k = -K; k <= K; ++k)
    if (k != 0 || zero) ks.push_back(k);
  return ks;
}

ExpPoly mono(const Monomial& m) { return ExpPoly::term(m); }

int pick(int value, int fallback, const char* what) {
  const int v = value < 0 ? fallback : value;
  if (v > kMaxParam) throw std::invalid_argument(std::string(what) + " must be at most 6");
  return v;
}

void set_flags(RinehartBundle& B, bool weak, bool full, bool regular) {
  B.flags = {weak, full, regular};
}

}  // namespace

std::optional<SVec> expand_on(const std::vector<Monomial>& basis, const ExpPoly& f) {
  std::vector<SVec::Entry> e;
  for (const auto& [m, c] : f.terms()) {
    auto it = std::find(basis.begin(), basis.end(), m);
    if (it == basis.end()) return std::nullopt;
    e.emplace_back(static_cast<std::uint32_t>(it - basis.begin()), c);
  }
  return SVec::from_entries(std::move(e));
}

RinehartBundle build_function_bundle(const FunctionModel& fm) {
  const std::size_t n = fm.l_basis.size(), m = fm.a_basis.size();
  std::vector<ExpPoly> L, A;
  for (const auto& b : fm.l_basis) L.push_back(mono(b));
  for (const auto& b : fm.a_basis) A.push_back(mono(b));

  RinehartBundle B;
  B.name = fm.name;
  B.L = Hom3Lie(n);
  for (std::size_t i = 0; i < n; ++i) B.L.labels[i] = monomial_label(fm.l_basis[i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        auto v = expand_on(fm.l_basis, fm.bracket_scale * jacobian_bracket(L[i], L[j], L[k]));
        if (!v)
          B.L.bracket.set_undefined(i, j, k);
        else if (!v->empty())
          B.L.bracket.set(i, j, k, std::move(*v));
      }
  B.L.alpha = LinMap::scalar(n, fm.alpha_scale);

  B.A = CommAlgebra(m);
  for (std::size_t i = 0; i < m; ++i) B.A.labels[i] = monomial_label(fm.a_basis[i]);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      auto v = expand_on(fm.a_basis, A[i] * A[j]);
      if (v)
        B.A.set_product(i, j, std::move(*v));
      else
        B.A.set_undefined(i, j);
    }
  B.A.unit = expand_on(fm.a_basis, ExpPoly(1));

  B.action = ModuleAction(m, n);
  for (std::size_t a = 0; a < m; ++a) {
    LinMap act(n, n);
    for (std::size_t x = 0; x < n; ++x) {
      auto v = expand_on(fm.l_basis, A[a] * L[x]);
      if (v)
        act.set_col(x, std::move(*v));
      else
        act.set_undefined(x);
    }
    B.action.set(a, std::move(act));
  }

  B.rho = PairAction(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      LinMap r(m, m);
      for (std::size_t c = 0; c < m; ++c) {
        auto v = expand_on(fm.a_basis, fm.rho_scale * jacobian_bracket(L[i], L[j], A[c]));
        if (v)
          r.set_col(c, std::move(*v));
        else
          r.set_undefined(c);
      }
      B.rho.set(i, j, std::move(r));
    }
  return B;
}

RinehartBundle d4_bundle() {
  RinehartBundle B;
  B.name = "d4";
  B.L = Hom3Lie(4);
  B.L.bracket.set(0, 1, 2, SVec::unit(3));
  B.A = CommAlgebra::scalars();
  B.action = ModuleAction::scalar(4);
  B.rho = PairAction(4, 1);
  set_flags(B, true, true, true);
  return B;
}

RinehartBundle toy_split() {
  RinehartBundle B;
  B.name = "toy-split";
  B.L = Hom3Lie(3);
  B.L.labels = {"h1", "h2", "u"};
  B.L.bracket.set(0, 1, 2, SVec::unit(2));
  B.A = CommAlgebra::scalars();
  B.action = ModuleAction::scalar(3);
  B.rho = PairAction(3, 1);
  B.H = std::vector<Vec>{unit_vec(3, 0), unit_vec(3, 1)};
  set_flags(B, true, true, true);
  return B;
}

RinehartBundle tprime_split(int K, bool with_one) {
  FunctionModel fm;
  fm.name = with_one ? "tprime-split" : "tprime-core";
  fm.l_basis = {{1, 0, 0, 0}, {0, 1, 0, 0}};
  if (with_one) fm.l_basis.push_back({0, 0, 0, 0});
  for (int k : frequencies(K, false)) {
    fm.l_basis.push_back({1, 0, 0, k});
    fm.l_basis.push_back({0, 1, 0, k});
  }
  for (int k : frequencies(K, true)) fm.a_basis.push_back({0, 0, 0, k});
  fm.alpha_scale = -1;
  fm.rho_scale = -1;
  RinehartBundle B = build_function_bundle(fm);
  const std::size_t h = with_one ? 3 : 2;
  std::vector<Vec> H;
  for (std::size_t i = 0; i < h; ++i) H.push_back(unit_vec(B.L.dim(), i));
  B.H = std::move(H);
  set_flags(B, true, true, true);
  B.metadata["window"] = K;
  B.metadata["basis_order"] = with_one ? "x, y, 1, then x e^{kz}, y e^{kz} for k = -K..-1, 1..K"
                                       : "x, y, then x e^{kz}, y e^{kz} for k = -K..-1, 1..K";
  return B;
}

const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names = {"jacobian-weak", "tb-rinehart", "l1-hom",
                                                 "rho-prime",     "tprime-split", "tprime-core",
                                                 "toy-split",     "d4",           "two-block"};
  return names;
}

RinehartBundle generate_corpus(const CorpusSpec& spec) {
  const std::string& nm = spec.name;
  RinehartBundle B;
  if (nm == "jacobian-weak") {
    const int d = pick(spec.degree_cap, 3, "degree cap");
    FunctionModel fm{nm, polys_xyz(d), polys_xyz(d)};
    B = build_function_bundle(fm);
    set_flags(B, true, false, true);
    B.metadata["degree_cap"] = d;
  } else if (nm == "tb-rinehart" || (nm == "rho-prime" && spec.variant == "tb")) {
    const int d = pick(spec.degree_cap, 3, "degree cap");
    FunctionModel fm;
    fm.name = nm == "tb-rinehart" ? nm : "rho-prime-tb";
    for (int c = 0; c <= d; ++c) {
      fm.l_basis.push_back({1, 0, c, 0});
      fm.l_basis.push_back({0, 1, c, 0});
      fm.a_basis.push_back({0, 0, c, 0});
    }
    if (nm == "rho-prime") {
      fm.alpha_scale = -1;
      fm.rho_scale = -1;
    }
    B = build_function_bundle(fm);
    set_flags(B, true, true, true);
    B.metadata["degree_cap"] = d;
  } else if (nm == "rho-prime") {
    if (!spec.variant.empty() && spec.variant != "poly")
      throw std::invalid_argument("rho-prime variant must be poly or tb");
    const int d = pick(spec.degree_cap, 2, "degree cap");
    FunctionModel fm{nm, polys_xyz(d), polys_xyz(d)};
    fm.alpha_scale = -1;
    fm.rho_scale = -1;
    B = build_function_bundle(fm);
    set_flags(B, true, false, true);
    B.metadata["degree_cap"] = d;
  } else if (nm == "l1-hom") {
    const int d = pick(spec.degree_cap, 1, "degree cap");
    const int K = pick(spec.window, 1, "window");
    FunctionModel fm;
    fm.name = nm;
    for (int k : frequencies(K, true))
      for (int t = 0; t <= d; ++t)
        for (int a = t; a >= 0; --a) fm.l_basis.push_back({a, t - a, 0, k});
    fm.a_basis = fm.l_basis;
    fm.alpha_scale = -1;
    fm.rho_scale = -1;
    B = build_function_bundle(fm);
    set_flags(B, true, false, true);
    B.metadata["degree_cap"] = d;
    B.metadata["window"] = K;
  } else if (nm == "tprime-split" || nm == "tprime-core") {
    B = tprime_split(pick(spec.window, 3, "window"), nm == "tprime-split");
  } else if (nm == "toy-split") {
    B = toy_split();
  } else if (nm == "d4") {
    B = d4_bundle();
  } else if (nm == "two-block") {
    B = direct_sum_bundle(toy_split(), tprime_split(pick(spec.window, 1, "window"), false));
    B.name = "two-block";
    set_flags(B, true, true, true);
  } else {
    throw std::invalid_argument("unknown corpus '" + nm + "'");
  }
  B.metadata["corpus"] = nm;
  if (spec.seed) B.metadata["seed"] = spec.seed;
  return B;
}

}  // namespace h3l
