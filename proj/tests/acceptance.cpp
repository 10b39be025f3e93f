// End-to-end acceptance run: one line per criterion, exit status 1 if any
// criterion fails. Every comparison is exact.

#include "oracles.hpp"

#include "h3l/bundle_io.hpp"
#include "h3l/construct.hpp"
#include "h3l/corpus.hpp"
#include "h3l/expoly.hpp"
#include "h3l/families.hpp"
#include "h3l/split.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace h3l;

namespace {

struct CriterionResult {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

std::size_t index_of(const std::vector<std::string>& labels, const std::string& s) {
  const auto it = std::find(labels.begin(), labels.end(), s);
  if (it == labels.end()) throw std::runtime_error("no basis element " + s);
  return static_cast<std::size_t>(it - labels.begin());
}

// Bundles go through the file format, as they would from the command line.
RinehartBundle via_file(const RinehartBundle& B) { return bundle_from_json(nlohmann::json::parse(dump_bundle(B))); }

std::string exp_label(int k) {
  if (k == 1) return "e^{z}";
  if (k == -1) return "e^{-z}";
  return "e^{" + std::to_string(k) + "z}";
}

// ---- 1: T' roots and weights ---------------------------------------------------

CriterionResult tprime_decomposition() {
  CriterionResult o;
  const RinehartBundle B = via_file(generate_corpus({"tprime-split", -1, 3}));
  const std::size_t n = B.L.dim(), m = B.A.dim();
  const Subspace H = Subspace::span(n, *B.H);
  o.require(H == Subspace::span(n, {unit_vec(n, index_of(B.L.labels, "x")), unit_vec(n, index_of(B.L.labels, "y")),
                                    unit_vec(n, index_of(B.L.labels, "1"))}),
            "H != <x, y, 1>");
  const SplitAnalysis s = analyze_split(B, H);
  o.require(s.dec.residual_ok, "L_0 != H");
  o.require(s.dec.roots.size() == 6, "expected 6 roots for K = 3");
  o.require(s.wdec.weights.size() == 6, "expected 6 weights for K = 3");
  // coordinates on the H basis (x, y, 1) for a few (h1, h2)
  const std::vector<std::pair<Vec, Vec>> points = {
      {{1, 0, 0}, {0, 1, 0}}, {{3, 5, 7}, {-2, 4, 1}}, {{Q(1, 2), -1, 0}, {2, Q(3, 4), -5}}, {{1, 1, 1}, {1, 1, 1}}};
  for (int k : {-3, -2, -1, 1, 2, 3}) {
    const Subspace Lk = Subspace::span(n, {unit_vec(n, index_of(B.L.labels, "x*" + exp_label(k))),
                                           unit_vec(n, index_of(B.L.labels, "y*" + exp_label(k)))});
    const Subspace Ak = Subspace::span(m, {unit_vec(m, index_of(B.A.labels, exp_label(k)))});
    const FormSpace* root = nullptr;
    for (const auto& fs : s.dec.roots)
      if (fs.space == Lk) root = &fs;
    const FormSpace* weight = nullptr;
    for (const auto& fs : s.wdec.weights)
      if (fs.space == Ak) weight = &fs;
    if (!root || !weight) {
      o.fail("k = " + std::to_string(k) + ": root or weight space missing");
      continue;
    }
    for (const auto& [h1, h2] : points) {
      // gamma_k(h1, h2) = k (m2 n1 - m1 n2)
      const Q want = k * (h2[0] * h1[1] - h1[0] * h2[1]);
      o.require(root->form.value(h1, h2) == want, "gamma_" + std::to_string(k) + " has the wrong values");
      o.require(weight->form.value(h1, h2) == want, "lambda_" + std::to_string(k) + " has the wrong values");
    }
  }
  o.require(s.wdec.A0 == Subspace::span(m, {unit_vec(m, index_of(B.A.labels, "1"))}), "A_0 != <1>");
  if (o.pass) o.detail = "Gamma = Lambda = {gamma_k : 0 < |k| <= 3}, L_k = <x e^{kz}, y e^{kz}>, A_k = <e^{kz}>, A_0 = <1>";
  return o;
}

// ---- 2: the Jacobian bundle is weak, not full ---------------------------------

CriterionResult jacobian_weak() {
  CriterionResult o;
  const RinehartBundle B = via_file(generate_corpus({"jacobian-weak", 3}));
  o.require(check_weak_rinehart(B).passed(), "weak suite fails");
  const SuiteReport full = check_full_rinehart(B);
  o.require(!full.passed(), "full suite passes");
  const CheckReport* lin = full.find("rho_a_linear_left");
  o.require(lin && lin->status == Status::Fail, "rho_a_linear_left does not fail");

  // The basis is a set of monomials x^a y^b z^c; recover them from the labels.
  std::vector<Monomial> basis;
  for (const auto& label : B.A.labels) {
    bool found = false;
    for (int a = 0; a <= 3 && !found; ++a)
      for (int b = 0; b <= 3 && !found; ++b)
        for (int c = 0; c <= 3 && !found; ++c)
          if (monomial_label({a, b, c, 0}) == label) {
            basis.push_back({a, b, c, 0});
            found = true;
          }
    if (!found) throw std::runtime_error("unexpected label " + label);
  }
  const std::uint32_t ax = static_cast<std::uint32_t>(index_of(B.A.labels, "x"));
  const SVec f = SVec::unit(static_cast<std::uint32_t>(index_of(B.L.labels, "x")));
  const SVec g = SVec::unit(static_cast<std::uint32_t>(index_of(B.L.labels, "y")));
  const auto af = B.action.apply(ax, f);
  o.require(af.has_value(), "x * x undefined");
  const ExpPoly X = ExpPoly::x();
  int compared = 0, differing = 0;
  for (std::size_t h = 0; h < basis.size() && af; ++h) {
    const ExpPoly hp = ExpPoly::term(basis[h], 1);
    const auto lhs = rho_apply(B.rho, *af, g, SVec::unit(static_cast<std::uint32_t>(h)));
    const auto inner = rho_apply(B.rho, f, g, SVec::unit(static_cast<std::uint32_t>(h)));
    const auto want_lhs = expand_on(basis, 2 * X * partial(hp, Var::Z));
    const auto want_rhs = expand_on(basis, X * partial(hp, Var::Z));
    if (!lhs || !inner || !want_lhs || !want_rhs) continue;
    const auto rhs = B.A.mul(*B.A.phi.apply(SVec::unit(ax)), *inner);
    if (!rhs) continue;
    ++compared;
    o.require(*lhs == *want_lhs, "rho(x x, y) h != 2x d_z h for h = " + B.A.label(h));
    o.require(*rhs == *want_rhs, "x rho(x, y) h != x d_z h for h = " + B.A.label(h));
    differing += *lhs != *rhs;
  }
  const std::uint32_t hz = static_cast<std::uint32_t>(index_of(B.A.labels, "z"));
  const auto at_z = rho_apply(B.rho, *af, g, SVec::unit(hz));
  o.require(at_z && *at_z == SVec::unit(ax, 2), "rho(x x, y) z != 2x");
  o.require(differing > 0, "no h separates the two sides");
  if (o.pass)
    o.detail = "witness a = x, f = x, g = y: rho(af, g) h = 2x d_z h vs x d_z h on " + std::to_string(compared) +
               " basis h, differing on " + std::to_string(differing);
  return o;
}

// ---- 3: kernel of rho' --------------------------------------------------------

CriterionResult kernel_of_rho_prime() {
  CriterionResult o;
  const RinehartBundle B = via_file(generate_corpus({"rho-prime"}));
  const KerRho k = ker_rho_ideal(B);
  const std::size_t n = B.L.dim();
  o.require(k.ker == Subspace::span(n, {unit_vec(n, index_of(B.L.labels, "1"))}), "Ker rho' != <1>");
  std::string laws;
  for (const auto& c : k.laws.checks) {
    laws += (laws.empty() ? "" : ", ") + c.name + " " + (c.passed() ? "ok" : "FAIL");
    if (!c.passed()) {
      std::string w = c.witness ? " (" + c.witness->detail + ")" : "";
      o.fail("ideal law " + c.name + " fails" + w);
    }
  }
  laws += std::string(", alpha_stable ") + (k.alpha_stable.passed() ? "ok" : "FAIL");
  o.require(k.alpha_stable.passed(), "alpha(Ker) not in Ker");
  o.detail = "Ker rho' = <1>; " + laws + (o.pass ? "" : "; " + o.detail);
  return o;
}

// ---- 4, 5: identities and constructions on seeded families -------------------

template <class Gen>
std::vector<Candidate> collect(Gen gen, std::size_t want, std::uint64_t& seeds_used) {
  std::vector<Candidate> out;
  for (std::uint64_t seed = 1; out.size() < want && seed < 20 * want; ++seed) {
    seeds_used = seed;
    if (auto c = gen(seed)) out.push_back(std::move(*c));
  }
  return out;
}

CriterionResult identities_on_seeds() {
  CriterionResult o;
  std::vector<RinehartBundle> bundles;
  std::uint64_t s1 = 0, s2 = 0;
  for (auto& c : collect(random_tensor_bundle, 50, s1)) bundles.push_back(std::move(c.bundle));
  for (auto& c : collect(random_twist_bundle, 50, s2)) bundles.push_back(std::move(c.bundle));
  std::size_t full = 0;
  for (const auto& B : bundles) {
    if (B.L.dim() > 12 || B.A.dim() > 12) {
      o.fail("dimension above 12");
      continue;
    }
    if (!check_full_rinehart(B).passed()) continue;
    ++full;
    const SuiteReport id = check_identity_suite(B);
    for (const auto& c : id.checks)
      if (!c.passed()) o.fail(c.name + " fails on " + B.name);
  }
  o.require(full >= 100, "only " + std::to_string(full) + " seeded bundles pass the full suite");
  if (o.pass) o.detail = "ho1-ho6 hold on " + std::to_string(full) + " full bundles (tensor and twist over D4 / toy, Q[z]/(z^p))";
  return o;
}

RinehartBundle negated(RinehartBundle B) {
  Bracket3 br(B.L.dim());
  for (const auto& e : B.L.bracket.entries()) {
    if (e.value)
      br.set(e.idx[0], e.idx[1], e.idx[2], e.value->scaled(-1));
    else
      br.set_undefined(e.idx[0], e.idx[1], e.idx[2]);
  }
  B.L.bracket = std::move(br);
  for (std::size_t i = 0; i < B.L.dim(); ++i)
    for (std::size_t j = i + 1; j < B.L.dim(); ++j) B.rho.stored_mut(i, j) = B.rho.stored(i, j).scaled(-1);
  return B;
}

CriterionResult constructions() {
  CriterionResult o;
  // twist of (T, B, rho_ad) by alpha = -id, phi = id
  for (int cap : {1, 2, 3}) {
    const RinehartBundle base = via_file(generate_corpus({"tb-rinehart", cap}));
    const std::size_t n = base.L.dim(), m = base.A.dim();
    const RinehartBundle tw = twist({base, LinMap::scalar(n, -1), LinMap::identity(m)});
    o.require(check_full_rinehart(tw).passed(), "twist fails the full suite (cap " + std::to_string(cap) + ")");
    o.require(check_identity_suite(tw).passed(), "twist fails the identities (cap " + std::to_string(cap) + ")");
    // (-[ , , ], rho_ad) rescaled to ([ , , ], rho_{-ad})
    const RinehartBundle target = generate_corpus({"rho-prime", cap, -1, 0, "tb"});
    const RinehartBundle r = negated(tw);
    o.require(r.L.bracket == target.L.bracket && r.L.alpha == target.L.alpha && r.rho == target.rho &&
                  r.A == target.A && r.action == target.action,
              "twist differs from (T, B, [ , , ], Id, -Id, rho_{-ad}) (cap " + std::to_string(cap) + ")");
    o.require(check_full_rinehart(r).passed(), "rescaled twist fails the full suite");
  }
  std::uint64_t used = 0;
  const auto tensors = collect(random_tensor_bundle, 100, used);
  o.require(tensors.size() >= 100, "only " + std::to_string(tensors.size()) + " tensor seeds");
  for (const auto& c : tensors) {
    if (!check_full_rinehart(c.bundle).passed()) o.fail("tensor fails full: " + c.recipe);
    else if (!check_identity_suite(c.bundle).passed()) o.fail("tensor fails identities: " + c.recipe);
  }
  if (o.pass)
    o.detail = "twist reproduces rho' = rho_{-ad} on T for caps 1-3; " + std::to_string(tensors.size()) +
               " tensor extensions pass full + identities";
  return o;
}

// ---- 6: hr3 and hr4 under hr2 -------------------------------------------------

CriterionResult hr_equivalence() {
  CriterionResult o;
  std::size_t tested = 0, both_true = 0, both_false = 0;
  for (std::uint64_t seed = 1; tested < 100 && seed < 5000; ++seed) {
    const RepCandidate c = random_representation(seed);
    if (!check_hr2(c.L, c.rep).passed()) continue;
    ++tested;
    const bool h3 = check_hr3(c.L, c.rep).passed(), h4 = check_hr4(c.L, c.rep).passed();
    if (h3 != h4) o.fail("hr3 = " + std::to_string(h3) + ", hr4 = " + std::to_string(h4) + " for " + c.recipe);
    both_true += h3 && h4;
    both_false += !h3 && !h4;
  }
  o.require(tested >= 100, "only " + std::to_string(tested) + " representations satisfy hr2");
  if (o.pass)
    o.detail = std::to_string(tested) + " hr2 representations; hr3 = hr4 on all (" + std::to_string(both_true) +
               " both true, " + std::to_string(both_false) + " both false)";
  return o;
}

// ---- 7: split regression --------------------------------------------------------

CriterionResult split_regression() {
  CriterionResult o;
  std::ostringstream d;
  for (const char* name : {"toy-split", "tprime-split", "two-block"}) {
    const RinehartBundle B = via_file(generate_corpus({name}));
    const SplitAnalysis s = analyze_split(B, Subspace::span(B.L.dim(), *B.H));
    const SuiteReport root_props = check_root_properties(B, s.dec, s.wdec, 2);
    for (const auto& c : root_props.checks)
      if (!c.passed()) o.fail(std::string(name) + ": " + c.name);
    o.require(s.classes.equivalence_ok, std::string(name) + ": connection is not an equivalence");
    for (const auto& c : s.ideal_laws.checks)
      if (!c.passed())
        o.fail(std::string(name) + ": " + c.name + (c.witness ? " (" + c.witness->detail + ")" : ""));
    const bool hyp = s.direct_sum.z_rho_zero && s.direct_sum.h_generated;
    o.require(s.direct_sum.asserted == hyp, std::string(name) + ": direct sum asserted != hypotheses");
    d << name << ": hypotheses " << (hyp ? "hold" : "fail") << ", sum " << (s.direct_sum.asserted ? "asserted" : "not claimed")
      << "; ";
  }
  o.detail = d.str() + o.detail;
  return o;
}

// ---- 8: oracles -----------------------------------------------------------------

CriterionResult oracles() {
  CriterionResult o;
  std::size_t algebras = 0, systems = 0, pairs = 0;
  std::vector<RinehartBundle> small;
  for (const auto& name : corpus_names())
    for (int cap : {-1, 0, 1})
      for (int window : {-1, 1}) {
        RinehartBundle B;
        try {
          B = generate_corpus({name, cap, window});
        } catch (const std::invalid_argument&) {
          continue;
        }
        if (B.L.dim() > 5) continue;
        bool seen = false;
        for (const auto& S : small) seen = seen || (S.L.bracket == B.L.bracket && S.L.alpha == B.L.alpha);
        if (!seen) small.push_back(B);
      }
  for (const auto& B : small) {
    ++algebras;
    const auto hom = oracle::hom_jacobi(B.L, true), plain = oracle::hom_jacobi(B.L, false);
    o.require(check_hom_jacobi(B.L).passed() == hom.holds, B.name + ": hom-Jacobi verdict differs");
    o.require(reference::check_hom_jacobi(B.L).passed() == hom.holds, B.name + ": serial hom-Jacobi differs");
    o.require(check_jacobi(B.L).passed() == plain.holds, B.name + ": Jacobi verdict differs");
    o.require(reference::check_jacobi(B.L).passed() == plain.holds, B.name + ": serial Jacobi differs");
  }
  for (const char* name : {"toy-split", "tprime-split", "tprime-core", "two-block"}) {
    const RinehartBundle B = generate_corpus({name});
    const RootDecomposition dec = root_decompose(B.L, Subspace::span(B.L.dim(), *B.H));
    const WeightDecomposition w = weight_decompose(B, dec);
    const auto a = oracle::compare_search({dec.forms(), w.forms(), dec.AH});
    ++systems;
    pairs += a.pairs;
    o.require(a.disagreements == 0, std::string(name) + ": search and chain enumeration disagree");
    o.require(a.bad_chains == 0, std::string(name) + ": search returned an invalid chain");
  }
  gen::Rng r(2024);
  for (int t = 0; t < 100; ++t) {
    const auto a = oracle::compare_search(oracle::random_system(r));
    ++systems;
    pairs += a.pairs;
    o.require(a.disagreements == 0, "random system " + std::to_string(t) + ": search and chain enumeration disagree");
    o.require(a.bad_chains == 0, "random system " + std::to_string(t) + ": search returned an invalid chain");
  }
  o.require(algebras >= 3, "too few small corpus algebras");
  if (o.pass)
    o.detail = std::to_string(algebras) + " algebras of dim <= 5 agree with brute force; " + std::to_string(pairs) +
               " root pairs over " + std::to_string(systems) + " systems agree with chains of length <= 3";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<CriterionResult()> run;
  };
  const std::vector<Criterion> criteria = {
      {"T' roots and weights", 5, tprime_decomposition},
      {"Jacobian bundle weak, not full", 5, jacobian_weak},
      {"Ker rho' and the ideal laws", 5, kernel_of_rho_prime},
      {"ho1-ho6 on seeded bundles", 60, identities_on_seeds},
      {"twist and tensor constructions", 60, constructions},
      {"hr3 = hr4 under hr2", 30, hr_equivalence},
      {"split regression", 30, split_regression},
      {"oracle agreement", 60, oracles},
  };
  int failed = 0, idx = 0;
  for (const auto& c : criteria) {
    ++idx;
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > c.limit_s) o.fail("took " + std::to_string(s) + " s, limit " + std::to_string(c.limit_s) + " s");
    failed += !o.pass;
    std::printf("[%s] %d %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", idx, c.name, s, o.detail.c_str());
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
