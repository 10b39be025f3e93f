#include "split_internal.hpp"

#include <sstream>

namespace h3l {

using detail::sv;

SplitAnalysis analyze_split(const RinehartBundle& B, const Subspace& H) {
  SplitAnalysis s;
  s.dec = root_decompose(B.L, H);
  s.wdec = weight_decompose(B, s.dec);
  s.root_props = check_root_properties(B, s.dec, s.wdec);
  s.classes = root_classes(s.dec.forms(), s.wdec.forms(), s.dec.AH);
  for (const auto& cls : s.classes.classes) s.ideals.push_back(class_ideal(B, s.dec, s.wdec, cls));
  s.ideal_laws = check_class_ideal_laws(B, s.ideals);
  s.direct_sum = direct_sum_decompose(B, s.dec, s.wdec, s.ideals);
  s.weight_classes = weight_class_decompose(B, s.wdec, s.dec);
  return s;
}

SuiteReport SplitAnalysis::summary() const {
  SuiteReport r{"split", {}};
  r.add(CheckReport::verdict("root_decomposition", dec.residual_ok));
  r.append(root_props);
  r.add(CheckReport::verdict("root_classes_equivalence", classes.equivalence_ok));
  r.append(ideal_laws);
  // A failing hypothesis is an outcome, not an error; only the claim counts.
  auto claim = [](CheckReport c) {
    if (c.status == Status::Blocked) {
      c.status = Status::Pass;
      c.note = "not claimed: hypotheses do not hold";
    }
    return c;
  };
  for (const auto& c : direct_sum.report.checks)
    if (c.name == "direct_sum" || c.name == "single_class") r.add(claim(c));
  for (const auto& c : weight_classes.report.checks)
    if (c.name.rfind("hyp_", 0) != 0) {
      CheckReport w = claim(c);
      w.name = "weight_" + c.name;
      r.add(std::move(w));
    }
  return r;
}

namespace {

std::vector<std::string> h_labels(const RootDecomposition& dec, const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (const auto& h : dec.H.basis()) out.push_back(format_vec(sv(h), labels));
  return out;
}

std::vector<std::string> a_labels(const RinehartBundle& B) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < B.A.dim(); ++i) out.push_back(B.A.label(i));
  return out;
}

nlohmann::json form_json(const RootForm& f, const std::vector<std::string>& hl) {
  nlohmann::json values = nlohmann::json::object();
  nlohmann::json matrix = nlohmann::json::array();
  for (std::size_t i = 0; i < f.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < f.dim(); ++j) row.push_back(to_string(f.matrix(i, j)));
    matrix.push_back(row);
    for (std::size_t j = i + 1; j < f.dim(); ++j)
      if (f.matrix(i, j) != 0) values[hl[i] + "," + hl[j]] = to_string(f.matrix(i, j));
  }
  return {{"matrix", matrix}, {"values", values}};
}

nlohmann::json space_json(const Subspace& S, const std::vector<std::string>& labels) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& v : S.basis()) a.push_back(format_vec(sv(v), labels));
  return a;
}

std::string form_text(const RootForm& f, const std::vector<std::string>& hl) {
  std::string s;
  for (std::size_t i = 0; i < f.dim(); ++i)
    for (std::size_t j = i + 1; j < f.dim(); ++j)
      if (f.matrix(i, j) != 0) {
        if (!s.empty()) s += ", ";
        s += "(" + hl[i] + "," + hl[j] + ") -> " + to_string(f.matrix(i, j));
      }
  return s.empty() ? "0" : s;
}

std::string space_text(const Subspace& S, const std::vector<std::string>& labels) {
  std::string s = "<";
  for (std::size_t i = 0; i < S.basis().size(); ++i)
    s += (i ? ", " : "") + format_vec(sv(S.basis()[i]), labels);
  return s + ">";
}

}  // namespace

nlohmann::json to_json(const SplitAnalysis& s, const RinehartBundle& B) {
  const auto hl = h_labels(s.dec, B.L.labels);
  const auto al = a_labels(B);
  nlohmann::json j;
  j["H"] = hl;
  nlohmann::json roots = nlohmann::json::array();
  for (std::size_t i = 0; i < s.dec.roots.size(); ++i) {
    auto r = form_json(s.dec.roots[i].form, hl);
    r["name"] = "r" + std::to_string(i + 1);
    r["space"] = space_json(s.dec.roots[i].space, B.L.labels);
    roots.push_back(r);
  }
  j["roots"] = roots;
  j["A0"] = space_json(s.wdec.A0, al);
  nlohmann::json weights = nlohmann::json::array();
  for (std::size_t i = 0; i < s.wdec.weights.size(); ++i) {
    auto w = form_json(s.wdec.weights[i].form, hl);
    w["name"] = "w" + std::to_string(i + 1);
    w["space"] = space_json(s.wdec.weights[i].space, al);
    weights.push_back(w);
  }
  j["weights"] = weights;
  nlohmann::json classes = nlohmann::json::array();
  for (std::size_t c = 0; c < s.ideals.size(); ++c) {
    nlohmann::json members = nlohmann::json::array();
    for (auto i : s.ideals[c].members) members.push_back("r" + std::to_string(i + 1));
    classes.push_back({{"roots", members},
                       {"L0", space_json(s.ideals[c].L0, B.L.labels)},
                       {"ideal_dim", s.ideals[c].I.dim()}});
  }
  j["classes"] = classes;
  nlohmann::json ds = to_json(s.direct_sum.report);
  ds["z_rho_zero"] = s.direct_sum.z_rho_zero;
  ds["h_generated"] = s.direct_sum.h_generated;
  if (s.direct_sum.gap) ds["gap"] = format_vec(sv(*s.direct_sum.gap), B.L.labels);
  ds["asserted"] = s.direct_sum.asserted;
  j["direct_sum"] = ds;
  j["root_system"] = to_json(s.root_props);
  j["class_ideal_laws"] = to_json(s.ideal_laws);
  j["weight_classes"] = to_json(s.weight_classes.report);
  j["passed"] = s.summary().passed();
  return j;
}

std::string to_text(const SplitAnalysis& s, const RinehartBundle& B) {
  const auto hl = h_labels(s.dec, B.L.labels);
  const auto al = a_labels(B);
  std::ostringstream o;
  o << "H = " << space_text(s.dec.H, B.L.labels) << "\n";
  o << "roots (" << s.dec.roots.size() << "):\n";
  for (std::size_t i = 0; i < s.dec.roots.size(); ++i)
    o << "  r" << i + 1 << ": " << form_text(s.dec.roots[i].form, hl) << "   L = "
      << space_text(s.dec.roots[i].space, B.L.labels) << "\n";
  o << "A_0 = " << space_text(s.wdec.A0, al) << "\n";
  o << "weights (" << s.wdec.weights.size() << "):\n";
  for (std::size_t i = 0; i < s.wdec.weights.size(); ++i)
    o << "  w" << i + 1 << ": " << form_text(s.wdec.weights[i].form, hl) << "   A = "
      << space_text(s.wdec.weights[i].space, al) << "\n";
  o << "classes (" << s.ideals.size() << "):\n";
  for (std::size_t c = 0; c < s.ideals.size(); ++c) {
    o << "  [";
    for (std::size_t k = 0; k < s.ideals[c].members.size(); ++k)
      o << (k ? " " : "") << "r" << s.ideals[c].members[k] + 1;
    o << "]  L_0 part = " << space_text(s.ideals[c].L0, B.L.labels) << ", dim I = " << s.ideals[c].I.dim()
      << "\n";
  }
  o << "Z_rho(L) = 0: " << (s.direct_sum.z_rho_zero ? "yes" : "no") << "\n";
  o << "H generated: " << (s.direct_sum.h_generated ? "yes" : "no");
  if (s.direct_sum.gap) o << " (gap " << format_vec(sv(*s.direct_sum.gap), B.L.labels) << ")";
  o << "\n";
  o << "direct sum of class ideals: "
    << (s.direct_sum.asserted ? "asserted" : (s.direct_sum.z_rho_zero && s.direct_sum.h_generated)
                                                 ? "FAILED"
                                                 : "not claimed")
    << "\n\n";
  o << to_text(s.summary());
  return o.str();
}

}  // namespace h3l
