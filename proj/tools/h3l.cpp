// h3l: build, check and decompose Hom 3-Lie-Rinehart bundles.
//
// Exit codes: 0 every asserted property holds, 1 a checked property failed,
// 2 input or validation error.

#include "h3l/bundle_io.hpp"
#include "h3l/construct.hpp"
#include "h3l/corpus.hpp"
#include "h3l/split.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

using namespace h3l;

namespace {

enum Exit { kOk = 0, kFailed = 1, kInput = 2 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw InputError("cannot write " + out);
  f << text;
}

RinehartBundle load(const std::string& path, bool verify) {
  try {
    return load_bundle(path, verify);
  } catch (const BundleError& e) {
    throw InputError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

Subspace choose_H(const RinehartBundle& B, const std::string& spec) {
  if (spec == "auto") return auto_cartan(B.L);
  if (spec.empty()) {
    if (B.H) return Subspace::span(B.L.dim(), *B.H);
    return auto_cartan(B.L);
  }
  try {
    return Subspace::span(B.L.dim(), load_vectors(spec, B.L.dim()));
  } catch (const std::exception& e) {
    throw InputError(std::string("--H: ") + e.what());
  }
}

Matrix read_matrix(const std::string& path, std::size_t n) {
  std::vector<Vec> rows;
  try {
    rows = load_vectors(path, n);
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  if (rows.size() != n) throw InputError(path + ": expected " + std::to_string(n) + " rows");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  return m;
}

LinMap map_option(const std::string& file, const std::string& scale, std::size_t n, const char* what) {
  if (!file.empty()) return LinMap::from_matrix(read_matrix(file, n));
  try {
    return LinMap::scalar(n, parse_rational(scale.empty() ? "1" : scale));
  } catch (const std::exception&) {
    throw InputError(std::string(what) + ": not a rational: " + scale);
  }
}

// ---- check -----------------------------------------------------------------

SuiteReport named(std::string name, SuiteReport r) {
  r.name = std::move(name);
  return r;
}

SuiteReport core_suite(const RinehartBundle& B) {
  SuiteReport r{"core", {}};
  r.add(check_hom_jacobi(B.L));
  r.add(check_multiplicative(B.L));
  r.append(check_coefficients(B.A));
  return r;
}

SuiteReport split_suite(const RinehartBundle& B, const std::string& H, bool classes_only) {
  const std::string name = classes_only ? "classes" : "split";
  if (!B.H && H.empty())
    return {name, {CheckReport::blocked("decomposition", "bundle declares no H; pass --H")}};
  try {
    const SplitAnalysis s = analyze_split(B, choose_H(B, H));
    if (!classes_only) return s.summary();
    SuiteReport r{name, {}};
    r.add(CheckReport::verdict("root_classes_equivalence", s.classes.equivalence_ok));
    r.append(s.ideal_laws);
    r.append(s.direct_sum.report);
    return r;
  } catch (const SplitError& e) {
    return {name, {CheckReport::verdict("decomposition", false, e.what())}};
  }
}

std::vector<SuiteReport> run_suites(const RinehartBundle& B, const std::string& suite, const std::string& H) {
  std::vector<SuiteReport> out;
  const bool all = suite == "all";
  if (all || suite == "core") out.push_back(core_suite(B));
  if (all || suite == "rep") out.push_back(named("rep", check_hom_rep(B.L, B.representation())));
  if (all || suite == "rinehart") out.push_back(named("rinehart", check_full_rinehart(B)));
  if (all || suite == "identities") out.push_back(named("identities", check_identity_suite(B)));
  if (suite == "split" || (all && (B.H || !H.empty()))) out.push_back(split_suite(B, H, false));
  if (suite == "classes") out.push_back(split_suite(B, H, true));
  if (out.empty()) throw InputError("unknown suite '" + suite + "'");
  return out;
}

int cmd_check(const std::string& path, const std::string& suite, const std::string& format,
              const std::string& H, bool timings, const std::string& out) {
  const RinehartBundle B = load(path, false);
  nlohmann::json j;
  j["bundle"] = B.name;
  if (B.metadata.contains("seed")) j["seed"] = B.metadata["seed"];
  j["suites"] = nlohmann::json::array();
  std::string text;
  bool ok = true;
  for (const std::string& s : suite == "all" ? std::vector<std::string>{"all"} : std::vector<std::string>{suite}) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto reports = run_suites(B, s, H);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& r : reports) {
      ok = ok && r.passed();
      j["suites"].push_back(to_json(r));
      text += to_text(r) + "\n";
    }
    if (timings) {
      j["timing_ms"] = ms;
      text += "time: " + std::to_string(ms) + " ms\n";
    }
  }
  j["passed"] = ok;
  emit(format == "json" ? j.dump(2) + "\n" : text, out);
  return ok ? kOk : kFailed;
}

// ---- decompose / connect ---------------------------------------------------

int cmd_decompose(const std::string& path, const std::string& H, const std::string& format, const std::string& out) {
  const RinehartBundle B = load(path, false);
  const Subspace Hs = choose_H(B, H);
  SplitAnalysis s;
  try {
    s = analyze_split(B, Hs);
  } catch (const SplitError& e) {
    throw InputError(std::string("decompose: ") + e.what() + (H == "auto" ? " (try an explicit --H)" : ""));
  }
  emit(format == "json" ? to_json(s, B).dump(2) + "\n" : to_text(s, B), out);
  return s.summary().passed() ? kOk : kFailed;
}

std::string form_line(const RootForm& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.dim(); ++i) {
    s += i ? "; " : "";
    for (std::size_t j = 0; j < f.dim(); ++j) s += (j ? " " : "") + to_string(f.matrix(i, j));
  }
  return s + "]";
}

int cmd_connect(const std::string& path, const std::string& H, std::size_t from, std::size_t to, bool weights,
                const std::string& format, const std::string& out) {
  const RinehartBundle B = load(path, false);
  RootDecomposition dec;
  WeightDecomposition wdec;
  try {
    dec = root_decompose(B.L, choose_H(B, H));
    wdec = weight_decompose(B, dec);
  } catch (const SplitError& e) {
    throw InputError(std::string("connect: ") + e.what());
  }
  const auto gamma = dec.forms(), lambda = wdec.forms();
  const auto& states = weights ? lambda : gamma;
  const char* tag = weights ? "w" : "r";
  nlohmann::json j;
  std::ostringstream t;
  if (from == 0 && to == 0) {
    const auto part = weights ? weight_classes(gamma, lambda, dec.AH) : root_classes(gamma, lambda, dec.AH);
    j["equivalence_ok"] = part.equivalence_ok;
    j["classes"] = nlohmann::json::array();
    for (const auto& c : part.classes) {
      nlohmann::json cj = nlohmann::json::array();
      t << "[";
      for (std::size_t k = 0; k < c.size(); ++k) {
        cj.push_back(std::string(tag) + std::to_string(c[k] + 1));
        t << (k ? " " : "") << tag << c[k] + 1;
      }
      t << "]\n";
      j["classes"].push_back(cj);
    }
    t << "equivalence: " << (part.equivalence_ok ? "ok" : "FAILED") << "\n";
    emit(format == "json" ? j.dump(2) + "\n" : t.str(), out);
    return part.equivalence_ok ? kOk : kFailed;
  }
  if (from == 0 || to == 0 || from > states.size() || to > states.size())
    throw InputError("--from/--to must be in 1.." + std::to_string(states.size()));
  const Connection c = weights ? weight_connected(gamma, lambda, dec.AH, states[from - 1], states[to - 1])
                               : connected(gamma, lambda, dec.AH, states[from - 1], states[to - 1]);
  j["from"] = std::string(tag) + std::to_string(from);
  j["to"] = std::string(tag) + std::to_string(to);
  j["connected"] = c.connected;
  j["via_orbit"] = c.via_orbit;
  j["chain"] = nlohmann::json::array();
  for (const auto& f : c.chain) j["chain"].push_back(form_line(f));
  t << tag << from << " -> " << tag << to << ": " << (c.connected ? "connected" : "not connected");
  if (c.via_orbit) t << " (alpha-orbit)";
  t << "\n";
  for (std::size_t k = 0; k < c.chain.size(); ++k) t << "  " << k + 1 << ": " << form_line(c.chain[k]) << "\n";
  emit(format == "json" ? j.dump(2) + "\n" : t.str(), out);
  return kOk;
}

// ---- construct -------------------------------------------------------------

void declare_verified(RinehartBundle& B) {
  const bool weak = check_weak_rinehart(B).passed();
  const bool full = weak && check_full_rinehart(B).passed();
  B.flags = {weak, full, is_regular(B.L) && is_invertible(B.A.phi.to_matrix())};
}

int report_construction(const ConstructionError& e) {
  std::cerr << e.what() << "\n" << to_text(e.report());
  return kFailed;
}

int cmd_twist(const std::string& path, const std::string& alpha, const std::string& alpha_scale,
              const std::string& phi, const std::string& phi_scale, const std::string& out) {
  RinehartBundle base = load(path, false);
  TwistInput in{base, map_option(alpha, alpha_scale, base.L.dim(), "--alpha-scale"),
                map_option(phi, phi_scale, base.A.dim(), "--phi-scale")};
  try {
    RinehartBundle B = twist(in);
    declare_verified(B);
    emit(dump_bundle(B), out);
    return kOk;
  } catch (const ConstructionError& e) {
    return report_construction(e);
  }
}

int cmd_tensor(const std::string& path, const std::string& out) {
  const RinehartBundle in = load(path, false);
  try {
    RinehartBundle B = tensor_extension(in.L, in.A, in.rho);
    declare_verified(B);
    emit(dump_bundle(B), out);
    return kOk;
  } catch (const ConstructionError& e) {
    return report_construction(e);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hom 3-Lie-Rinehart algebras: corpus, checks, split decomposition, constructions"};
  app.require_subcommand(1);
  int code = kOk;

  std::string out, format = "text", H;

  auto* corpus = app.add_subcommand("corpus", "Write a built-in example bundle");
  CorpusSpec spec;
  corpus->add_option("name", spec.name, "Corpus name")->required()->check(CLI::IsMember(corpus_names()));
  corpus->add_option("--degree-cap", spec.degree_cap, "Polynomial degree cap (<= 6)");
  corpus->add_option("--window", spec.window, "Frequency window K (<= 6)");
  corpus->add_option("--seed", spec.seed, "Recorded in metadata");
  corpus->add_option("--variant", spec.variant, "rho-prime: poly or tb");
  corpus->add_option("-o,--output", out, "Output file (default stdout)");

  auto* check = app.add_subcommand("check", "Run axiom suites on a bundle");
  std::string path, suite = "all";
  bool timings = false;
  check->add_option("bundle", path, "Bundle file")->required();
  check->add_option("--suite", suite)->check(CLI::IsMember({"core", "rep", "rinehart", "identities", "split", "classes", "all"}));
  check->add_option("--report", format)->check(CLI::IsMember({"json", "text"}));
  check->add_option("--H", H, "H basis file or 'auto' (split suites)");
  check->add_flag("--timings", timings, "Include wall-clock timings");
  check->add_option("-o,--output", out);

  auto* decompose = app.add_subcommand("decompose", "Root/weight decomposition and class ideals");
  decompose->add_option("bundle", path)->required();
  decompose->add_option("--H", H, "H basis file or 'auto' (default: the bundle's H, else auto)");
  decompose->add_option("--report", format)->check(CLI::IsMember({"json", "text"}));
  decompose->add_option("-o,--output", out);

  auto* connect = app.add_subcommand("connect", "Connection between two roots, or the class partition");
  std::size_t from = 0, to = 0;
  bool weights = false;
  connect->add_option("bundle", path)->required();
  connect->add_option("--H", H);
  connect->add_option("--from", from, "1-based root index");
  connect->add_option("--to", to, "1-based root index");
  connect->add_flag("--weights", weights, "Connect weights instead of roots");
  connect->add_option("--report", format)->check(CLI::IsMember({"json", "text"}));
  connect->add_option("-o,--output", out);

  auto* construct = app.add_subcommand("construct", "Twist or tensor-extend a bundle");
  construct->require_subcommand(1);
  auto* tw = construct->add_subcommand("twist", "Twist a classical bundle by (alpha, phi)");
  std::string alpha, alpha_scale, phi, phi_scale;
  tw->add_option("bundle", path)->required();
  tw->add_option("--alpha", alpha, "Matrix file (rows of p/q) for alpha on L");
  tw->add_option("--alpha-scale", alpha_scale, "alpha = c Id");
  tw->add_option("--phi", phi, "Matrix file for phi on A");
  tw->add_option("--phi-scale", phi_scale, "phi = c Id");
  tw->add_option("-o,--output", out);
  auto* te = construct->add_subcommand("tensor", "A (x) L with the bracket built from L, A and rho");
  te->add_option("bundle", path)->required();
  te->add_option("-o,--output", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInput;
  }

  try {
    if (*corpus) {
      emit(dump_bundle(generate_corpus(spec)), out);
    } else if (*check) {
      code = cmd_check(path, suite, format, H, timings, out);
    } else if (*decompose) {
      code = cmd_decompose(path, H, format, out);
    } else if (*connect) {
      code = cmd_connect(path, H, from, to, weights, format, out);
    } else if (*tw) {
      code = cmd_twist(path, alpha, alpha_scale, phi, phi_scale, out);
    } else if (*te) {
      code = cmd_tensor(path, out);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const SplitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return code;
}
