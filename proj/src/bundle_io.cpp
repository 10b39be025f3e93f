#include "h3l/bundle_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace h3l {

using nlohmann::json;

namespace {

json sparse_json(const SVec& v) {
  json a = json::array();
  for (const auto& [i, c] : v) a.push_back(json::array({i, to_string(c)}));
  return a;
}

json opt_json(const std::optional<SVec>& v) { return v ? sparse_json(*v) : json(nullptr); }

json columns_json(const LinMap& m) {
  json cols = json::array();
  for (std::size_t j = 0; j < m.in_dim(); ++j) cols.push_back(opt_json(m.col_opt(j)));
  return cols;
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw BundleError(where + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t index_of(const json& j, std::size_t bound, const std::string& where) {
  if (!j.is_number_unsigned() && !j.is_number_integer()) fail(where, "index must be an integer");
  const auto v = j.get<long long>();
  if (v < 0 || static_cast<std::size_t>(v) >= bound)
    fail(where, "index " + std::to_string(v) + " out of range");
  return static_cast<std::size_t>(v);
}

Q rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Q(j.get<long>());
  if (!j.is_string()) fail(where, "rational must be a \"p/q\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
}

SVec sparse(const json& j, std::size_t bound, const std::string& where) {
  if (!j.is_array()) fail(where, "sparse vector must be an array of [index, value] pairs");
  std::vector<SVec::Entry> e;
  for (std::size_t t = 0; t < j.size(); ++t) {
    const auto& p = j[t];
    if (!p.is_array() || p.size() != 2) fail(where, "entry " + std::to_string(t) + " is not a pair");
    e.emplace_back(static_cast<std::uint32_t>(index_of(p[0], bound, where)), rational(p[1], where));
  }
  return SVec::from_entries(std::move(e));
}

std::optional<SVec> opt_sparse(const json& j, std::size_t bound, const std::string& where) {
  if (j.is_null()) return std::nullopt;
  return sparse(j, bound, where);
}

LinMap columns(const json& j, std::size_t in, std::size_t out, const std::string& where) {
  if (!j.is_array() || j.size() != in)
    fail(where, "expected " + std::to_string(in) + " columns");
  LinMap m(in, out);
  for (std::size_t c = 0; c < in; ++c) {
    auto v = opt_sparse(j[c], out, where + " column " + std::to_string(c));
    if (v)
      m.set_col(c, std::move(*v));
    else
      m.set_undefined(c);
  }
  return m;
}

std::vector<std::string> labels(const json& j, std::size_t n, const std::string& where) {
  if (!j.contains("labels")) return {};
  auto l = j.at("labels");
  if (!l.is_array() || l.size() != n) fail(where, "labels must list one name per basis element");
  return l.get<std::vector<std::string>>();
}

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  return "[" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "]";
}

int perm_sign(std::array<std::size_t, 3>& t) {
  int s = 1;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2 - a; ++b)
      if (t[b] > t[b + 1]) {
        std::swap(t[b], t[b + 1]);
        s = -s;
      }
  return s;
}

}  // namespace

json bundle_to_json(const RinehartBundle& B) {
  B.validate_shapes();
  const std::size_t n = B.L.dim(), m = B.A.dim();
  json j;
  j["format_version"] = kBundleFormat;
  j["name"] = B.name;

  json bracket = json::array();
  for (const auto& e : B.L.bracket.entries())
    bracket.push_back({{"ijk", e.idx}, {"value", opt_json(e.value)}});
  j["L"] = {{"dim", n}, {"labels", B.L.labels}, {"bracket", bracket}, {"alpha", columns_json(B.L.alpha)}};

  json products = json::array();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      const auto& p = B.A.product(a, b);
      if (p && p->empty()) continue;
      products.push_back({{"ij", {a, b}}, {"value", opt_json(p)}});
    }
  std::vector<std::string> alabels;
  for (std::size_t a = 0; a < m; ++a) alabels.push_back(B.A.label(a));
  j["A"] = {{"dim", m},
            {"labels", alabels},
            {"products", products},
            {"phi", columns_json(B.A.phi)},
            {"unit", opt_json(B.A.unit)}};

  json action = json::array();
  for (std::size_t a = 0; a < m; ++a) action.push_back(columns_json(B.action.of(a)));
  j["action"] = action;

  json rho = json::array();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const LinMap& r = B.rho.stored(a, b);
      if (r.total() && r.is_zero()) continue;
      rho.push_back({{"ij", {a, b}}, {"map", columns_json(r)}});
    }
  j["rho"] = rho;
  j["flags"] = {{"weak", B.flags.weak}, {"full", B.flags.full}, {"regular", B.flags.regular}};
  if (B.H) {
    json H = json::array();
    for (const auto& v : *B.H) {
      json row = json::array();
      for (const auto& c : v) row.push_back(to_string(c));
      H.push_back(row);
    }
    j["H"] = H;
  }
  j["metadata"] = B.metadata;
  return j;
}

RinehartBundle bundle_from_json(const json& j) {
  if (!j.is_object()) fail("bundle", "top level must be an object");
  const auto version = field(j, "format_version", "bundle");
  if (version != kBundleFormat) fail("format_version", "unsupported version " + version.dump());

  RinehartBundle B;
  if (j.contains("name")) B.name = j.at("name").get<std::string>();

  const json& L = field(j, "L", "bundle");
  const std::size_t n = field(L, "dim", "L").get<std::size_t>();
  B.L = Hom3Lie(n);
  if (auto l = labels(L, n, "L"); !l.empty()) B.L.labels = l;

  std::map<std::array<std::size_t, 3>, std::pair<std::optional<SVec>, std::string>> seen;
  for (const auto& e : field(L, "bracket", "L")) {
    const json& idx = field(e, "ijk", "L.bracket");
    if (!idx.is_array() || idx.size() != 3) fail("L.bracket", "ijk must hold three indices");
    std::array<std::size_t, 3> t{index_of(idx[0], n, "L.bracket"), index_of(idx[1], n, "L.bracket"),
                                 index_of(idx[2], n, "L.bracket")};
    const std::string where = "L.bracket " + triple(t[0], t[1], t[2]);
    auto value = opt_sparse(field(e, "value", where), n, where);
    const int s = perm_sign(t);
    if (t[0] == t[1] || t[1] == t[2]) {
      if (!value || !value->empty()) fail(where, "repeated index must give zero (antisymmetry)");
      continue;
    }
    if (value && s < 0) value = value->scaled(-1);
    if (auto it = seen.find(t); it != seen.end()) {
      if (it->second.first != value)
        fail(where, "contradicts entry " + it->second.second + " under antisymmetry");
      continue;
    }
    seen[t] = {value, triple(idx[0].get<std::size_t>(), idx[1].get<std::size_t>(), idx[2].get<std::size_t>())};
    if (!value)
      B.L.bracket.set_undefined(t[0], t[1], t[2]);
    else if (!value->empty())
      B.L.bracket.set(t[0], t[1], t[2], std::move(*value));
  }
  B.L.alpha = columns(field(L, "alpha", "L"), n, n, "L.alpha");

  const json& A = field(j, "A", "bundle");
  const std::size_t m = field(A, "dim", "A").get<std::size_t>();
  B.A = CommAlgebra(m);
  if (auto l = labels(A, m, "A"); !l.empty()) B.A.labels = l;
  for (const auto& e : field(A, "products", "A")) {
    const json& idx = field(e, "ij", "A.products");
    if (!idx.is_array() || idx.size() != 2) fail("A.products", "ij must hold two indices");
    const std::size_t a = index_of(idx[0], m, "A.products"), b = index_of(idx[1], m, "A.products");
    const std::string where = "A.products [" + std::to_string(a) + "," + std::to_string(b) + "]";
    auto v = opt_sparse(field(e, "value", where), m, where);
    if (v)
      B.A.set_product(a, b, std::move(*v));
    else
      B.A.set_undefined(a, b);
  }
  B.A.phi = columns(field(A, "phi", "A"), m, m, "A.phi");
  if (A.contains("unit")) B.A.unit = opt_sparse(A.at("unit"), m, "A.unit");

  const json& act = field(j, "action", "bundle");
  if (!act.is_array() || act.size() != m) fail("action", "expected one matrix per basis element of A");
  B.action = ModuleAction(m, n);
  for (std::size_t a = 0; a < m; ++a) B.action.set(a, columns(act[a], n, n, "action[" + std::to_string(a) + "]"));

  B.rho = PairAction(n, m);
  for (const auto& e : field(j, "rho", "bundle")) {
    const json& idx = field(e, "ij", "rho");
    if (!idx.is_array() || idx.size() != 2) fail("rho", "ij must hold two indices");
    const std::size_t a = index_of(idx[0], n, "rho"), b = index_of(idx[1], n, "rho");
    const std::string where = "rho [" + std::to_string(a) + "," + std::to_string(b) + "]";
    if (a >= b) fail(where, "pairs must be listed with i < j");
    B.rho.set(a, b, columns(field(e, "map", where), m, m, where));
  }

  if (j.contains("flags")) {
    const json& f = j.at("flags");
    B.flags.weak = f.value("weak", false);
    B.flags.full = f.value("full", false);
    B.flags.regular = f.value("regular", false);
  }
  if (j.contains("H") && !j.at("H").is_null()) {
    std::vector<Vec> H;
    for (const auto& row : j.at("H")) {
      if (!row.is_array() || row.size() != n) fail("H", "each vector needs " + std::to_string(n) + " entries");
      Vec v;
      for (const auto& c : row) v.push_back(rational(c, "H"));
      H.push_back(std::move(v));
    }
    B.H = std::move(H);
  }
  if (j.contains("metadata")) B.metadata = j.at("metadata");
  try {
    B.validate_shapes();
  } catch (const std::invalid_argument& e) {
    fail("bundle", e.what());
  }
  return B;
}

std::string dump_bundle(const RinehartBundle& B) { return bundle_to_json(B).dump(2) + "\n"; }

void save_bundle(const RinehartBundle& B, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw BundleError(path + ": cannot open for writing");
  out << dump_bundle(B);
}

SuiteReport verify_declared_flags(const RinehartBundle& B) {
  SuiteReport s{"declared_flags", {}};
  if (B.flags.regular) {
    const bool ok = is_regular(B.L);
    s.add(CheckReport::verdict("regular", ok, ok ? "" : "alpha is not a multiplicative automorphism"));
  }
  if (B.flags.full) {
    SuiteReport f = check_full_rinehart(B);
    for (const auto& c : f.checks)
      if (!c.passed()) {
        CheckReport r = c;
        r.name = "full/" + c.name;
        s.add(std::move(r));
        return s;
      }
    s.add(CheckReport::verdict("full", true));
  } else if (B.flags.weak) {
    SuiteReport w = check_weak_rinehart(B);
    for (const auto& c : w.checks)
      if (!c.passed()) {
        CheckReport r = c;
        r.name = "weak/" + c.name;
        s.add(std::move(r));
        return s;
      }
    s.add(CheckReport::verdict("weak", true));
  }
  return s;
}

RinehartBundle load_bundle(const std::string& path, bool verify_flags) {
  std::ifstream in(path);
  if (!in) throw BundleError(path + ": cannot open");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw BundleError(path + ": parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  RinehartBundle B;
  try {
    B = bundle_from_json(j);
  } catch (const json::exception& e) {
    throw BundleError(path + ": " + e.what());
  }
  if (verify_flags) {
    SuiteReport v = verify_declared_flags(B);
    for (const auto& c : v.checks)
      if (!c.passed()) throw BundleError(path + ": declared flag does not hold (" + c.name + ")");
  }
  return B;
}

std::vector<Vec> load_vectors(const std::string& path, std::size_t dim) {
  std::ifstream in(path);
  if (!in) throw BundleError(path + ": cannot open");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw BundleError(path + ": parse error at byte " + std::to_string(e.byte));
  }
  if (j.is_object() && j.contains("H")) j = j.at("H");
  if (!j.is_array()) throw BundleError(path + ": expected an array of vectors");
  std::vector<Vec> out;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != dim)
      throw BundleError(path + ": each vector needs " + std::to_string(dim) + " entries");
    Vec v;
    for (const auto& c : row) v.push_back(rational(c, path));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace h3l
