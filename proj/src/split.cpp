#include "split_internal.hpp"

namespace h3l {

using detail::sv;
using detail::dv;

Q RootForm::value(const Vec& h1, const Vec& h2) const {
  Q s = 0;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) s += h1[i] * matrix(i, j) * h2[j];
  return s;
}

bool RootForm::is_zero() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      if (matrix(i, j) != 0) return false;
  return true;
}

bool RootForm::operator<(const RootForm& o) const {
  if (dim() != o.dim()) return dim() < o.dim();
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (matrix(i, j) != o.matrix(i, j)) return matrix(i, j) < o.matrix(i, j);
  return false;
}

RootForm operator+(const RootForm& a, const RootForm& b) { return {a.matrix + b.matrix}; }
RootForm operator-(const RootForm& a, const RootForm& b) { return {a.matrix - b.matrix}; }
RootForm operator-(const RootForm& a) { return {Q(-1) * a.matrix}; }

RootForm pullback_root(const RootForm& g, const Matrix& AH, int k) {
  if (k == 0) return g;
  const Matrix P = power(AH, k);
  return {P.transpose() * g.matrix * P};
}

std::vector<RootForm> RootDecomposition::forms() const {
  std::vector<RootForm> out;
  for (const auto& r : roots) out.push_back(r.form);
  return out;
}

std::optional<Subspace> RootDecomposition::space_of(const RootForm& g) const {
  if (g.is_zero()) return H;
  for (const auto& r : roots)
    if (r.form == g) return r.space;
  return std::nullopt;
}

std::vector<RootForm> WeightDecomposition::forms() const {
  std::vector<RootForm> out;
  for (const auto& w : weights) out.push_back(w.form);
  return out;
}

std::optional<Subspace> WeightDecomposition::space_of(const RootForm& l) const {
  if (l.is_zero()) return A0;
  for (const auto& w : weights)
    if (w.form == l) return w.space;
  return std::nullopt;
}

namespace {

// Nonzero when some bracket of basis vectors of S is nonzero; nullopt when
// a bracket leaves the window.
std::optional<bool> abelian(const Hom3Lie& L, const std::vector<Vec>& S) {
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = i + 1; j < S.size(); ++j)
      for (std::size_t k = j + 1; k < S.size(); ++k) {
        auto r = bracket(L.bracket, sv(S[i]), sv(S[j]), sv(S[k]));
        if (!r) return std::nullopt;
        if (!r->empty()) return false;
      }
  return true;
}

bool alpha_stable(const Hom3Lie& L, const Subspace& S) {
  std::vector<Vec> img;
  for (const auto& b : S.basis()) {
    auto a = L.alpha.apply(sv(b));
    if (!a) return false;
    img.push_back(dv(*a, L.dim()));
  }
  return Subspace::span(L.dim(), img) == S;
}

struct Eigen {
  std::vector<Q> values;
  Subspace space;
};

// Simultaneous rational eigenspaces, intersecting one operator at a time.
std::vector<Eigen> simultaneous(std::size_t n, const std::vector<Matrix>& ops) {
  std::vector<Eigen> cur{{{}, Subspace::full(n)}};
  for (const auto& S : ops) {
    std::vector<std::pair<Q, Subspace>> spaces;
    for (const auto& l : rational_spectrum(S)) spaces.emplace_back(l, eigenspace(S, l));
    std::vector<Eigen> next;
    for (const auto& e : cur)
      for (const auto& [l, E] : spaces) {
        Subspace W = e.space.intersect(E);
        if (W.is_zero()) continue;
        auto vals = e.values;
        vals.push_back(l);
        next.push_back({std::move(vals), std::move(W)});
      }
    cur = std::move(next);
  }
  return cur;
}

RootForm form_from(std::size_t h, const std::vector<Q>& values) {
  RootForm f = RootForm::zero(h);
  std::size_t t = 0;
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = i + 1; j < h; ++j) {
      f.matrix(i, j) = values[t];
      f.matrix(j, i) = -values[t];
      ++t;
    }
  return f;
}

Matrix total_matrix(const LinMap& m, const char* what) {
  if (!m.total()) throw SplitError(std::string(what) + " leaves the window");
  return m.to_matrix();
}

std::size_t exhausted(const std::vector<Eigen>& es) {
  std::size_t d = 0;
  for (const auto& e : es) d += e.space.dim();
  return d;
}

}  // namespace

Subspace auto_cartan(const Hom3Lie& L) {
  const std::size_t n = L.dim();
  std::vector<Vec> kept;
  for (std::size_t i = 0; i < n; ++i) {
    auto trial = kept;
    trial.push_back(unit_vec(n, i));
    auto ab = abelian(L, trial);
    if (!ab || !*ab) continue;
    if (!alpha_stable(L, Subspace::span(n, trial))) continue;
    kept = std::move(trial);
  }
  return Subspace::span(n, kept);
}

RootDecomposition root_decompose(const Hom3Lie& L, const Subspace& H) {
  const std::size_t n = L.dim();
  if (H.ambient_dim() != n) throw std::invalid_argument("H has the wrong ambient dimension");
  const auto& hb = H.basis();
  const std::size_t h = hb.size();

  auto ab = abelian(L, hb);
  if (!ab) throw SplitError("bracket on H leaves the window");
  if (!*ab) throw SplitError("not abelian");
  if (!alpha_stable(L, H)) throw SplitError("H not alpha-stable");
  const Matrix alpha = total_matrix(L.alpha, "alpha");
  auto alpha_inv = inverse(alpha);
  if (!alpha_inv) throw SplitError("alpha not invertible");

  RootDecomposition dec;
  dec.H = H;
  dec.AH = Matrix(h, h);
  for (std::size_t j = 0; j < h; ++j) {
    Vec c = detail::h_coords(H, alpha * hb[j]);
    for (std::size_t i = 0; i < h; ++i) dec.AH(i, j) = c[i];
  }

  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = i + 1; j < h; ++j)
      ops.push_back(*alpha_inv * total_matrix(ad(L, sv(hb[i]), sv(hb[j])), "ad on H"));

  auto es = simultaneous(n, ops);
  if (exhausted(es) != n) throw SplitError("not split over Q");
  for (auto& e : es) {
    RootForm f = form_from(h, e.values);
    if (f.is_zero()) {
      if (!(e.space == H)) throw SplitError("L_0 strictly larger than H");
      continue;
    }
    dec.roots.push_back({std::move(f), std::move(e.space)});
  }
  std::sort(dec.roots.begin(), dec.roots.end(),
            [](const FormSpace& a, const FormSpace& b) { return a.form < b.form; });
  dec.residual_ok = true;
  return dec;
}

WeightDecomposition weight_decompose(const RinehartBundle& B, const RootDecomposition& dec) {
  const std::size_t m = B.A.dim();
  const auto& hb = dec.H.basis();
  const std::size_t h = hb.size();
  const Matrix phi = total_matrix(B.A.phi, "phi");
  auto phi_inv = inverse(phi);
  if (!phi_inv) throw SplitError("phi not invertible");

  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = i + 1; j < h; ++j)
      ops.push_back(*phi_inv * total_matrix(rho_map(B.rho, sv(hb[i]), sv(hb[j])), "rho on H"));

  WeightDecomposition w;
  w.A0 = Subspace::zero(m);
  auto es = simultaneous(m, ops);
  if (exhausted(es) != m) throw SplitError("A not split over Q");
  for (auto& e : es) {
    RootForm f = form_from(h, e.values);
    if (f.is_zero())
      w.A0 = std::move(e.space);
    else
      w.weights.push_back({std::move(f), std::move(e.space)});
  }
  std::sort(w.weights.begin(), w.weights.end(),
            [](const FormSpace& a, const FormSpace& b) { return a.form < b.form; });
  return w;
}

}  // namespace h3l
