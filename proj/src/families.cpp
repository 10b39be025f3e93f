#include "h3l/families.hpp"

#include "h3l/construct.hpp"

#include <random>
#include <sstream>

namespace h3l {

namespace {

using Rng = std::mt19937_64;

Q pick(Rng& rng, const std::vector<Q>& options) {
  std::uniform_int_distribution<std::size_t> d(0, options.size() - 1);
  return options[d(rng)];
}

int pick_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

const std::vector<Q>& scales() {
  static const std::vector<Q> s = {Q(1), Q(-1), Q(2), Q(1, 2), Q(-2), Q(-1, 2), Q(3), Q(1, 3)};
  return s;
}

// Base algebra (D4 or toy) with alpha = diag(d), d chosen multiplicative.
struct Base {
  Hom3Lie L;
  std::vector<Q> d;
  std::size_t image;  // index spanning the derived algebra
  std::string name;
};

Base draw_base(Rng& rng, bool identity_alpha) {
  Base b;
  if (pick_int(rng, 0, 1) == 0) {
    b.name = "d4";
    b.L = Hom3Lie(4);
    b.L.bracket.set(0, 1, 2, SVec::unit(3));
    Q x = 1, y = 1, z = 1;
    if (!identity_alpha) {
      x = pick(rng, scales());
      y = pick(rng, scales());
      z = pick(rng, scales());
    }
    b.d = {x, y, z, x * y * z};
    b.image = 3;
  } else {
    b.name = "toy";
    b.L = Hom3Lie(3);
    b.L.labels = {"h1", "h2", "u"};
    b.L.bracket.set(0, 1, 2, SVec::unit(2));
    Q x = 1, z = 1;
    if (!identity_alpha) {
      x = pick(rng, scales());
      z = pick(rng, scales());
    }
    b.d = {x, 1 / x, z};
    b.image = 2;
  }
  b.L.alpha = LinMap(b.L.dim(), b.L.dim());
  for (std::size_t i = 0; i < b.d.size(); ++i) b.L.alpha.set_col(i, SVec::unit(static_cast<std::uint32_t>(i), b.d[i]));
  return b;
}

// rho(e_i, e_j) = c_ij D on pairs avoiding the derived algebra with d_i d_j = 1.
PairAction draw_rho(Rng& rng, const Base& b, std::size_t m, const LinMap& D, std::string& recipe) {
  PairAction rho(b.L.dim(), m);
  for (std::size_t i = 0; i < b.L.dim(); ++i)
    for (std::size_t j = i + 1; j < b.L.dim(); ++j) {
      if (i == b.image || j == b.image || b.d[i] * b.d[j] != 1) continue;
      const int c = pick_int(rng, -2, 2);
      if (c == 0) continue;
      rho.set(i, j, D.scaled(c));
      recipe += " c" + std::to_string(i + 1) + std::to_string(j + 1) + "=" + std::to_string(c);
    }
  return rho;
}

std::string diag_text(const std::vector<Q>& d) {
  std::string s = "diag(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + to_string(d[i]);
  return s + ")";
}

}  // namespace

CommAlgebra truncated_poly(int p, const Q& s) {
  CommAlgebra A(static_cast<std::size_t>(p));
  A.labels.clear();
  for (int i = 0; i < p; ++i) A.labels.push_back(i == 0 ? "1" : i == 1 ? "z" : "z^" + std::to_string(i));
  for (int i = 0; i < p; ++i)
    for (int j = i; j < p; ++j)
      A.set_product(i, j, i + j < p ? SVec::unit(static_cast<std::uint32_t>(i + j)) : SVec{});
  A.unit = SVec::unit(0);
  A.phi = LinMap(p, p);
  Q power = 1;
  for (int i = 0; i < p; ++i) {
    A.phi.set_col(i, SVec::unit(static_cast<std::uint32_t>(i), power));
    power *= s;
  }
  return A;
}

LinMap euler_operator(int p) {
  LinMap E(p, p);
  for (int i = 0; i < p; ++i) E.set_col(i, SVec::unit(static_cast<std::uint32_t>(i), i));
  return E;
}

std::optional<Candidate> random_tensor_bundle(std::uint64_t seed) {
  Rng rng(seed);
  Base b = draw_base(rng, false);
  const int p = pick_int(rng, 2, 3);
  const Q s = pick(rng, {Q(1), Q(-1), Q(2), Q(1, 2)});
  CommAlgebra A = truncated_poly(p, s);
  std::string recipe = "tensor " + b.name + " alpha=" + diag_text(b.d) + " A=Q[z]/(z^" +
                       std::to_string(p) + ") phi(z)=" + to_string(s) + "z rho:";
  PairAction rho = draw_rho(rng, b, A.dim(), A.phi.compose(euler_operator(p)), recipe);
  try {
    RinehartBundle B = tensor_extension(b.L, A, rho);
    B.name = "tensor-" + std::to_string(seed);
    B.metadata["seed"] = seed;
    return Candidate{std::move(B), recipe};
  } catch (const ConstructionError&) {
    return std::nullopt;
  }
}

std::optional<Candidate> random_twist_bundle(std::uint64_t seed) {
  Rng rng(seed);
  Base b = draw_base(rng, false);
  const std::vector<Q> d = b.d;
  // The classical base uses alpha = id; d only decides the twisting map.
  for (std::size_t i = 0; i < b.L.dim(); ++i)
    b.L.alpha.set_col(i, SVec::unit(static_cast<std::uint32_t>(i)));
  const int p = pick_int(rng, 2, 3);
  const Q s = pick(rng, {Q(1), Q(-1), Q(2), Q(1, 2)});
  std::string recipe = "twist " + b.name + " by " + diag_text(d) + " (x) phi(z)=" + to_string(s) +
                       "z over Q[z]/(z^" + std::to_string(p) + ") rho:";
  PairAction rho = draw_rho(rng, b, static_cast<std::size_t>(p), euler_operator(p), recipe);
  try {
    RinehartBundle base = tensor_extension(b.L, truncated_poly(p, 1), rho);
    const CommAlgebra As = truncated_poly(p, s);
    const std::size_t n = b.L.dim(), N = base.L.dim();
    LinMap alpha(N, N);
    for (std::size_t a = 0; a < static_cast<std::size_t>(p); ++a)
      for (std::size_t x = 0; x < n; ++x) {
        const Q c = As.phi.col(a).coeff(static_cast<std::uint32_t>(a)) * d[x];
        alpha.set_col(a * n + x, SVec::unit(static_cast<std::uint32_t>(a * n + x), c));
      }
    RinehartBundle B = twist({base, alpha, As.phi});
    B.name = "twist-" + std::to_string(seed);
    B.metadata["seed"] = seed;
    return Candidate{std::move(B), recipe};
  } catch (const ConstructionError&) {
    return std::nullopt;
  }
}

RepCandidate random_representation(std::uint64_t seed) {
  Rng rng(seed);
  RepCandidate out;
  if (seed % 3 == 0) {
    Base b = draw_base(rng, false);
    // Twisted bracket alpha o [ , , ] with the adjoint action, phi = alpha.
    for (const auto& e : b.L.bracket.entries())
      b.L.bracket.set(e.idx[0], e.idx[1], e.idx[2], *b.L.alpha.apply(*e.value));
    const std::size_t n = b.L.dim();
    PairAction rho(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        rho.set(i, j, ad(b.L, SVec::unit(static_cast<std::uint32_t>(i)), SVec::unit(static_cast<std::uint32_t>(j))));
    out.L = b.L;
    out.rep = {rho, b.L.alpha};
    out.recipe = "adjoint of twisted " + b.name + " alpha=" + diag_text(b.d);
    return out;
  }
  const std::size_t r = static_cast<std::size_t>(pick_int(rng, 1, 2));
  const std::size_t n = 4 + r;
  const std::size_t k = static_cast<std::size_t>(pick_int(rng, 2, 3));
  out.L = Hom3Lie(n);
  out.L.bracket.set(0, 1, 2, SVec::unit(3));
  LinMap E(k, k);
  const bool nilpotent = seed % 3 == 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<SVec::Entry> col;
    for (std::size_t row = 0; row < k; ++row) {
      if (nilpotent && row >= c) continue;
      const int v = pick_int(rng, -2, 2);
      if (v) col.emplace_back(static_cast<std::uint32_t>(row), Q(v));
    }
    E.set_col(c, SVec::from_entries(std::move(col)));
  }
  PairAction rho(n, k);
  std::ostringstream recipe;
  recipe << "D4+Q^" << r << " on Q^" << k << (nilpotent ? " nilpotent" : " generic") << " E, c:";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (i == 3 || j == 3) continue;
      const int c = pick_int(rng, -2, 2);
      if (!c) continue;
      rho.set(i, j, E.scaled(c));
      recipe << " c" << i + 1 << j + 1 << "=" << c;
    }
  out.rep = {rho, LinMap::identity(k)};
  out.recipe = recipe.str();
  return out;
}

}  // namespace h3l
