#include "gen.hpp"

#include "h3l/construct.hpp"
#include "h3l/corpus.hpp"
#include "h3l/families.hpp"

#include <doctest.h>

using namespace h3l;

namespace {

Hom3Lie d4_alg(const std::vector<int>& alpha) {
  Hom3Lie L(4);
  L.bracket.set(0, 1, 2, SVec::unit(3));
  for (std::uint32_t i = 0; i < 4; ++i) L.alpha.set_col(i, SVec::unit(i, alpha[i]));
  return L;
}

struct TensorInput {
  Hom3Lie L;
  CommAlgebra A;
  PairAction rho;
};

// D4 or the toy algebra with a diagonal alpha, Q[z]/(z^p) with phi(z) = s z,
// and rho(e_i, e_j) = c_ij phi o (z d/dz) on a few random pairs.
TensorInput random_input(gen::Rng& r) {
  TensorInput in;
  if (r.coin(2)) {
    const int d = r.range(1, 2);
    in.L = d4_alg({r.range(1, 2), 1, d, r.range(1, 2) * d});
  } else {
    in.L = toy_split().L;
  }
  const int p = r.range(2, 3);
  in.A = truncated_poly(p, r.range(1, 2));
  const std::size_t n = in.L.dim();
  in.rho = PairAction(n, static_cast<std::size_t>(p));
  const LinMap D = in.A.phi.compose(euler_operator(p));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (r.coin(3)) in.rho.set(i, j, D.scaled(r.range(-2, 2)));
  return in;
}

// The bracket on A (x) L written straight from its defining formula, on every
// ordered triple of basis tensors, with dense arithmetic.
void check_tensor_against_formula(const TensorInput& in, const RinehartBundle& G) {
  const std::size_t n = in.L.dim(), m = in.A.dim(), N = n * m;
  const Matrix phi = in.A.phi.to_matrix(), alpha = in.L.alpha.to_matrix();
  auto mul = [&](const Vec& a, const Vec& b) {
    Vec out = zero_vec(m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (a[i] != 0 && b[j] != 0) out = out + (a[i] * b[j]) * in.A.product(i, j)->to_dense(m);
    return out;
  };
  auto ua = [m](std::size_t a) { return unit_vec(m, a); };
  auto rho = [&](std::size_t x, std::size_t y, const Vec& a) { return in.rho.get(x, y).to_matrix() * a; };
  // c (x) v as a dense vector on G, index a * n + x
  auto tensor = [&](const Vec& c, const Vec& v) {
    Vec out = zero_vec(N);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t x = 0; x < n; ++x) out[a * n + x] = c[a] * v[x];
    return out;
  };
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < N; ++k) {
        const std::size_t a1 = i / n, x1 = i % n, a2 = j / n, x2 = j % n, a3 = k / n, x3 = k % n;
        const Vec a12 = mul(ua(a1), ua(a2)), a23 = mul(ua(a2), ua(a3)), a13 = mul(ua(a1), ua(a3));
        Vec want = tensor(phi * mul(a12, ua(a3)), in.L.bracket.basis(x1, x2, x3)->to_dense(n));
        want = want + tensor(mul(phi * a12, rho(x1, x2, ua(a3))), alpha * unit_vec(n, x3));
        want = want + tensor(mul(phi * a23, rho(x2, x3, ua(a1))), alpha * unit_vec(n, x1));
        want = want + tensor(mul(phi * a13, rho(x3, x1, ua(a2))), alpha * unit_vec(n, x2));
        REQUIRE(G.L.bracket.basis(i, j, k)->to_dense(N) == want);
      }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t x = 0; x < n; ++x) {
      // alpha~(a x) = phi(a) alpha(x)
      CHECK(G.L.alpha.col(a * n + x).to_dense(N) == tensor(phi * ua(a), alpha * unit_vec(n, x)));
      // b . (a x) = (b a) x
      for (std::size_t b = 0; b < m; ++b)
        CHECK(G.action.apply(b, SVec::unit(static_cast<std::uint32_t>(a * n + x)))->to_dense(N) ==
              tensor(mul(ua(b), ua(a)), unit_vec(n, x)));
    }
  // rho~(a1 x1, a2 x2) = phi(a1 a2) rho(x1, x2)
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      const Vec c = phi * mul(ua(i / n), ua(j / n));
      for (std::size_t b = 0; b < m; ++b)
        CHECK(G.rho.get(i, j).to_matrix() * ua(b) == mul(c, rho(i % n, j % n, ua(b))));
    }
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

}  // namespace

TEST_CASE("tensor extension of D4 by Q[z]/(z^3)") {
  const Hom3Lie L = d4_alg({1, 1, 1, 1});
  const CommAlgebra A = truncated_poly(3, 1);
  const RinehartBundle G = tensor_extension(L, A, PairAction(4, 3));
  CHECK(G.L.dim() == 12);
  auto idx = [](std::uint32_t a, std::uint32_t x) { return a * 4 + x; };
  // [z e1, e2, z e3] = z^2 e4 and [z e1, z e2, z e3] = z^3 e4 = 0
  CHECK(*G.L.bracket.basis(idx(1, 0), idx(0, 1), idx(1, 2)) == SVec::unit(idx(2, 3)));
  CHECK(G.L.bracket.basis(idx(1, 0), idx(1, 1), idx(1, 2))->empty());
  CHECK(check_full_rinehart(G).passed());
  CHECK(check_identity_suite(G).passed());
}

TEST_CASE("oracle: tensor extension matches its defining formula") {
  gen::Rng r(51);
  int built = 0, refused = 0;
  for (int t = 0; t < 40; ++t) {
    const TensorInput in = random_input(r);
    if (!check_tensor_input(in.L, in.A, in.rho).passed()) {
      CHECK_THROWS_AS(tensor_extension(in.L, in.A, in.rho), ConstructionError);
      ++refused;
      continue;
    }
    const RinehartBundle G = tensor_extension(in.L, in.A, in.rho);
    check_tensor_against_formula(in, G);
    CHECK(check_full_rinehart(G).passed());
    ++built;
  }
  CHECK(built >= 10);
  CHECK(refused >= 1);
}

TEST_CASE("tensor input is validated") {
  const Hom3Lie L = d4_alg({1, 1, 1, 1});
  const CommAlgebra A = truncated_poly(3, 1);
  PairAction rho(4, 3);
  rho.set(0, 1, LinMap::identity(3));  // not a derivation
  try {
    tensor_extension(L, A, rho);
    FAIL("expected ConstructionError");
  } catch (const ConstructionError& e) {
    CHECK_FALSE(e.report().passed());
    CHECK(std::string(e.what()).find("tensor precondition failed") != std::string::npos);
  }
  CHECK_THROWS_AS(tensor_extension(L, A, PairAction(3, 3)), std::invalid_argument);
}

TEST_CASE("twist of the TB bundle is the hom bundle with rho' = rho_{-ad}") {
  const RinehartBundle base = generate_corpus({"tb-rinehart", 2});
  REQUIRE(check_full_rinehart(base).passed());
  const std::size_t n = base.L.dim(), m = base.A.dim();
  const RinehartBundle tw = twist({base, LinMap::scalar(n, -1), LinMap::identity(m)});
  CHECK(tw.L.alpha == LinMap::scalar(n, -1));
  CHECK(check_full_rinehart(tw).passed());
  CHECK(check_identity_suite(tw).passed());
  // The twist carries (-[ , , ], rho_ad). Negating bracket and rho together
  // preserves every axiom and gives ([ , , ], -rho_ad).
  const RinehartBundle hom = generate_corpus({"rho-prime", 2, -1, 0, "tb"});
  const RinehartBundle flipped = negated(tw);
  CHECK(flipped.L.bracket == hom.L.bracket);
  CHECK(flipped.L.alpha == hom.L.alpha);
  CHECK(flipped.rho == hom.rho);
  CHECK(flipped.A == hom.A);
  CHECK(flipped.action == hom.action);
  CHECK(check_full_rinehart(flipped).passed());
}

TEST_CASE("twist basics") {
  const RinehartBundle base = generate_corpus({"tb-rinehart", 2});
  const std::size_t n = base.L.dim(), m = base.A.dim();
  const RinehartBundle same = twist({base, LinMap::identity(n), LinMap::identity(m)});
  CHECK(same.L.bracket == base.L.bracket);
  CHECK(same.rho == base.rho);

  // alpha = 2 id is not a bracket endomorphism: 2 [x,y,z] != 8 [x,y,z]
  CHECK_FALSE(check_twist_input({base, LinMap::scalar(n, 2), LinMap::identity(m)}).passed());
  CHECK_THROWS_AS(twist({base, LinMap::scalar(n, 2), LinMap::identity(m)}), ConstructionError);

  // a base that is not a classical 3-Lie-Rinehart algebra is refused
  const RinehartBundle hom = generate_corpus({"rho-prime", 2, -1, 0, "tb"});
  CHECK_THROWS_AS(twist({hom, LinMap::identity(n), LinMap::identity(m)}), ConstructionError);
}

TEST_CASE("twisting a tensor extension") {
  // classical tensor bundle, then an (alpha, phi) pair compatible with it
  const Hom3Lie L = toy_split().L;
  const CommAlgebra A = truncated_poly(2, 1);
  PairAction rho(3, 2);
  rho.set(0, 1, euler_operator(2));
  const RinehartBundle G = tensor_extension(L, A, rho);
  REQUIRE(check_full_rinehart(G).passed());
  // phi(z) = -z and alpha~(a x) = phi(a) x: ad-type automorphism pair
  const CommAlgebra A2 = truncated_poly(2, -1);
  LinMap alpha(6, 6);
  for (std::uint32_t a = 0; a < 2; ++a)
    for (std::uint32_t x = 0; x < 3; ++x) alpha.set_col(a * 3 + x, SVec::unit(a * 3 + x, a ? -1 : 1));
  const TwistInput in{G, alpha, A2.phi};
  REQUIRE(check_twist_input(in).passed());
  const RinehartBundle T = twist(in);
  CHECK(check_full_rinehart(T).passed());
  CHECK(check_identity_suite(T).passed());
}

TEST_CASE("property: seeded constructions pass the full suite and the identities") {
  int tensors = 0, twists = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    if (auto c = random_tensor_bundle(seed)) {
      ++tensors;
      CHECK_MESSAGE(check_full_rinehart(c->bundle).passed(), c->recipe);
      CHECK_MESSAGE(check_identity_suite(c->bundle).passed(), c->recipe);
      CHECK(c->bundle.L.dim() <= 12);
    }
    if (auto c = random_twist_bundle(seed)) {
      ++twists;
      CHECK_MESSAGE(check_full_rinehart(c->bundle).passed(), c->recipe);
    }
  }
  CHECK(tensors >= 30);
  CHECK(twists >= 30);
}
