#include "gen.hpp"

#include "h3l/linalg.hpp"

#include <doctest.h>

using namespace h3l;

namespace {

Matrix rows(std::initializer_list<std::initializer_list<int>> r) {
  std::vector<Vec> v;
  std::size_t cols = 0;
  for (const auto& row : r) {
    Vec x;
    for (int e : row) x.push_back(e);
    cols = x.size();
    v.push_back(x);
  }
  return Matrix::from_rows(v, cols);
}

// Cofactor expansion; independent of the elimination used in the library.
Q cofactor_det(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Q d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    d += (c % 2 ? -1 : 1) * m(0, c) * cofactor_det(minor);
  }
  return d;
}

Matrix shifted(const Matrix& m, const Q& t) {
  Matrix s = m;
  for (std::size_t i = 0; i < m.rows(); ++i) s(i, i) -= t;
  return s;
}

}  // namespace

TEST_CASE("kernel examples") {
  CHECK(kernel(Matrix(2, 2)) == Subspace::full(2));
  CHECK(kernel(Matrix::identity(3)).is_zero());
  const Subspace k = kernel(rows({{1, 2}, {2, 4}}));
  REQUIRE(k.dim() == 1);
  CHECK(k == Subspace::span(2, {{Q(-2), Q(1)}}));
  // reduced echelon: leading entry one
  CHECK(k.basis()[0] == Vec{Q(1), Q(-1, 2)});
}

TEST_CASE("rational spectrum examples") {
  CHECK(rational_spectrum(rows({{0, 1}, {0, 0}})) == std::vector<Q>{0});
  CHECK(rational_spectrum(rows({{1, 0, 0}, {0, -1, 0}, {0, 0, 2}})) == std::vector<Q>{-1, 1, 2});
  CHECK(rational_spectrum(rows({{0, 1}, {1, 0}})) == std::vector<Q>{-1, 1});
  // t^2 - 2 has no rational root
  CHECK(rational_spectrum(rows({{0, 2}, {1, 0}})).empty());
  CHECK_THROWS(rational_spectrum(Matrix(2, 3)));
}

TEST_CASE("subspace operations") {
  const Subspace e1 = Subspace::span(2, {unit_vec(2, 0)}), e2 = Subspace::span(2, {unit_vec(2, 1)});
  CHECK(e1.intersect(e2).is_zero());
  CHECK(e1.is_direct_sum_with(e2));
  CHECK(e1.intersect(e1) == e1);
  CHECK(e1 + e1 == e1);
  CHECK_FALSE(e1.is_direct_sum_with(e1));

  const Subspace a = Subspace::span(3, {{1, 1, 0}});
  const Subspace b = Subspace::span(3, {{1, 0, 1}, {0, 1, -1}});
  CHECK((a + b).dim() == 2);
  CHECK_FALSE(a.is_direct_sum_with(b));
  CHECK(b.contains(Vec{1, 1, 0}));
  CHECK_THROWS(a.intersect(Subspace::full(2)));
}

TEST_CASE("rationals print and parse as p/q") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(Q(-3)) == "-3");
  CHECK(parse_rational("-10/4") == Q(-5, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("property: kernel vectors are annihilated and rank-nullity holds") {
  gen::Rng r(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = static_cast<std::size_t>(r.range(1, 6)), m = static_cast<std::size_t>(r.range(1, 6));
    const Matrix M = t % 2 ? gen::matrix(r, n, m) : gen::matrix(r, n, 2) * gen::matrix(r, 2, m);
    const Subspace k = kernel(M);
    for (const auto& v : k.basis()) CHECK(is_zero(M * v));
    CHECK(k.dim() + rank(M) == m);
  }
}

TEST_CASE("property: determinant and characteristic polynomial agree with cofactor expansion") {
  gen::Rng r(12);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = static_cast<std::size_t>(r.range(1, 5));
    const Matrix M = t % 3 ? gen::matrix(r, n, n) : gen::low_rank(r, n, 1 + n / 2);
    CHECK(determinant(M) == cofactor_det(M));
    const Polynomial p = characteristic_polynomial(M);
    CHECK(p.degree() == static_cast<int>(n));
    for (int s = -2; s <= 2; ++s) {
      // det(tI - M) = (-1)^n det(M - tI)
      const Q oracle = (n % 2 ? -1 : 1) * cofactor_det(shifted(M, s));
      CHECK(p(Q(s)) == oracle);
    }
    for (const Q& lambda : rational_spectrum(M)) {
      CHECK(cofactor_det(shifted(M, lambda)) == 0);
      CHECK(eigenspace(M, lambda).dim() >= 1);
    }
  }
}

TEST_CASE("property: canonical form does not depend on the spanning set") {
  gen::Rng r(13);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = static_cast<std::size_t>(r.range(2, 6));
    std::vector<Vec> span;
    for (int i = 0; i < r.range(1, 4); ++i) span.push_back(gen::vec(r, n));
    const Subspace S = Subspace::span(n, span);
    // random recombination plus redundant vectors
    std::vector<Vec> other;
    for (int i = 0; i < 5; ++i) {
      Vec v = zero_vec(n);
      for (const auto& s : span) v = v + r.small_q() * s;
      other.push_back(v);
    }
    for (const auto& s : span) other.push_back(s);
    std::reverse(other.begin(), other.end());
    CHECK(Subspace::span(n, other) == S);
    const Subspace T = Subspace::span(n, {gen::vec(r, n), gen::vec(r, n)});
    CHECK((S + T).dim() + S.intersect(T).dim() == S.dim() + T.dim());
  }
}

TEST_CASE("inverse and powers") {
  const Matrix M = rows({{2, 1}, {1, 1}});
  const auto inv = inverse(M);
  REQUIRE(inv);
  CHECK(M * *inv == Matrix::identity(2));
  CHECK(power(M, -2) * power(M, 2) == Matrix::identity(2));
  CHECK_FALSE(inverse(rows({{1, 2}, {2, 4}})));
}
