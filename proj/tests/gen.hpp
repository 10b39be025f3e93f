#pragma once

// Seeded generators for property tests.

#include "h3l/expoly.hpp"
#include "h3l/linalg.hpp"

#include <random>

namespace gen {

using h3l::Q;

// mpq_class(p, q) does not reduce; every generated value goes through here.
inline Q frac(int p, int q) {
  Q r(p, q);
  r.canonicalize();
  return r;
}

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  int range(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng); }
  bool coin(int one_in) { return range(1, one_in) == 1; }
  Q small_q() {
    if (coin(3)) return 0;
    return frac(range(-4, 4), range(1, 3));
  }
};

inline h3l::Matrix matrix(Rng& r, std::size_t rows, std::size_t cols) {
  h3l::Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = r.small_q();
  return m;
}

// Low-rank matrices make kernels and repeated eigenvalues common.
inline h3l::Matrix low_rank(Rng& r, std::size_t n, std::size_t k) {
  return matrix(r, n, k) * matrix(r, k, n);
}

inline h3l::Vec vec(Rng& r, std::size_t n) {
  h3l::Vec v(n);
  for (auto& x : v) x = r.small_q();
  return v;
}

inline h3l::ExpPoly exppoly(Rng& r, int terms = 3) {
  h3l::ExpPoly f;
  for (int t = 0; t < terms; ++t)
    f += h3l::ExpPoly::term({r.range(0, 2), r.range(0, 2), r.range(0, 2), r.range(-2, 2)}, r.small_q());
  return f;
}

}  // namespace gen
