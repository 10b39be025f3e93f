#include "h3l/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace h3l {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Q& q) { return is_zero(q); });
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec operator*(const Q& s, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  Matrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!is_zero(b(k, j))) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

Vec operator*(const Matrix& a, const Vec& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix/vector shape mismatch");
  Vec r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!is_zero(v[k]) && !is_zero(a(i, k))) r[i] += a(i, k) * v[k];
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix shape mismatch");
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + Q(-1) * b; }

Matrix operator*(const Q& s, const Matrix& m) {
  Matrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = s * m(i, j);
  return r;
}

Matrix rref(Matrix m, std::vector<std::size_t>* pivots) {
  std::vector<std::size_t> piv;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(lead_row, j));
    Q inv = 1 / m(lead_row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || is_zero(m(r, c))) continue;
      Q f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(lead_row, j))) m(r, j) -= f * m(lead_row, j);
    }
    piv.push_back(c);
    ++lead_row;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

std::size_t rank(const Matrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

Q determinant(Matrix m) {
  if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Q det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (is_zero(m(r, c))) continue;
      Q f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.square()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<std::size_t> piv;
  aug = rref(std::move(aug), &piv);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

bool is_invertible(const Matrix& m) { return m.square() && rank(m) == m.rows(); }

Matrix power(const Matrix& m, int k) {
  if (!m.square()) throw std::invalid_argument("power of non-square matrix");
  Matrix base = m;
  if (k < 0) {
    auto inv = inverse(m);
    if (!inv) throw std::domain_error("negative power of a singular matrix");
    base = *inv;
    k = -k;
  }
  Matrix r = Matrix::identity(m.rows());
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::full(std::size_t ambient) {
  std::vector<Vec> b;
  for (std::size_t i = 0; i < ambient; ++i) b.push_back(unit_vec(ambient, i));
  return span(ambient, b);
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  Matrix r = rref(Matrix::from_rows(vectors, ambient), &s.pivots_);
  for (std::size_t i = 0; i < s.pivots_.size(); ++i) s.basis_.push_back(r.row(i));
  return s;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("ambient dimension mismatch");
  // The basis is in RREF, so the coordinates are the pivot entries of v.
  Vec coords(basis_.size());
  Vec rest = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    coords[i] = rest[pivots_[i]];
    if (h3l::is_zero(coords[i])) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!h3l::is_zero(basis_[i][j])) rest[j] -= coords[i] * basis_[i][j];
  }
  if (!h3l::is_zero(rest)) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("ambient dimension mismatch");
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const Vec& v) { return contains(v); });
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("ambient dimension mismatch");
  std::vector<Vec> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, all);
}

Subspace Subspace::annihilator() const {
  if (basis_.empty()) return full(ambient_);
  return kernel(Matrix::from_rows(basis_, ambient_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("ambient dimension mismatch");
  return (annihilator() + other.annihilator()).annihilator();
}

bool Subspace::is_direct_sum_with(const Subspace& other) const {
  return dim() + other.dim() == (*this + other).dim();
}

Subspace Subspace::image(const Matrix& m) const {
  if (m.cols() != ambient_) throw std::invalid_argument("map/subspace shape mismatch");
  std::vector<Vec> imgs;
  for (const auto& b : basis_) imgs.push_back(m * b);
  return span(m.rows(), imgs);
}

Subspace kernel(const Matrix& m) {
  std::vector<std::size_t> piv;
  Matrix r = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<Vec> gens;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, free);
    gens.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), gens);
}

Subspace column_space(const Matrix& m) {
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return Subspace::span(m.rows(), cols);
}

Subspace sum_of(std::size_t ambient, std::span<const Subspace> parts) {
  std::vector<Vec> all;
  for (const auto& p : parts) all.insert(all.end(), p.basis().begin(), p.basis().end());
  return Subspace::span(ambient, all);
}

bool is_direct_sum(std::span<const Subspace> parts) {
  if (parts.empty()) return true;
  std::size_t total = 0;
  for (const auto& p : parts) total += p.dim();
  return total == sum_of(parts.front().ambient_dim(), parts).dim();
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::vector<Q> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && h3l::is_zero(c_.back())) c_.pop_back();
}

Q Polynomial::operator()(const Q& t) const {
  Q acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Q> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(Q(static_cast<long>(i)) * c_[i]);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) return *this;
  std::vector<Q> m = c_;
  Q inv = 1 / c_.back();
  for (auto& x : m) x *= inv;
  return Polynomial(std::move(m));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Q> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Q> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return Polynomial(std::move(r));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Q> rem = a.c_;
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Q> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  for (int d = a.degree(); d >= b.degree(); --d) {
    Q f = rem[static_cast<std::size_t>(d)] / b.lead();
    if (h3l::is_zero(f)) continue;
    auto shift = static_cast<std::size_t>(d - b.degree());
    quo[shift] = f;
    for (std::size_t i = 0; i < b.c_.size(); ++i) rem[shift + i] -= f * b.c_[i];
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial characteristic_polynomial(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  const std::size_t n = m.rows();
  // c[k] is the coefficient of t^k; c[n] = 1.
  std::vector<Q> c(n + 1);
  c[n] = 1;
  Matrix mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    Matrix am = m * mk;
    Q tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Q(static_cast<long>(k));
  }
  return Polynomial(std::move(c));
}

namespace {

Z pollard_rho(const Z& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long seed = 2;; ++seed) {
    Z x = seed, y = seed, d = 1;
    auto f = [&](const Z& v) { return Z((v * v + 1) % n); };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      Z diff = x - y;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(Z n, std::map<Z, int>& out) {
  if (n < 0) n = -n;
  if (n <= 1) return;
  for (unsigned long p = 2; p < 10000; ++p) {
    if (Z(p) * p > n) break;
    while (n % p == 0) {
      ++out[Z(p)];
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
    ++out[n];
    return;
  }
  Z d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::vector<Z> positive_divisors(const Z& n) {
  std::map<Z, int> f;
  factor_into(n, f);
  std::vector<Z> divs{1};
  for (const auto& [p, e] : f) {
    std::size_t base = divs.size();
    Z pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace

std::vector<Q> rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  std::vector<Q> roots;
  // Square-free part keeps coefficients small and roots simple.
  Polynomial g = Polynomial::gcd(p, p.derivative());
  Polynomial sf = g.degree() > 0 ? Polynomial::divmod(p, g).first : p;
  std::vector<Q> c = sf.coeffs();
  if (is_zero(c.front())) {
    roots.push_back(0);
    std::size_t k = 0;
    while (is_zero(c[k])) ++k;
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(k));
  }
  if (c.size() > 1) {
    // Integer rescaling: multiply through by the lcm of denominators.
    Z l = 1;
    for (const auto& q : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Z> ic;
    for (const auto& q : c) ic.push_back(Z(q * l));
    Polynomial ip(std::vector<Q>(ic.begin(), ic.end()));
    for (const Z& num : positive_divisors(ic.front()))
      for (const Z& den : positive_divisors(ic.back()))
        for (int s : {1, -1}) {
          Q cand(num * s, den);
          cand.canonicalize();
          if (is_zero(ip(cand))) roots.push_back(cand);
        }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::vector<Q> rational_spectrum(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("rational_spectrum: matrix is not square");
  if (m.rows() == 0) return {};
  return rational_roots(characteristic_polynomial(m));
}

Subspace eigenspace(const Matrix& m, const Q& lambda) {
  Matrix shifted = m;
  for (std::size_t i = 0; i < m.rows(); ++i) shifted(i, i) -= lambda;
  return kernel(shifted);
}

}  // namespace h3l
