#pragma once

// Dense exact linear algebra over Q: matrices, canonical subspaces,
// characteristic polynomials and rational eigen-data.

#include "h3l/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace h3l {

using Vec = std::vector<Q>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Q& s, const Vec& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Q& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Q& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  Matrix transpose() const;

  bool operator==(const Matrix& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Q> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vec operator*(const Matrix& a, const Vec& v);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Q& s, const Matrix& m);

/// Reduced row echelon form; `pivots` receives the pivot column of each nonzero row.
Matrix rref(Matrix m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const Matrix& m);
Q determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);
bool is_invertible(const Matrix& m);
Matrix power(const Matrix& m, int k);  // negative k uses the inverse

/// A subspace of Q^n stored by the reduced row echelon form of a basis.
/// Two equal subspaces always have identical stored bases.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace zero(std::size_t ambient) { return Subspace(ambient); }
  static Subspace full(std::size_t ambient);
  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the stored basis, if v lies in the subspace.
  std::optional<Vec> coordinates(const Vec& v) const;

  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// dim(this) + dim(other) == dim(this + other)
  bool is_direct_sum_with(const Subspace& other) const;
  /// Image of this subspace under a linear map given by a matrix acting on columns.
  Subspace image(const Matrix& m) const;
  /// {v : <v, s> = 0 for all s}; used to compute intersections.
  Subspace annihilator() const;

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
Subspace column_space(const Matrix& m);
/// True when the sum of the parts is direct (dimensions add up).
bool is_direct_sum(std::span<const Subspace> parts);
Subspace sum_of(std::size_t ambient, std::span<const Subspace> parts);

/// Univariate polynomial with coefficients from lowest to highest degree;
/// trailing zeros are trimmed.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Q> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Q>& coeffs() const { return c_; }
  const Q& lead() const { return c_.back(); }

  Q operator()(const Q& t) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  bool operator==(const Polynomial& o) const = default;

  /// Quotient and remainder of a / b; b must be nonzero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  static Polynomial gcd(Polynomial a, Polynomial b);

 private:
  void trim();
  std::vector<Q> c_;
};

/// det(t I - M) by the Faddeev-LeVerrier recurrence; exact over Q.
Polynomial characteristic_polynomial(const Matrix& m);
/// All distinct rational roots, in increasing order.
std::vector<Q> rational_roots(const Polynomial& p);
/// Distinct rational eigenvalues of a square matrix, in increasing order.
std::vector<Q> rational_spectrum(const Matrix& m);
Subspace eigenspace(const Matrix& m, const Q& lambda);

}  // namespace h3l
