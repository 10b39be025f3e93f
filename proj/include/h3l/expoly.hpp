#pragma once

// Exponential polynomials in x, y, z: finite sums of c * x^a y^b z^c e^{kz}
// with rational c, natural a, b, c and integer k. The ring is closed under
// partial derivatives, products and the Jacobian 3-bracket, which makes it a
// finite-support stand-in for smooth functions on R^3.

#include "h3l/rational.hpp"

#include <compare>
#include <map>
#include <string>

namespace h3l {

struct Monomial {
  int a = 0;  // power of x
  int b = 0;  // power of y
  int c = 0;  // power of z
  int k = 0;  // frequency of e^{kz}
  auto operator<=>(const Monomial&) const = default;
  Monomial operator*(const Monomial& o) const { return {a + o.a, b + o.b, c + o.c, k + o.k}; }
};

enum class Var { X, Y, Z };

class ExpPoly {
 public:
  using Terms = std::map<Monomial, Q>;

  ExpPoly() = default;
  ExpPoly(const Q& constant);  // NOLINT(google-explicit-constructor)
  static ExpPoly term(const Monomial& m, const Q& c = 1);
  static ExpPoly x() { return term({1, 0, 0, 0}); }
  static ExpPoly y() { return term({0, 1, 0, 0}); }
  static ExpPoly z() { return term({0, 0, 1, 0}); }
  static ExpPoly exp(int k) { return term({0, 0, 0, k}); }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Q coeff(const Monomial& m) const;

  ExpPoly& operator+=(const ExpPoly& o);
  ExpPoly& operator-=(const ExpPoly& o);
  friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
  friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
  friend ExpPoly operator-(const ExpPoly& a) { return ExpPoly() - a; }
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator*(const Q& s, const ExpPoly& a);
  bool operator==(const ExpPoly& o) const = default;

 private:
  void add_term(const Monomial& m, const Q& c);
  Terms t_;
};

ExpPoly partial(const ExpPoly& f, Var v);

/// det of the 3x3 Jacobian matrix of (f, g, h) with respect to (x, y, z).
ExpPoly jacobian_bracket(const ExpPoly& f, const ExpPoly& g, const ExpPoly& h);

inline ExpPoly multiply(const ExpPoly& a, const ExpPoly& f) { return a * f; }

/// rho_ad(f, g)(a) = [f, g, a]
inline ExpPoly rho_ad(const ExpPoly& f, const ExpPoly& g, const ExpPoly& a) {
  return jacobian_bracket(f, g, a);
}

/// Terms "c * x^a y^b z^c e^{k z}" joined by " + "; "0" for the zero element.
std::string to_string(const ExpPoly& f);
/// Short basis label such as "x*y^2*e^{-3z}" for a unit monomial.
std::string monomial_label(const Monomial& m);

}  // namespace h3l
