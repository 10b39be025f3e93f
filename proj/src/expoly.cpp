#include "h3l/expoly.hpp"

#include <vector>

namespace h3l {

ExpPoly::ExpPoly(const Q& constant) { add_term({}, constant); }

ExpPoly ExpPoly::term(const Monomial& m, const Q& c) {
  ExpPoly p;
  p.add_term(m, c);
  return p;
}

Q ExpPoly::coeff(const Monomial& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Q(0) : it->second;
}

void ExpPoly::add_term(const Monomial& m, const Q& c) {
  if (h3l::is_zero(c)) return;
  auto [it, inserted] = t_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (h3l::is_zero(it->second)) t_.erase(it);
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
  ExpPoly r;
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
  return r;
}

ExpPoly operator*(const Q& s, const ExpPoly& a) {
  ExpPoly r;
  for (const auto& [m, c] : a.t_) r.add_term(m, s * c);
  return r;
}

ExpPoly partial(const ExpPoly& f, Var v) {
  ExpPoly r;
  for (const auto& [m, c] : f.terms()) {
    Monomial d = m;
    switch (v) {
      case Var::X:
        if (m.a == 0) continue;
        d.a -= 1;
        r += ExpPoly::term(d, c * m.a);
        break;
      case Var::Y:
        if (m.b == 0) continue;
        d.b -= 1;
        r += ExpPoly::term(d, c * m.b);
        break;
      case Var::Z:
        if (m.k != 0) r += ExpPoly::term(m, c * m.k);
        if (m.c != 0) {
          d.c -= 1;
          r += ExpPoly::term(d, c * m.c);
        }
        break;
    }
  }
  return r;
}

ExpPoly jacobian_bracket(const ExpPoly& f, const ExpPoly& g, const ExpPoly& h) {
  const ExpPoly* rows[3] = {&f, &g, &h};
  ExpPoly j[3][3];
  for (int r = 0; r < 3; ++r) {
    j[r][0] = partial(*rows[r], Var::X);
    j[r][1] = partial(*rows[r], Var::Y);
    j[r][2] = partial(*rows[r], Var::Z);
  }
  return j[0][0] * (j[1][1] * j[2][2] - j[1][2] * j[2][1]) -
         j[0][1] * (j[1][0] * j[2][2] - j[1][2] * j[2][0]) +
         j[0][2] * (j[1][0] * j[2][1] - j[1][1] * j[2][0]);
}

std::string to_string(const ExpPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(c) + " * x^" + std::to_string(m.a) + " y^" + std::to_string(m.b) +
           " z^" + std::to_string(m.c) + " e^{" + std::to_string(m.k) + " z}";
  }
  return out;
}

std::string monomial_label(const Monomial& m) {
  std::vector<std::string> parts;
  auto power = [&](const char* v, int e) {
    if (e == 1) parts.emplace_back(v);
    if (e > 1) parts.push_back(std::string(v) + "^" + std::to_string(e));
  };
  power("x", m.a);
  power("y", m.b);
  power("z", m.c);
  if (m.k != 0) parts.push_back("e^{" + (m.k == 1 ? std::string() : m.k == -1 ? std::string("-") : std::to_string(m.k)) + "z}");
  if (parts.empty()) return "1";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += "*" + parts[i];
  return s;
}

}  // namespace h3l
