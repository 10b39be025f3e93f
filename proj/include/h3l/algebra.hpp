#pragma once

// Hom 3-Lie algebras given by structure constants.
//
// Every checker works on basis tuples. All identities involved are
// multilinear, so they hold for all vectors once they hold on basis
// elements; where both sides are antisymmetric in a group of arguments only
// increasing index tuples in that group are enumerated.

#include "h3l/parallel.hpp"
#include "h3l/report.hpp"
#include "h3l/sparse.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace h3l {

/// Antisymmetric 3-ary structure constants. Only [e_i, e_j, e_k] with
/// i < j < k is stored; other orders use the permutation sign and repeated
/// indices give zero. An entry may be marked undefined (outside a window).
class Bracket3 {
 public:
  Bracket3() = default;
  explicit Bracket3(std::size_t n);

  std::size_t dim() const { return n_; }

  /// Sets [e_i, e_j, e_k] for distinct indices in any order.
  void set(std::size_t i, std::size_t j, std::size_t k, SVec value);
  void set_undefined(std::size_t i, std::size_t j, std::size_t k);

  struct Slot {
    int sign = 0;  // 0: the bracket is zero
    const SVec* value = nullptr;
    bool undefined = false;
  };
  Slot at(std::size_t i, std::size_t j, std::size_t k) const {
    const std::int32_t s = slot_[(i * n_ + j) * n_ + k];
    if (s == 0) return {};
    const auto id = static_cast<std::size_t>((s > 0 ? s : -s) - 1);
    if (!values_[id]) return {0, nullptr, true};
    if (values_[id]->empty()) return {};
    return {s > 0 ? 1 : -1, &*values_[id], false};
  }
  /// Signed value of [e_i, e_j, e_k]; nullopt when undefined.
  std::optional<SVec> basis(std::size_t i, std::size_t j, std::size_t k) const;

  struct Entry {
    std::array<std::uint32_t, 3> idx;  // strictly increasing
    std::optional<SVec> value;         // nullopt: undefined
  };
  /// Stored entries sorted by index triple; zero values are omitted.
  std::vector<Entry> entries() const;

  bool operator==(const Bracket3& o) const;

 private:
  std::int32_t& slot(std::size_t i, std::size_t j, std::size_t k) {
    return slot_[(i * n_ + j) * n_ + k];
  }
  void store(std::size_t i, std::size_t j, std::size_t k, std::optional<SVec> v);

  std::size_t n_ = 0;
  std::vector<std::int32_t> slot_;
  std::vector<std::optional<SVec>> values_;
  std::vector<std::array<std::uint32_t, 3>> keys_;
};

/// Trilinear extension of the structure constants; nullopt when an
/// undefined entry is needed.
std::optional<SVec> bracket(const Bracket3& b, const SVec& u, const SVec& v, const SVec& w);

struct Hom3Lie {
  Bracket3 bracket;
  LinMap alpha;
  std::vector<std::string> labels;  // basis names, used in reports

  Hom3Lie() = default;
  /// Abelian algebra of dimension n with alpha = identity and labels e1..en.
  explicit Hom3Lie(std::size_t n);

  std::size_t dim() const { return bracket.dim(); }
  std::string label(std::size_t i) const;
};

/// Bracket of dense coordinate vectors. Throws std::invalid_argument on a
/// length mismatch and std::domain_error when the window is left.
Vec bracket_eval(const Hom3Lie& alg, const Vec& u, const Vec& v, const Vec& w);

/// Matrix of z -> [x, y, z]; columns leaving the window are undefined.
LinMap ad(const Hom3Lie& alg, const SVec& x, const SVec& y);

/// [[x1,x2,x3],y2,y3] = [[x1,y2,y3],x2,x3] + [[x2,y2,y3],x3,x1] + [[x3,y2,y3],x1,x2]
CheckReport check_jacobi(const Hom3Lie& alg);
/// Hom-Jacobi identity twisted by alpha.
CheckReport check_hom_jacobi(const Hom3Lie& alg);
/// alpha([x,y,z]) = [alpha x, alpha y, alpha z] on basis triples.
CheckReport check_multiplicative(const Hom3Lie& alg);
/// Multiplicative and alpha invertible.
bool is_regular(const Hom3Lie& alg);

/// {x : [x, e_j, e_k] = 0 for all j < k}, solved within the window.
Subspace center(const Hom3Lie& alg);
/// [S,S,S] in S and alpha(S) in S.
CheckReport check_subalgebra(const Hom3Lie& alg, const Subspace& s);
/// [S,L,L] in S and alpha(S) in S.
CheckReport check_ideal(const Hom3Lie& alg, const Subspace& s);
inline bool is_subalgebra(const Hom3Lie& alg, const Subspace& s) { return check_subalgebra(alg, s).passed(); }
inline bool is_ideal(const Hom3Lie& alg, const Subspace& s) { return check_ideal(alg, s).passed(); }

std::string format_vec(const SVec& v, const std::vector<std::string>& labels);

namespace reference {

// Serial brute force over all ordered basis tuples, using dense trilinear
// expansion. Kept as an oracle for the parallel checkers.
CheckReport check_jacobi(const Hom3Lie& alg);
CheckReport check_hom_jacobi(const Hom3Lie& alg);

}  // namespace reference

}  // namespace h3l
