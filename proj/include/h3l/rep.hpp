#pragma once

// Representations of (Hom) 3-Lie algebras: rho : L ^ L -> gl(V), stored as
// matrices rho(e_i, e_j) for i < j and extended by antisymmetry.

#include "h3l/algebra.hpp"
#include "h3l/checking.hpp"

namespace h3l {

class PairAction {
 public:
  PairAction() = default;
  /// The zero action.
  PairAction(std::size_t source_dim, std::size_t target_dim);

  std::size_t source_dim() const { return n_; }
  std::size_t target_dim() const { return m_; }

  /// Sets rho(e_i, e_j); rho(e_j, e_i) becomes its negative.
  void set(std::size_t i, std::size_t j, LinMap map);
  /// rho(e_i, e_j) for i < j.
  const LinMap& stored(std::size_t i, std::size_t j) const { return maps_[index(i, j)]; }
  LinMap& stored_mut(std::size_t i, std::size_t j) { return maps_[index(i, j)]; }
  /// rho(e_i, e_j) for any i, j (copies).
  LinMap get(std::size_t i, std::size_t j) const;
  bool is_zero() const;

  /// rho(e_i, e_j)(v)
  std::optional<SVec> apply(std::size_t i, std::size_t j, const SVec& v) const;

  bool operator==(const PairAction& o) const = default;

 private:
  std::size_t index(std::size_t i, std::size_t j) const;
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<LinMap> maps_;  // pairs i < j in lexicographic order
};

/// rho(x, y)(v) for arbitrary sparse x, y.
std::optional<SVec> rho_apply(const PairAction& rho, const SVec& x, const SVec& y, const SVec& v);
/// The operator rho(x, y); columns that leave the window are undefined.
LinMap rho_map(const PairAction& rho, const SVec& x, const SVec& y);

struct HomRepresentation {
  PairAction action;
  LinMap phi;
};

/// Classical axioms (alpha = id): commutator identity and the
/// rho([x1,x2,x3], x4) expansion.
SuiteReport check_classical_rep(const Hom3Lie& alg, const PairAction& act);

/// The three Hom-representation axioms, reported as "hr1", "hr2", "hr3".
SuiteReport check_hom_rep(const Hom3Lie& alg, const HomRepresentation& rep);
CheckReport check_hr1(const Hom3Lie& alg, const HomRepresentation& rep);
CheckReport check_hr2(const Hom3Lie& alg, const HomRepresentation& rep);
CheckReport check_hr3(const Hom3Lie& alg, const HomRepresentation& rep);
/// The six-term sum that is equivalent to hr3 in presence of hr2.
CheckReport check_hr4(const Hom3Lie& alg, const HomRepresentation& rep);

struct Hr4Equivalence {
  bool tested = false;  // false when hr2 fails
  bool hr3 = false;
  bool hr4 = false;
  bool agree = false;   // hr3 == hr4
  std::uint64_t tuples = 0;
  std::uint64_t tuple_disagreements = 0;  // per-tuple truth values differing
  std::string note;
};

/// Compares the truth of hr3 and hr4, globally and tuple by tuple.
Hr4Equivalence check_hr4_equivalence(const Hom3Lie& alg, const HomRepresentation& rep);

/// {x : rho(x, e_j) = 0 for all j}.
Subspace kernel_of_rep(const PairAction& rho);

}  // namespace h3l
