#pragma once

// Coefficient algebras, phi-derivations, A-module structures and the
// (Hom) 3-Lie-Rinehart axiom suites.
//
// A bundle is the tuple (L, A, bracket, phi, alpha, rho) together with the
// A-module structure on L. Windowed corpora may leave products, actions or
// brackets undefined; tuples that need such a value are skipped and counted.

#include "h3l/algebra.hpp"
#include "h3l/rep.hpp"

#include <json.hpp>

namespace h3l {

/// Commutative associative algebra by structure constants, with an
/// endomorphism phi and an optional unit.
class CommAlgebra {
 public:
  CommAlgebra() = default;
  /// dim-dimensional algebra with zero multiplication and phi = identity.
  explicit CommAlgebra(std::size_t dim);
  /// The one-dimensional unital algebra Q.
  static CommAlgebra scalars();

  std::size_t dim() const { return m_; }
  void set_product(std::size_t i, std::size_t j, SVec value);
  void set_undefined(std::size_t i, std::size_t j);
  /// e_i * e_j; nullopt when undefined.
  const std::optional<SVec>& product(std::size_t i, std::size_t j) const { return mult_[i * m_ + j]; }
  std::optional<SVec> mul(const SVec& a, const SVec& b) const;

  LinMap phi;
  std::optional<SVec> unit;
  std::vector<std::string> labels;
  std::string label(std::size_t i) const;

  bool operator==(const CommAlgebra& o) const = default;

 private:
  std::size_t m_ = 0;
  std::vector<std::optional<SVec>> mult_;  // full symmetric m x m table
};

/// A x L -> L given by one linear map per basis element of A.
class ModuleAction {
 public:
  ModuleAction() = default;
  /// The zero action.
  ModuleAction(std::size_t a_dim, std::size_t l_dim);
  /// Action of A = Q (or its unit) by scalars on L.
  static ModuleAction scalar(std::size_t l_dim);

  std::size_t a_dim() const { return maps_.size(); }
  std::size_t l_dim() const { return n_; }
  void set(std::size_t a, LinMap m);
  const LinMap& of(std::size_t a) const { return maps_[a]; }
  /// e_a . x
  std::optional<SVec> apply(std::size_t a, const SVec& x) const { return maps_[a].apply(x); }
  std::optional<SVec> act(const SVec& a, const SVec& x) const;

  bool operator==(const ModuleAction& o) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<LinMap> maps_;
};

struct BundleFlags {
  bool weak = false;
  bool full = false;
  bool regular = false;
  bool operator==(const BundleFlags&) const = default;
};

struct RinehartBundle {
  std::string name;
  Hom3Lie L;
  CommAlgebra A;
  ModuleAction action;
  PairAction rho;
  BundleFlags flags;                    // declared, never trusted
  std::optional<std::vector<Vec>> H;    // candidate splitting Cartan subalgebra
  nlohmann::json metadata = nlohmann::json::object();

  HomRepresentation representation() const { return {rho, A.phi}; }
  /// Throws std::invalid_argument naming the first inconsistent shape.
  void validate_shapes() const;
};

/// D(ab) = phi(a)D(b) + D(a)phi(b) on basis pairs ("hd1") and the ternary
/// consequence on basis triples ("hd2").
SuiteReport check_phi_derivation(const CommAlgebra& A, const LinMap& D);

/// Algebra-level checks on A alone: phi multiplicative, associativity, unit.
SuiteReport check_coefficients(const CommAlgebra& A);

/// Everything required of a weak Hom 3-Lie-Rinehart algebra.
SuiteReport check_weak_rinehart(const RinehartBundle& B);
/// A-linearity of rho in each argument: rho(ax, y) and rho(x, ay) equal phi(a) rho(x, y).
SuiteReport check_a_linearity(const RinehartBundle& B);
/// Weak suite followed by the A-linearity checks (blocked if weak fails).
SuiteReport check_full_rinehart(const RinehartBundle& B);

/// The six consequences of the axioms, "ho1" .. "ho6".
///
/// Two of them contain the bracket [x2, x4, x1], which repeats x2 and breaks
/// the index pattern of the surrounding terms. The default reading replaces
/// it by [x3, x4, x1]; AsPrinted keeps the original for comparison.
enum class IdentityReading { Corrected, AsPrinted };
SuiteReport check_identity_suite(const RinehartBundle& B,
                                 IdentityReading reading = IdentityReading::Corrected,
                                 bool require_full = true);

/// "lie_ideal": [I,L,L] in I and alpha(I) in I; "a_stable": A I in I;
/// "rho_closure": rho(I, L)(A) L in I. Checked on generators of I.
SuiteReport rinehart_ideal_laws(const RinehartBundle& B, const Subspace& I);
/// All of the above folded into one verdict.
CheckReport rinehart_ideal_check(const RinehartBundle& B, const Subspace& I);

struct KerRho {
  Subspace ker;
  SuiteReport laws;
  CheckReport ideal;  // rinehart_ideal_check on ker
  CheckReport alpha_stable;
};
KerRho ker_rho_ideal(const RinehartBundle& B);

struct Centers {
  Subspace z_l_a;       // {a : a x = 0 for all x}
  Subspace z_rho_l;     // joint solve of center and kernel conditions
  bool consistent = false;  // z_rho_l == center(L) meet Ker rho
};
Centers centers(const RinehartBundle& B);

}  // namespace h3l
