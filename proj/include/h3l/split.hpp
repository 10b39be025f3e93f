#pragma once

// Split structure of a regular Hom 3-Lie-Rinehart algebra relative to a
// candidate splitting Cartan subalgebra H: root and weight spaces, the
// connection relation on roots, class ideals and the decomposition checks.
//
// Roots and weights are antisymmetric bilinear forms on H, stored as
// matrices on the canonical (reduced echelon) basis of H.

#include "h3l/rinehart.hpp"

#include <stdexcept>

namespace h3l {

class SplitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RootForm {
  Matrix matrix;  // h x h, antisymmetric

  static RootForm zero(std::size_t h) { return {Matrix(h, h)}; }
  std::size_t dim() const { return matrix.rows(); }
  /// h1^T M h2 for coordinate vectors on the H basis.
  Q value(const Vec& h1, const Vec& h2) const;
  bool is_zero() const;
  bool operator==(const RootForm& o) const = default;
  /// Lexicographic on the upper triangle; used for deterministic ordering.
  bool operator<(const RootForm& o) const;
};

RootForm operator+(const RootForm& a, const RootForm& b);
RootForm operator-(const RootForm& a, const RootForm& b);
RootForm operator-(const RootForm& a);

/// gamma(alpha^k, alpha^k): matrix (AH^k)^T M AH^k.
RootForm pullback_root(const RootForm& g, const Matrix& AH, int k);

struct FormSpace {
  RootForm form;
  Subspace space;
};

struct RootDecomposition {
  Subspace H;           // in L
  Matrix AH;            // alpha restricted to H, on the H basis
  std::vector<FormSpace> roots;
  bool residual_ok = false;  // L_0 = H

  std::size_t h() const { return H.dim(); }
  std::vector<RootForm> forms() const;
  /// L_g for g in Gamma, H for g = 0, nullopt otherwise.
  std::optional<Subspace> space_of(const RootForm& g) const;
};

struct WeightDecomposition {
  Subspace A0;
  std::vector<FormSpace> weights;

  std::vector<RootForm> forms() const;
  std::optional<Subspace> space_of(const RootForm& l) const;
};

/// Greedy candidate: walk the basis of L and keep e_i whenever the span
/// stays abelian and alpha-stable.
Subspace auto_cartan(const Hom3Lie& L);

/// Simultaneous rational eigenspaces of alpha^{-1} ad(h_i, h_j).
/// Throws SplitError("not abelian" | "H not alpha-stable" | "not split over Q"
/// | "L_0 strictly larger than H" | ...).
RootDecomposition root_decompose(const Hom3Lie& L, const Subspace& H);
/// Same procedure with phi^{-1} rho(h_i, h_j) on A; adds "A not split over Q".
WeightDecomposition weight_decompose(const RinehartBundle& B, const RootDecomposition& dec);

/// Items 1-6 of the root-system theorem, k in [-kmax, kmax] for items 1, 2.
SuiteReport check_root_properties(const RinehartBundle& B, const RootDecomposition& dec,
                                  const WeightDecomposition& wdec, int kmax = 2);

// ---- connections -----------------------------------------------------------

struct Connection {
  bool connected = false;
  bool via_orbit = false;       // target is +-source(alpha^k, alpha^k)
  std::vector<RootForm> chain;  // gamma_1 .. gamma_{2n+1} otherwise
};

/// Connection between two roots. States are +-Gamma, steps add an unordered
/// pair from +-Gamma, +-Lambda, {0} and pull back by alpha^{-1}.
/// Throws std::invalid_argument when either form is not in Gamma.
Connection connected(const std::vector<RootForm>& gamma, const std::vector<RootForm>& lambda,
                     const Matrix& AH, const RootForm& from, const RootForm& to);
/// The same search with +-Lambda as the state space, for weights.
Connection weight_connected(const std::vector<RootForm>& gamma, const std::vector<RootForm>& lambda,
                            const Matrix& AH, const RootForm& from, const RootForm& to);

/// gamma_1(alpha^{-i}) + sum_{j=1..i} (gamma_{2j} + gamma_{2j+1})(alpha^{-i-1+j}),
/// evaluated directly from the chain.
RootForm literal_bar_gamma(const std::vector<RootForm>& chain, const Matrix& AH, int i);

struct RootClassPartition {
  std::vector<std::vector<std::size_t>> classes;  // indices into the root list
  bool equivalence_ok = false;  // relation was reflexive, symmetric, transitive
};

RootClassPartition root_classes(const std::vector<RootForm>& gamma,
                                const std::vector<RootForm>& lambda, const Matrix& AH);
RootClassPartition weight_classes(const std::vector<RootForm>& gamma,
                                  const std::vector<RootForm>& lambda, const Matrix& AH);

// ---- class ideals ----------------------------------------------------------

struct ClassIdeal {
  std::vector<std::size_t> members;  // root indices
  Subspace L0;                       // L_{0,[g]}
  Subspace Lclass;                   // sum of L_xi over the class
  Subspace I;                        // L0 + Lclass
  bool l0_in_H = false;
  bool l0_meets_trivially = false;
  std::uint64_t skipped = 0;  // generators leaving the window
};

ClassIdeal class_ideal(const RinehartBundle& B, const RootDecomposition& dec,
                       const WeightDecomposition& wdec, const std::vector<std::size_t>& members);

/// Closure under the bracket, alpha and A; the ideal laws; and the
/// annihilation of brackets mixing different classes.
SuiteReport check_class_ideal_laws(const RinehartBundle& B, const std::vector<ClassIdeal>& ideals);

struct DirectSumResult {
  SuiteReport report;
  bool z_rho_zero = false;
  bool h_generated = false;
  std::optional<Vec> gap;  // a vector of H outside the generated span
  bool asserted = false;   // both hypotheses hold and the sum is direct and exhausts L
};

DirectSumResult direct_sum_decompose(const RinehartBundle& B, const RootDecomposition& dec,
                                     const WeightDecomposition& wdec,
                                     const std::vector<ClassIdeal>& ideals);

struct IdealSplit {
  Subspace in_H;
  std::vector<Subspace> components;  // I meet L_g, per root
  SuiteReport report;
};

/// Components of an alpha-stable ideal along H and the root spaces.
IdealSplit split_ideal(const RinehartBundle& B, const RootDecomposition& dec, const Subspace& I);

struct WeightClassResult {
  RootClassPartition partition;
  std::vector<Subspace> A0_parts;  // A_{0,[l]}
  std::vector<Subspace> parts;     // A_{0,[l]} + A_{[l]}
  SuiteReport report;
};

WeightClassResult weight_class_decompose(const RinehartBundle& B, const WeightDecomposition& wdec,
                                         const RootDecomposition& dec);

// ---- direct sums of bundles ------------------------------------------------

/// L1 + L2 with block structure. When both coefficient algebras are equal
/// and both rho vanish, A is shared; otherwise A = A1 x A2 with each block
/// acting on its own factor. H is set to H1 + H2 when both are present.
RinehartBundle direct_sum_bundle(const RinehartBundle& B1, const RinehartBundle& B2);

/// Builds the direct sum, decomposes it, compares with the decompositions of
/// the summands, then splits it back along the blocks.
SuiteReport direct_sum_vs_split(const RinehartBundle& B1, const RinehartBundle& B2);

// ---- full pipeline ---------------------------------------------------------

struct SplitAnalysis {
  RootDecomposition dec;
  WeightDecomposition wdec;
  RootClassPartition classes;
  std::vector<ClassIdeal> ideals;
  SuiteReport root_props;
  SuiteReport ideal_laws;
  DirectSumResult direct_sum;
  WeightClassResult weight_classes;

  SuiteReport summary() const;
};

/// Throws SplitError when the decomposition itself fails.
SplitAnalysis analyze_split(const RinehartBundle& B, const Subspace& H);

nlohmann::json to_json(const SplitAnalysis& s, const RinehartBundle& B);
std::string to_text(const SplitAnalysis& s, const RinehartBundle& B);

}  // namespace h3l
