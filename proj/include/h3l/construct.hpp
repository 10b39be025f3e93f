#pragma once

// Builders for new Hom 3-Lie-Rinehart algebras: the (alpha, phi)-twist of a
// classical 3-Lie-Rinehart algebra and the tensor extension A (x) L.
// Both validate their hypotheses first and refuse to build otherwise.

#include "h3l/rinehart.hpp"

#include <stdexcept>

namespace h3l {

class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(const std::string& what, SuiteReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const SuiteReport& report() const { return report_; }

 private:
  SuiteReport report_;
};

struct TwistInput {
  RinehartBundle base;  // alpha = id, phi = id
  LinMap alpha_new;     // on L
  LinMap phi_new;       // on A
};

/// Hypotheses of the twist: base is a classical 3-Lie-Rinehart algebra,
/// alpha_new is a bracket endomorphism, phi_new an algebra endomorphism,
/// rho(alpha x, alpha y) phi = phi rho(x, y) and alpha(a x) = phi(a) alpha(x).
SuiteReport check_twist_input(const TwistInput& in);

/// Bracket alpha o [ , , ], representation phi o rho, twisting maps
/// (alpha_new, phi_new). Throws ConstructionError when a hypothesis fails.
RinehartBundle twist(const TwistInput& in);

/// Hypotheses of the tensor extension: L multiplicative Hom 3-Lie, phi an
/// algebra endomorphism of the associative algebra A, rho(L, L) made of
/// phi-derivations and (A, rho, phi) a Hom-representation.
SuiteReport check_tensor_input(const Hom3Lie& L, const CommAlgebra& A, const PairAction& rho);

/// The bundle on G = A (x) L, basis element a (x) x at index a * dim L + x.
/// A need not be unital; without a unit L does not embed into G.
RinehartBundle tensor_extension(const Hom3Lie& L, const CommAlgebra& A, const PairAction& rho);

}  // namespace h3l
