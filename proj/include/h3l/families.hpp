#pragma once

// Seeded random instances for the regression suites: twisted and tensor
// bundles over D4 and the toy algebra with truncated polynomial
// coefficients, and representations of D4 extensions that satisfy hr2.

#include "h3l/rinehart.hpp"

#include <cstdint>
#include <optional>

namespace h3l {

/// Q[z]/(z^p) on the basis 1, z, .., z^{p-1} with phi(z) = s z.
CommAlgebra truncated_poly(int p, const Q& s);

/// The Euler operator z d/dz on Q[z]/(z^p), a derivation of it.
LinMap euler_operator(int p);

struct Candidate {
  RinehartBundle bundle;
  std::string recipe;  // short human description of the draw
};

/// tensor_extension over a random multiplicative alpha on D4 or the toy
/// algebra, A = Q[z]/(z^p) with p in {2, 3}, rho = c_ij phi z d/dz on pairs
/// allowed by hr1. nullopt when the draw violates a hypothesis.
std::optional<Candidate> random_tensor_bundle(std::uint64_t seed);

/// twist of a classical tensor bundle by a random diagonal automorphism
/// pair. nullopt when the twist hypotheses fail for the draw.
std::optional<Candidate> random_twist_bundle(std::uint64_t seed);

struct RepCandidate {
  Hom3Lie L;
  HomRepresentation rep;
  std::string recipe;
};

/// L = D4 + Q^r (r in 0..2, extra basis abelian), rho(e_i, e_j) = c_ij E
/// with rho(e4, .) = 0 and a random E on V = Q^2 or Q^3; or the adjoint
/// representation of a multiplicative twist of D4.
RepCandidate random_representation(std::uint64_t seed);

}  // namespace h3l
