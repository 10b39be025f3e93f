#pragma once

// Built-in bundles: truncations of the function-space examples plus a few
// small fixtures. Function spaces are cut to a finite monomial basis; any
// structure value with a monomial outside the basis is recorded as
// undefined rather than truncated.

#include "h3l/expoly.hpp"
#include "h3l/rinehart.hpp"

#include <string>
#include <vector>

namespace h3l {

struct CorpusSpec {
  std::string name;
  int degree_cap = -1;  // -1: generator default
  int window = -1;      // -1: generator default
  std::uint64_t seed = 0;
  std::string variant;  // "rho-prime" only: "poly" (default) or "tb"
};

/// Names accepted by generate_corpus.
const std::vector<std::string>& corpus_names();

/// Throws std::invalid_argument for unknown names or parameters out of
/// bounds (degree cap and window at most 6).
RinehartBundle generate_corpus(const CorpusSpec& spec);

/// A bundle whose L and A are spans of monomials, with the Jacobian bracket,
/// pointwise action and rho(f, g)(a) = rho_scale * [f, g, a].
struct FunctionModel {
  std::string name;
  std::vector<Monomial> l_basis;
  std::vector<Monomial> a_basis;
  Q bracket_scale = 1;
  Q alpha_scale = 1;
  Q rho_scale = 1;
};
RinehartBundle build_function_bundle(const FunctionModel& fm);

/// Coordinates of f on a monomial basis; nullopt when f leaves the span.
std::optional<SVec> expand_on(const std::vector<Monomial>& basis, const ExpPoly& f);

// Fixtures used by tests and the split pipeline.
RinehartBundle d4_bundle();      // [e1,e2,e3] = e4, alpha = id, A = Q
RinehartBundle toy_split();      // [h1,h2,u] = u, alpha = id, A = Q, H = <h1,h2>
RinehartBundle tprime_split(int K, bool with_one = true);

}  // namespace h3l
