#pragma once

// JSON bundle files. Rationals are "p/q" strings, sparse vectors are arrays
// of [index, "p/q"] pairs and an undefined value (outside a window) is null.
// save_bundle emits a canonical form: sorted keys, two-space indentation.

#include "h3l/rinehart.hpp"

#include <stdexcept>
#include <string>

namespace h3l {

inline constexpr const char* kBundleFormat = "h3l-bundle/1";

class BundleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json bundle_to_json(const RinehartBundle& B);
/// Throws BundleError naming the first inconsistency.
RinehartBundle bundle_from_json(const nlohmann::json& j);

std::string dump_bundle(const RinehartBundle& B);
void save_bundle(const RinehartBundle& B, const std::string& path);

/// Parses, validates and re-verifies every declared flag; a declared flag
/// that does not hold is a BundleError.
RinehartBundle load_bundle(const std::string& path, bool verify_flags = true);

/// The checks behind each declared flag ("weak", "full", "regular").
SuiteReport verify_declared_flags(const RinehartBundle& B);

/// H basis vectors from a file holding [[ "p/q", ... ], ...].
std::vector<Vec> load_vectors(const std::string& path, std::size_t dim);

}  // namespace h3l
