#pragma once

// Sparse coordinate vectors and partial linear maps.
//
// Corpus algebras are finite windows of infinite-dimensional spaces, so a
// structure map may send a basis element outside the window. LinMap records
// such columns as undefined; applying the map to a vector that touches an
// undefined column yields std::nullopt instead of a wrong answer.

#include "h3l/linalg.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace h3l {

class SVec {
 public:
  using Entry = std::pair<std::uint32_t, Q>;

  SVec() = default;
  /// Sorts by index, merges duplicates and drops zeros.
  static SVec from_entries(std::vector<Entry> entries);
  static SVec unit(std::uint32_t i, const Q& c = 1);
  static SVec from_dense(const Vec& v);

  Vec to_dense(std::size_t n) const;
  bool empty() const { return e_.empty(); }
  std::size_t nnz() const { return e_.size(); }
  const std::vector<Entry>& entries() const { return e_; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }
  Q coeff(std::uint32_t i) const;
  /// Largest stored index plus one (0 when empty).
  std::size_t extent() const { return e_.empty() ? 0 : e_.back().first + 1; }

  /// this += s * o
  void add_scaled(const SVec& o, const Q& s);
  SVec scaled(const Q& s) const;

  friend SVec operator+(const SVec& a, const SVec& b);
  friend SVec operator-(const SVec& a, const SVec& b);
  bool operator==(const SVec& o) const = default;

 private:
  std::vector<Entry> e_;
};

/// Linear map Q^in -> Q^out stored by columns; a column may be undefined.
class LinMap {
 public:
  LinMap() = default;
  /// The zero map with every column defined.
  LinMap(std::size_t in, std::size_t out);
  static LinMap identity(std::size_t n);
  static LinMap scalar(std::size_t n, const Q& c);
  static LinMap from_matrix(const Matrix& m);

  std::size_t in_dim() const { return cols_.size(); }
  std::size_t out_dim() const { return out_; }

  bool defined(std::size_t j) const { return cols_[j].has_value(); }
  bool total() const;
  /// Column j; must be defined.
  const SVec& col(std::size_t j) const { return *cols_[j]; }
  const std::optional<SVec>& col_opt(std::size_t j) const { return cols_[j]; }
  void set_col(std::size_t j, SVec v);
  void set_undefined(std::size_t j) { cols_[j].reset(); }
  std::vector<std::size_t> undefined_columns() const;

  std::optional<SVec> apply(const SVec& v) const;
  /// Throws std::domain_error when some column is undefined.
  Matrix to_matrix() const;
  bool is_zero() const;  // every defined column is zero

  /// this o inner; a column is undefined when it cannot be evaluated.
  LinMap compose(const LinMap& inner) const;
  LinMap scaled(const Q& s) const;
  friend LinMap operator+(const LinMap& a, const LinMap& b);
  friend LinMap operator-(const LinMap& a, const LinMap& b);
  bool operator==(const LinMap& o) const = default;

 private:
  std::size_t out_ = 0;
  std::vector<std::optional<SVec>> cols_;
};

/// Solution space of {c : C(c) = 0 for every constraint C} where the
/// constraints are partial maps from the same unknown space.
///
/// A constraint only contributes when all its columns on the current support
/// of the solution space are defined. The support shrinks as constraints are
/// added, which can enable further constraints; the loop runs to a fixpoint.
/// The result therefore contains the true solution space of the untruncated
/// problem restricted to the window.
Subspace partial_kernel(std::size_t unknowns, const std::vector<LinMap>& constraints);

}  // namespace h3l
