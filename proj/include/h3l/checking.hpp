#pragma once

// Tuple spaces and the generic "lhs == rhs on every tuple" driver shared by
// the representation and Rinehart checkers.

#include "h3l/parallel.hpp"
#include "h3l/sparse.hpp"

#include <functional>
#include <string>
#include <vector>

namespace h3l {

/// Product of index groups. A group is either k free indices below n or a
/// strictly increasing k-subset of {0..n-1}. Decoding is lexicographic.
class TupleSpace {
 public:
  TupleSpace& any(std::size_t n, std::size_t k = 1);
  TupleSpace& increasing(std::size_t n, std::size_t k);

  std::size_t arity() const { return arity_; }
  std::uint64_t count() const;
  void decode(std::uint64_t idx, std::size_t* out) const;

 private:
  struct Group {
    std::size_t k;
    std::vector<std::size_t> flat;  // combos, k entries each
    std::size_t size() const { return k == 0 ? 1 : flat.size() / k; }
  };
  std::vector<Group> groups_;
  std::size_t arity_ = 0;
};

/// Both sides of an identity at one tuple; either side absent means the
/// tuple left the truncation window.
struct Sides {
  std::optional<SVec> lhs;
  std::optional<SVec> rhs;
  bool evaluable() const { return lhs && rhs; }
};

using SideEval = std::function<Sides(const std::size_t*)>;
using TupleNames = std::function<std::vector<std::string>(const std::size_t*)>;

/// Evaluates `eval` on every tuple of `space` in parallel and reports the
/// lexicographically first violation. `labels` names output coordinates.
CheckReport run_check(std::string name, const TupleSpace& space, const SideEval& eval,
                      const TupleNames& names, const std::vector<std::string>& labels);

}  // namespace h3l
