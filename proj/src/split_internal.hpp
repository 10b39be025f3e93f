#pragma once

#include "h3l/split.hpp"

#include <algorithm>
#include <functional>

namespace h3l::detail {

inline SVec sv(const Vec& v) { return SVec::from_dense(v); }
inline Vec dv(const SVec& v, std::size_t n) { return v.to_dense(n); }

inline bool contains_form(const std::vector<RootForm>& set, const RootForm& g) {
  return std::find(set.begin(), set.end(), g) != set.end();
}

/// +-set without duplicates, in first-seen order.
inline std::vector<RootForm> plus_minus(const std::vector<RootForm>& set) {
  std::vector<RootForm> out;
  for (const auto& g : set)
    for (const RootForm& s : {g, -g})
      if (!contains_form(out, s)) out.push_back(s);
  return out;
}

/// Coordinates of h on the H basis; h must lie in H.
inline Vec h_coords(const Subspace& H, const Vec& h) { return *H.coordinates(h); }

/// Records one generator-level inclusion test in a report.
struct Tally {
  CheckReport r;
  explicit Tally(std::string name) { r.name = std::move(name); }
  void skip() { ++r.skipped; }
  void test(bool ok, const std::function<Witness()>& witness) {
    ++r.checked;
    if (ok) return;
    ++r.violations;
    r.status = Status::Fail;
    if (!r.witness) r.witness = witness();
  }
  CheckReport done() { return std::move(r); }
};

}  // namespace h3l::detail
