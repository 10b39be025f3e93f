#pragma once

// Parallel enumeration of basis tuples.
//
// A tuple space is a mixed-radix index range. Each index is evaluated
// independently; counts are combined with OpenMP reductions and the smallest
// failing index is kept, so the reported witness does not depend on the
// thread schedule.

#include "h3l/report.hpp"

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace h3l {

enum class Outcome : std::uint8_t { Pass, Fail, Skip, Ignore };

struct ScanTotals {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::uint64_t skipped = 0;
  std::uint64_t first_fail = std::numeric_limits<std::uint64_t>::max();
  bool failed() const { return violations > 0; }
};

/// Mixed-radix decoding; the last digit varies fastest so that index order
/// is lexicographic order on tuples.
class Radix {
 public:
  explicit Radix(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {}
  std::uint64_t count() const {
    std::uint64_t c = 1;
    for (auto s : sizes_) c *= s;
    return c;
  }
  std::size_t digits() const { return sizes_.size(); }
  void decode(std::uint64_t idx, std::size_t* out) const {
    for (std::size_t d = sizes_.size(); d-- > 0;) {
      out[d] = static_cast<std::size_t>(idx % sizes_[d]);
      idx /= sizes_[d];
    }
  }

 private:
  std::vector<std::size_t> sizes_;
};

/// Evaluates fn(idx) for idx in [0, count). fn must not throw.
template <class F>
ScanTotals scan_indices(std::uint64_t count, F&& fn) {
  std::uint64_t checked = 0, violations = 0, skipped = 0;
  std::uint64_t first = std::numeric_limits<std::uint64_t>::max();
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 256) reduction(+ : checked, violations, skipped) \
    reduction(min : first)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::uint64_t>(i);
    switch (fn(idx)) {
      case Outcome::Pass:
        ++checked;
        break;
      case Outcome::Fail:
        ++checked;
        ++violations;
        if (idx < first) first = idx;
        break;
      case Outcome::Skip:
        ++skipped;
        break;
      case Outcome::Ignore:
        break;
    }
  }
  return {checked, violations, skipped, first};
}

/// Serial counterpart of scan_indices with identical results.
template <class F>
ScanTotals scan_indices_serial(std::uint64_t count, F&& fn) {
  ScanTotals t;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    switch (fn(idx)) {
      case Outcome::Pass: ++t.checked; break;
      case Outcome::Fail:
        ++t.checked;
        ++t.violations;
        if (idx < t.first_fail) t.first_fail = idx;
        break;
      case Outcome::Skip: ++t.skipped; break;
      case Outcome::Ignore: break;
    }
  }
  return t;
}

inline CheckReport report_from(std::string name, const ScanTotals& t) {
  CheckReport r;
  r.name = std::move(name);
  r.status = t.failed() ? Status::Fail : Status::Pass;
  r.checked = t.checked;
  r.violations = t.violations;
  r.skipped = t.skipped;
  return r;
}

}  // namespace h3l
