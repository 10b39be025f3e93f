#include "h3l/checking.hpp"

#include "h3l/algebra.hpp"

#include <stdexcept>

namespace h3l {

TupleSpace& TupleSpace::any(std::size_t n, std::size_t k) {
  for (std::size_t r = 0; r < k; ++r) {
    Group g{1, {}};
    for (std::size_t i = 0; i < n; ++i) g.flat.push_back(i);
    groups_.push_back(std::move(g));
  }
  arity_ += k;
  return *this;
}

TupleSpace& TupleSpace::increasing(std::size_t n, std::size_t k) {
  Group g{k, {}};
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  if (k <= n) {
    while (true) {
      g.flat.insert(g.flat.end(), c.begin(), c.end());
      std::size_t pos = k;
      while (pos > 0 && c[pos - 1] == n - k + pos - 1) --pos;
      if (pos == 0) break;
      ++c[pos - 1];
      for (std::size_t i = pos; i < k; ++i) c[i] = c[i - 1] + 1;
      if (k == 0) break;
    }
  }
  groups_.push_back(std::move(g));
  arity_ += k;
  return *this;
}

std::uint64_t TupleSpace::count() const {
  std::uint64_t c = 1;
  for (const auto& g : groups_) c *= g.size();
  return c;
}

void TupleSpace::decode(std::uint64_t idx, std::size_t* out) const {
  std::size_t pos = arity_;
  for (std::size_t gi = groups_.size(); gi-- > 0;) {
    const Group& g = groups_[gi];
    const std::size_t sz = g.size();
    const std::size_t choice = static_cast<std::size_t>(idx % sz);
    idx /= sz;
    pos -= g.k;
    for (std::size_t j = 0; j < g.k; ++j) out[pos + j] = g.flat[choice * g.k + j];
  }
}

CheckReport run_check(std::string name, const TupleSpace& space, const SideEval& eval,
                      const TupleNames& names, const std::vector<std::string>& labels) {
  const std::size_t arity = space.arity();
  if (arity > 16) throw std::invalid_argument("tuple arity too large");
  auto totals = scan_indices(space.count(), [&](std::uint64_t idx) {
    std::size_t t[16];
    space.decode(idx, t);
    Sides s = eval(t);
    if (!s.evaluable()) return Outcome::Skip;
    return *s.lhs == *s.rhs ? Outcome::Pass : Outcome::Fail;
  });
  CheckReport r = report_from(std::move(name), totals);
  if (totals.failed()) {
    std::size_t t[16];
    space.decode(totals.first_fail, t);
    Sides s = eval(t);
    r.witness = Witness{names(t), "lhs = " + format_vec(*s.lhs, labels) +
                                      ", rhs = " + format_vec(*s.rhs, labels)};
  }
  return r;
}

}  // namespace h3l
