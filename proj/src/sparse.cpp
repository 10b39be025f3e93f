#include "h3l/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace h3l {

SVec SVec::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  SVec r;
  for (auto& [i, c] : entries) {
    if (!r.e_.empty() && r.e_.back().first == i)
      r.e_.back().second += c;
    else
      r.e_.emplace_back(i, std::move(c));
  }
  std::erase_if(r.e_, [](const Entry& e) { return is_zero(e.second); });
  return r;
}

SVec SVec::unit(std::uint32_t i, const Q& c) {
  SVec r;
  if (!is_zero(c)) r.e_.emplace_back(i, c);
  return r;
}

SVec SVec::from_dense(const Vec& v) {
  SVec r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) r.e_.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return r;
}

Vec SVec::to_dense(std::size_t n) const {
  Vec v(n);
  for (const auto& [i, c] : e_) {
    if (i >= n) throw std::out_of_range("sparse index beyond dimension");
    v[i] = c;
  }
  return v;
}

Q SVec::coeff(std::uint32_t i) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), i,
                             [](const Entry& e, std::uint32_t k) { return e.first < k; });
  return (it != e_.end() && it->first == i) ? it->second : Q(0);
}

void SVec::add_scaled(const SVec& o, const Q& s) {
  if (o.e_.empty() || is_zero(s)) return;
  std::vector<Entry> out;
  out.reserve(e_.size() + o.e_.size());
  auto a = e_.begin();
  auto b = o.e_.begin();
  while (a != e_.end() || b != o.e_.end()) {
    if (b == o.e_.end() || (a != e_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == e_.end() || b->first < a->first) {
      out.emplace_back(b->first, s * b->second);
      ++b;
    } else {
      Q c = a->second + s * b->second;
      if (!is_zero(c)) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  e_ = std::move(out);
}

SVec SVec::scaled(const Q& s) const {
  if (is_zero(s)) return {};
  SVec r = *this;
  for (auto& e : r.e_) e.second *= s;
  return r;
}

SVec operator+(const SVec& a, const SVec& b) {
  SVec r = a;
  r.add_scaled(b, 1);
  return r;
}

SVec operator-(const SVec& a, const SVec& b) {
  SVec r = a;
  r.add_scaled(b, -1);
  return r;
}

// ---------------------------------------------------------------- LinMap

LinMap::LinMap(std::size_t in, std::size_t out) : out_(out), cols_(in, SVec{}) {}

LinMap LinMap::identity(std::size_t n) { return scalar(n, 1); }

LinMap LinMap::scalar(std::size_t n, const Q& c) {
  LinMap m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.cols_[j] = SVec::unit(static_cast<std::uint32_t>(j), c);
  return m;
}

LinMap LinMap::from_matrix(const Matrix& mat) {
  LinMap m(mat.cols(), mat.rows());
  for (std::size_t j = 0; j < mat.cols(); ++j) m.cols_[j] = SVec::from_dense(mat.column(j));
  return m;
}

bool LinMap::total() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const auto& c) { return c.has_value(); });
}

void LinMap::set_col(std::size_t j, SVec v) {
  if (v.extent() > out_) throw std::out_of_range("column entry beyond output dimension");
  cols_.at(j) = std::move(v);
}

std::vector<std::size_t> LinMap::undefined_columns() const {
  std::vector<std::size_t> r;
  for (std::size_t j = 0; j < cols_.size(); ++j)
    if (!cols_[j]) r.push_back(j);
  return r;
}

std::optional<SVec> LinMap::apply(const SVec& v) const {
  SVec r;
  for (const auto& [j, c] : v) {
    if (j >= cols_.size()) throw std::out_of_range("vector index beyond map input dimension");
    if (!cols_[j]) return std::nullopt;
    r.add_scaled(*cols_[j], c);
  }
  return r;
}

Matrix LinMap::to_matrix() const {
  Matrix m(out_, cols_.size());
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    if (!cols_[j]) throw std::domain_error("linear map has an undefined column");
    for (const auto& [i, c] : *cols_[j]) m(i, j) = c;
  }
  return m;
}

bool LinMap::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(),
                     [](const auto& c) { return !c || c->empty(); });
}

LinMap LinMap::compose(const LinMap& inner) const {
  if (inner.out_ != in_dim()) throw std::invalid_argument("composition shape mismatch");
  LinMap r(inner.in_dim(), out_);
  for (std::size_t j = 0; j < inner.in_dim(); ++j) {
    if (!inner.cols_[j]) {
      r.cols_[j].reset();
      continue;
    }
    r.cols_[j] = apply(*inner.cols_[j]);
  }
  return r;
}

LinMap LinMap::scaled(const Q& s) const {
  LinMap r = *this;
  for (auto& c : r.cols_)
    if (c) *c = c->scaled(s);
  return r;
}

LinMap operator+(const LinMap& a, const LinMap& b) {
  if (a.in_dim() != b.in_dim() || a.out_ != b.out_)
    throw std::invalid_argument("linear map shape mismatch");
  LinMap r(a.in_dim(), a.out_);
  for (std::size_t j = 0; j < a.in_dim(); ++j) {
    if (!a.cols_[j] || !b.cols_[j])
      r.cols_[j].reset();
    else
      r.cols_[j] = *a.cols_[j] + *b.cols_[j];
  }
  return r;
}

LinMap operator-(const LinMap& a, const LinMap& b) { return a + b.scaled(-1); }

// ---------------------------------------------------------------- partial solve

Subspace partial_kernel(std::size_t unknowns, const std::vector<LinMap>& constraints) {
  for (const auto& c : constraints)
    if (c.in_dim() != unknowns) throw std::invalid_argument("constraint shape mismatch");

  std::vector<bool> support(unknowns, true);
  Subspace sol = Subspace::full(unknowns);
  while (true) {
    std::vector<Vec> rows;
    for (const auto& c : constraints) {
      bool usable = true;
      for (std::size_t j = 0; j < unknowns && usable; ++j)
        if (support[j] && !c.defined(j)) usable = false;
      if (!usable) continue;
      std::vector<Vec> block(c.out_dim(), Vec(unknowns));
      bool any = false;
      for (std::size_t j = 0; j < unknowns; ++j) {
        if (!support[j]) continue;
        for (const auto& [i, v] : c.col(j)) {
          block[i][j] = v;
          any = true;
        }
      }
      if (!any) continue;
      for (auto& r : block)
        if (!is_zero(r)) rows.push_back(std::move(r));
    }
    // Unknowns outside the support are pinned to zero.
    for (std::size_t j = 0; j < unknowns; ++j)
      if (!support[j]) rows.push_back(unit_vec(unknowns, j));
    sol = rows.empty() ? Subspace::full(unknowns)
                       : kernel(Matrix::from_rows(rows, unknowns));

    std::vector<bool> next(unknowns, false);
    for (const auto& b : sol.basis())
      for (std::size_t j = 0; j < unknowns; ++j)
        if (!is_zero(b[j])) next[j] = true;
    if (next == support) break;
    support = std::move(next);
  }
  return sol;
}

}  // namespace h3l
