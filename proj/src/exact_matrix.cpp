#include "a22/exact_matrix.hpp"

#include <utility>

#include "a22/errors.hpp"

namespace a22 {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, Domain domain)
    : rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(domain)) {}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<long>> rows, Domain domain)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw PreconditionError("ragged matrix literal");
    for (long v : r) entries_.emplace_back(v, domain);
  }
}

Domain ExactMatrix::common_domain() const {
  if (entries_.empty()) return Domain::rationals();
  const Domain d = entries_.front().domain();
  for (const auto& e : entries_) {
    if (!(e.domain() == d)) throw DomainError("matrix mixes scalar domains");
  }
  return d;
}

ExactVector ExactMatrix::row(std::size_t r) const {
  return ExactVector(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_);
}

ExactVector ExactMatrix::apply(const ExactVector& v) const {
  if (v.size() != cols_) throw PreconditionError("dimension mismatch in matrix-vector product");
  const Domain d = common_domain();
  ExactVector out(rows_, Scalar::zero(d));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

RrefResult rref(const ExactMatrix& m) {
  const Domain d = m.common_domain();
  ExactMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(sel, c), a(row, c));
    }
    const Scalar inv = a(row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const Scalar f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }

  std::vector<ExactVector> kernel;
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    ExactVector v(a.cols(), Scalar::zero(d));
    v[free] = Scalar::one(d);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    kernel.push_back(std::move(v));
  }
  const std::size_t rank = pivots.size();
  return RrefResult{std::move(a), rank, std::move(pivots), std::move(kernel)};
}

}  // namespace a22
