#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "a22/scalar.hpp"

namespace a22 {

using ExactVector = std::vector<Scalar>;

// Dense row-major matrix over one exact scalar domain.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols, Domain domain);
  ExactMatrix(std::initializer_list<std::initializer_list<long>> rows, Domain domain);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  // Domain of the entries; DomainError if they disagree.
  Domain common_domain() const;

  ExactVector row(std::size_t r) const;
  ExactVector apply(const ExactVector& v) const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

struct RrefResult {
  ExactMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
  // One vector per non-pivot column c, with entry 1 at c.
  std::vector<ExactVector> kernel_basis;
};

// Reduced row-echelon form with leftmost-nonzero pivoting, pivots scaled to 1.
// Zero rows are kept at the bottom so `reduced` has the input shape.
RrefResult rref(const ExactMatrix& m);

}  // namespace a22
