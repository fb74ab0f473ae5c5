#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pachner/scalar.hpp"

namespace pachner {

/// Dense row-major matrix over exact rationals.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Scalar> multiply(const std::vector<Scalar>& x) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row, in order.
std::vector<std::size_t> reduce_to_rref(RationalMatrix& m);

std::size_t rank(RationalMatrix m);

/// Some exact solution of A x = b with every free variable set to zero, or
/// nullopt when the system is inconsistent.
std::optional<std::vector<Scalar>> solve(const RationalMatrix& a, const std::vector<Scalar>& b);

}  // namespace pachner
