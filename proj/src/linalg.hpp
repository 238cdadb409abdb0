#pragma once

#include <optional>
#include <vector>

#include "field.hpp"

namespace idealkit {

// Dense matrix over a field.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const Coeff& zero)
      : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Coeff& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Coeff& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const Coeff& zero() const { return zero_; }

  // Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> rref();
  // Kernel basis; the vector for free column f has a 1 at f and zeros at the other free columns.
  std::vector<std::vector<Coeff>> kernel() const;
  std::size_t rank() const;

 private:
  std::size_t rows_, cols_;
  Coeff zero_;
  std::vector<Coeff> data_;
};

// A solution of A x = b with free variables set to zero, or nullopt.
std::optional<std::vector<Coeff>> solve_linear(const Matrix& a, const std::vector<Coeff>& b);

}  // namespace idealkit
