#pragma once

#include <optional>
#include <vector>

#include "jung/rational.hpp"

namespace jung {

// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

// Solves A v = b exactly by Gauss-Jordan elimination with pivots taken left
// to right. Free (non-pivot) unknowns are set to zero. Empty when the system
// is inconsistent.
std::optional<std::vector<Rational>> solve_linear(RationalMatrix a, std::vector<Rational> b);

}  // namespace jung
