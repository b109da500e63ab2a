#include "jung/linsolve.hpp"

#include <stdexcept>
#include <utility>

namespace jung {

std::optional<std::vector<Rational>> solve_linear(RationalMatrix a, std::vector<Rational> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("right-hand side size mismatch");
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(pivot, k), a(r, k));
      std::swap(b[pivot], b[r]);
    }
    const Rational inv = 1 / a(r, c);
    for (std::size_t k = c; k < cols; ++k) a(r, k) *= inv;
    b[r] *= inv;
    for (std::size_t other = 0; other < rows; ++other) {
      if (other == r || a(other, c) == 0) continue;
      const Rational factor = a(other, c);
      for (std::size_t k = c; k < cols; ++k) a(other, k) -= factor * a(r, k);
      b[other] -= factor * b[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t row = r; row < rows; ++row) {
    if (b[row] != 0) return std::nullopt;
  }
  std::vector<Rational> solution(cols);
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) solution[pivot_cols[k]] = b[k];
  return solution;
}

}  // namespace jung
