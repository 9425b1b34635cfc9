#pragma once

#include "operadix/poly.hpp"

#include <vector>

namespace operadix {

/// Dense rectangular matrix of polynomials.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static PolyMatrix from_rows(std::vector<std::vector<MultiPoly>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  MultiPoly& operator()(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }
  const MultiPoly& operator()(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }

  /// Rows of `this` followed by rows of `below`.
  PolyMatrix stacked(const PolyMatrix& below) const;
  /// Rational matrix at a parameter point.
  std::vector<std::vector<Rational>> evaluate(std::span<const Rational> point) const;

  bool operator==(const PolyMatrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<MultiPoly> data_;
};

/// Uses the first `pivots` rows, whose leading `pivots` x `pivots` block is
/// diagonal with nonzero constant entries, to clear those columns in the
/// remaining rows. Returns the remaining rows restricted to the other
/// columns. Throws if a pivot is not a nonzero constant or the block is not
/// diagonal.
PolyMatrix eliminate_unit_pivots(const PolyMatrix& m, std::size_t pivots);

/// Rank of a rational matrix by exact Gaussian elimination.
std::size_t rank(std::vector<std::vector<Rational>> m);

}  // namespace operadix
