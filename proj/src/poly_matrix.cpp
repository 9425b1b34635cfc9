#include "operadix/poly_matrix.hpp"

#include <stdexcept>

namespace operadix {

PolyMatrix PolyMatrix::from_rows(std::vector<std::vector<MultiPoly>> rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  PolyMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("matrix rows differ in length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = std::move(rows[r][c]);
  }
  return m;
}

PolyMatrix PolyMatrix::stacked(const PolyMatrix& below) const {
  if (below.cols_ != cols_) throw std::invalid_argument("stacked matrices differ in width");
  PolyMatrix m(rows_ + below.rows_, cols_);
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = r < rows_ ? (*this)(r, c) : below(r - rows_, c);
  return m;
}

std::vector<std::vector<Rational>> PolyMatrix::evaluate(std::span<const Rational> point) const {
  std::vector<std::vector<Rational>> out(rows_, std::vector<Rational>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c).evaluate(point);
  return out;
}

PolyMatrix eliminate_unit_pivots(const PolyMatrix& m, std::size_t pivots) {
  if (pivots > m.rows() || pivots > m.cols()) throw std::invalid_argument("pivot block exceeds the matrix");
  std::vector<Rational> pivot_value(pivots);
  for (std::size_t i = 0; i < pivots; ++i) {
    for (std::size_t j = 0; j < pivots; ++j) {
      if (i == j) continue;
      if (!m(i, j).is_zero()) throw std::invalid_argument("pivot block is not diagonal");
    }
    auto v = m(i, i).constant_value();
    if (!v || is_zero(*v)) throw std::invalid_argument("pivot entry is not a nonzero constant");
    pivot_value[i] = *v;
  }
  PolyMatrix out(m.rows() - pivots, m.cols() - pivots);
  for (std::size_t r = pivots; r < m.rows(); ++r) {
    std::vector<MultiPoly> row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    // Top rows in index order.
    for (std::size_t i = 0; i < pivots; ++i) {
      if (row[i].is_zero()) continue;
      const MultiPoly factor = row[i] * Rational(1 / pivot_value[i]);
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (!m(i, c).is_zero()) row[c] -= factor * m(i, c);
    }
    for (std::size_t c = pivots; c < m.cols(); ++c) out(r - pivots, c - pivots) = std::move(row[c]);
  }
  return out;
}

std::size_t rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && is_zero(m[p][c])) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (is_zero(m[r][c])) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace operadix
