#include "dgin/linalg.hpp"

#include <utility>

#include "dgin/errors.hpp"

namespace dgin {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

std::vector<std::size_t> RationalMatrix::reduce() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t sel = row;
    while (sel < rows_ && at(sel, col) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != row)
      for (std::size_t c = col; c < cols_; ++c) std::swap(at(row, c), at(sel, c));
    Rational inv = Rational(1) / at(row, col);
    for (std::size_t c = col; c < cols_; ++c) at(row, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || at(r, col) == 0) continue;
      Rational factor = at(r, col);
      for (std::size_t c = col; c < cols_; ++c) at(r, c) -= factor * at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t RationalMatrix::rank() const {
  RationalMatrix copy = *this;
  return copy.reduce().size();
}

Rational RationalMatrix::determinant() const {
  if (rows_ != cols_) throw DimensionError("determinant needs a square matrix");
  RationalMatrix a = *this;
  Rational det(1);
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t sel = col;
    while (sel < rows_ && a.at(sel, col) == 0) ++sel;
    if (sel == rows_) return Rational(0);
    if (sel != col) {
      for (std::size_t c = col; c < cols_; ++c) std::swap(a.at(col, c), a.at(sel, c));
      det = -det;
    }
    det *= a.at(col, col);
    Rational inv = Rational(1) / a.at(col, col);
    for (std::size_t r = col + 1; r < rows_; ++r) {
      if (a.at(r, col) == 0) continue;
      Rational factor = a.at(r, col) * inv;
      for (std::size_t c = col; c < cols_; ++c) a.at(r, c) -= factor * a.at(col, c);
    }
  }
  return det;
}

EchelonBasis::EchelonBasis(std::size_t cols) : cols_(cols) {}

bool EchelonBasis::insert(std::vector<Rational> row) {
  if (row.size() != cols_) throw DimensionError("row width does not match the echelon basis");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Rational factor = row[pivots_[k]];
    if (factor == 0) continue;
    const std::vector<Rational>& base = rows_[k];
    for (std::size_t c = pivots_[k]; c < cols_; ++c) row[c] -= factor * base[c];
  }
  std::size_t lead = cols_;
  for (std::size_t c = 0; c < cols_; ++c)
    if (row[c] != 0) {
      lead = c;
      break;
    }
  if (lead == cols_) return false;
  Rational inv = Rational(1) / row[lead];
  for (std::size_t c = lead; c < cols_; ++c) row[c] *= inv;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Rational factor = rows_[k][lead];
    if (factor == 0) continue;
    for (std::size_t c = lead; c < cols_; ++c) rows_[k][c] -= factor * row[c];
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(lead);
  return true;
}

} // namespace dgin
