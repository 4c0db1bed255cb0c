#pragma once

#include <cstddef>
#include <vector>

#include "dgin/rational.hpp"

namespace dgin {

// Dense matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  // In-place Gauss-Jordan, eliminating columns left to right. Returns the
  // pivot column of each nonzero row, in row order.
  std::vector<std::size_t> reduce();
  std::size_t rank() const;
  Rational determinant() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

// Row space accumulated one row at a time, kept fully reduced.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t cols);

  std::size_t cols() const { return cols_; }
  std::size_t size() const { return rows_.size(); }
  // Reduces the row against the basis; true when it contributes a new pivot.
  bool insert(std::vector<Rational> row);
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t cols_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

} // namespace dgin
