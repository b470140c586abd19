#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "frobsys/field.hpp"

namespace frobsys {

/// Dense row-major matrix over F_p.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Coeff& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Coeff at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Coeff> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Coeff> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Coeff> values);
  void truncate_rows(std::size_t n);
  void swap_rows(std::size_t a, std::size_t b);

  bool operator==(const Matrix& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Coeff> data_;
};

struct RrefInfo {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Row-echelon basis grown one vector at a time. Rows are kept reduced
/// against each other's pivots, so insertion order does not change the
/// final reduced form.
class EchelonBasis {
 public:
  EchelonBasis(const PrimeField& field, std::size_t dim) : field_(field), dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == dim_; }

  /// Reduces v in place against the basis; true if v was independent (and was added).
  bool insert(std::vector<Coeff> v);
  /// Reduces v against the basis; v becomes zero iff it lies in the span.
  void reduce(std::vector<Coeff>& v) const;
  bool contains(std::vector<Coeff> v) const;

  /// Reduced row echelon form with rows ordered by pivot column.
  Matrix to_rref() const;

 private:
  PrimeField field_;
  std::size_t dim_;
  std::vector<std::vector<Coeff>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace frobsys
