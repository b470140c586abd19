#include "frobsys/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace frobsys {

void Matrix::append_row(std::span<const Coeff> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void Matrix::truncate_rows(std::size_t n) {
  if (n >= rows_) return;
  rows_ = n;
  data_.resize(rows_ * cols_);
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_,
                   data_.begin() + b * cols_);
}

void EchelonBasis::reduce(std::vector<Coeff>& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Coeff c = v[pivots_[i]];
    if (c == 0) continue;
    const auto& row = rows_[i];
    Coeff neg = field_.neg(c);
    for (std::size_t j = pivots_[i]; j < dim_; ++j)
      if (row[j]) v[j] = field_.add(v[j], field_.mul(neg, row[j]));
  }
}

bool EchelonBasis::insert(std::vector<Coeff> v) {
  if (v.size() != dim_) throw std::invalid_argument("vector length mismatch");
  reduce(v);
  auto it = std::find_if(v.begin(), v.end(), [](Coeff c) { return c != 0; });
  if (it == v.end()) return false;
  std::size_t piv = static_cast<std::size_t>(it - v.begin());
  Coeff inv = field_.inv(v[piv]);
  for (std::size_t j = piv; j < dim_; ++j) v[j] = field_.mul(v[j], inv);
  // Clear the new pivot column from existing rows.
  for (auto& row : rows_) {
    Coeff c = row[piv];
    if (c == 0) continue;
    Coeff neg = field_.neg(c);
    for (std::size_t j = piv; j < dim_; ++j)
      if (v[j]) row[j] = field_.add(row[j], field_.mul(neg, v[j]));
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

bool EchelonBasis::contains(std::vector<Coeff> v) const {
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](Coeff c) { return c == 0; });
}

Matrix EchelonBasis::to_rref() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  Matrix m(0, dim_);
  for (std::size_t i : order) m.append_row(rows_[i]);
  return m;
}

}  // namespace frobsys
