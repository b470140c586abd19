#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "frobsys/ideal.hpp"
#include "frobsys/linalg.hpp"

namespace frobsys {

using SparseVec = std::vector<std::pair<std::uint32_t, Coeff>>;

/// All monomials of total degree d in the first `nvars` variables, in
/// decreasing ring order.
std::vector<Monomial> monomials_of_degree(const Ring& ring, std::uint32_t d);

/// Coordinates on (S/I)_m: the standard monomials of degree m, plus the
/// normal form of every degree-m monomial expressed in them.
class GradedChart {
 public:
  GradedChart(Ideal modulus, std::uint32_t degree);

  const Ideal& modulus() const { return modulus_; }
  const RingPtr& ring() const { return modulus_.ring(); }
  std::uint32_t degree() const { return degree_; }
  std::size_t dim() const { return standard_.size(); }
  const std::vector<Monomial>& standard() const { return standard_; }

  /// Normal form of a degree-m monomial.
  const SparseVec& coords(const Monomial& m) const;
  /// Dense coordinates of a form of degree m (or zero).
  std::vector<Coeff> vector_of(const Poly& form) const;
  Poly form_of(std::span<const Coeff> v) const;

 private:
  Ideal modulus_;
  std::uint32_t degree_;
  std::vector<Monomial> standard_;
  std::unordered_map<Monomial, SparseVec, MonomialHash> table_;
};

using ChartPtr = std::shared_ptr<const GradedChart>;

/// A linear subspace of (S/I)_m stored as a matrix in reduced row echelon form.
class GradedSubspace {
 public:
  GradedSubspace(ChartPtr chart, Matrix rref_rows);

  static GradedSubspace full(ChartPtr chart);
  static GradedSubspace zero(ChartPtr chart);
  static GradedSubspace span(ChartPtr chart, std::span<const Poly> forms);
  static GradedSubspace from_basis(ChartPtr chart, const EchelonBasis& basis);

  const ChartPtr& chart() const { return chart_; }
  const Ideal& modulus() const { return chart_->modulus(); }
  std::uint32_t degree() const { return chart_->degree(); }
  std::size_t dim() const { return rows_.rows(); }
  std::size_t ambient_dim() const { return chart_->dim(); }
  bool is_full() const { return dim() == ambient_dim(); }
  bool is_zero() const { return dim() == 0; }
  const Matrix& rows() const { return rows_; }

  /// Basis forms, one per row.
  std::vector<Poly> basis() const;
  bool contains(const Poly& form) const;
  bool contains(const GradedSubspace& other) const;

  friend bool operator==(const GradedSubspace& a, const GradedSubspace& b);

 private:
  ChartPtr chart_;
  Matrix rows_;
};

/// Degree-m piece of a homogeneous ideal J, taken modulo the chart's ideal.
GradedSubspace ideal_piece(const Ideal& j, const ChartPtr& chart);

}  // namespace frobsys
