#pragma once

#include <cstdint>
#include <vector>

#include "frobsys/poly.hpp"

namespace frobsys {

/// F_{p^k} realized as F_p[w]/(μ) with μ monic irreducible of degree k.
/// Elements are coefficient vectors of length k in the basis 1, w, ..., w^{k-1}.
class ExtField {
 public:
  using Elem = std::vector<Coeff>;

  ExtField(std::uint32_t p, int k);

  std::uint32_t characteristic() const { return base_.characteristic(); }
  int degree() const { return k_; }
  std::uint64_t order() const { return order_; }
  /// μ with the leading 1 omitted: w^k = -Σ mu[i] w^i.
  const std::vector<Coeff>& modulus() const { return mu_; }

  Elem zero() const { return Elem(k_, 0); }
  Elem one() const;
  Elem embed(Coeff c) const;
  /// The i-th element in a fixed enumeration of all p^k elements.
  Elem element(std::uint64_t index) const;
  bool is_zero(const Elem& a) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(Elem a, std::uint64_t n) const;
  Elem inv(const Elem& a) const;

  Elem evaluate(const Poly& f, const std::vector<Elem>& point) const;
  /// Rank of a matrix with entries in F_{p^k}.
  std::size_t rank(std::vector<std::vector<Elem>> m) const;
  /// Basis of the right kernel of m (vectors v with m·v = 0); `cols` columns.
  std::vector<std::vector<Elem>> kernel(std::vector<std::vector<Elem>> m, std::size_t cols) const;

 private:
  PrimeField base_;
  int k_;
  std::uint64_t order_;
  std::vector<Coeff> mu_;
};

}  // namespace frobsys
