#pragma once

#include <cstdint>
#include <map>

#include "frobsys/ideal.hpp"

namespace frobsys {

/// p^e, rejecting levels whose q exceeds the ring's max_q cap.
std::uint64_t frobenius_q(const Ring& ring, int e);

/// g = Σ_b g_b^q x^b with every coordinate of b in [0, q).
struct FrobExpansion {
  int e = 0;
  std::uint64_t q = 1;
  /// Only nonzero components are stored.
  std::map<Monomial, Poly, MonomialLexLess> parts;

  Poly reassemble(const RingPtr& ring) const;
};

FrobExpansion frob_expand(const Poly& g, int e);

/// Component of g at b = (q-1, ..., q-1).
Poly trace(const Poly& g, int e);

/// Smallest K with J ⊆ K^{[q]}: generated by all expansion components of the generators.
Ideal bracket_root(const Ideal& j, int e);

/// g ↦ trace(f·g) at level e.
class CartierMap {
 public:
  CartierMap(Poly multiplier, int e);

  int level() const { return e_; }
  const Poly& multiplier() const { return f_; }
  const RingPtr& ring() const { return f_.ring(); }

  Poly operator()(const Poly& g) const { return trace(f_ * g, e_); }
  /// n-fold composite: level n·e, multiplier f^{1+q+...+q^{n-1}}.
  CartierMap iterate(int n) const;

 private:
  Poly f_;
  int e_;
};

/// bracket_root(f·J).
Ideal apply_cartier(const CartierMap& map, const Ideal& j);

}  // namespace frobsys
