#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobsys/cartier.hpp"

namespace frobsys {

struct PairComponent {
  Poly f;
  std::uint64_t a = 0;
};

/// Δ = Σ (a_i/(p^e-1))·div(f_i), optionally on the complete intersection
/// cut out by `ambient` (the trace there gains the factor Π h_j^{q-1}).
class PairDivisor {
 public:
  PairDivisor(Poly f, std::uint64_t a, int e);
  PairDivisor(std::vector<PairComponent> components, int e, std::vector<Poly> ambient = {});

  const RingPtr& ring() const { return components_.front().f.ring(); }
  int level() const { return e_; }
  std::uint64_t q() const { return q_; }
  const std::vector<PairComponent>& components() const { return components_; }
  const std::vector<Poly>& ambient() const { return ambient_; }

  /// Δ + (a/(q-1))·div(g) at the same level.
  PairDivisor plus(Poly g, std::uint64_t a) const;
  /// Same Δ represented at level n·e.
  PairDivisor at_level(int n) const;
  PairDivisor on(std::vector<Poly> ambient) const;

  /// Π f_i^{a_i} · Π h_j^{q-1}.
  Poly multiplier() const;
  CartierMap cartier_map() const { return CartierMap(multiplier(), e_); }
  /// (h_j); the zero ideal on a polynomial ring.
  Ideal ambient_ideal() const;
  /// Π f_i^{⌈a_i/(q-1)⌉}, times a nonvanishing Jacobian minor of the ambient.
  Poly default_test_element() const;

  /// e.g. "(5/6)*div(x^2 + y^3)".
  std::string describe() const;

 private:
  std::vector<PairComponent> components_;
  int e_;
  std::uint64_t q_;
  std::vector<Poly> ambient_;
};

struct ChainResult {
  Ideal ideal;
  int steps = 0;
};

/// Largest φ_Δ-fixed ideal: descending recursion from the unit ideal.
ChainResult sigma_chain(const PairDivisor& pair);
Ideal sigma(const PairDivisor& pair);

/// Smallest ideal containing `start` and stable under φ_Δ (N + φ(N) iterated).
ChainResult cartier_closure(const PairDivisor& pair, const Ideal& start);

/// Test ideal from a test element; c defaults to default_test_element().
/// A user supplied c is certified by comparing with the closure of c times
/// the default element.
ChainResult tau_chain(const PairDivisor& pair, std::optional<Poly> c = std::nullopt);
Ideal tau(const PairDivisor& pair, std::optional<Poly> c = std::nullopt);

struct TwistReport {
  Ideal augmented;  // τ(Δ + div g)
  Ideal twisted;    // g·τ(Δ)
  bool holds = false;
};
TwistReport twist_check(const PairDivisor& pair, const Poly& g);

bool is_sharply_F_pure(const PairDivisor& pair);
bool is_strongly_F_regular(const PairDivisor& pair, std::optional<Poly> c = std::nullopt);
/// σ ⊄ m_P.
bool is_sharply_F_pure_at(const PairDivisor& pair, std::span<const Coeff> point);
bool is_strongly_F_regular_at(const PairDivisor& pair, std::span<const Coeff> point);

/// Fedder's criterion for S/I at m: (I^{[p]} : I) ⊄ m^{[p]}.
bool fedder_oracle(const Ideal& i, const Ideal& m);

/// φ_Δ(I_Z) ⊆ I_Z.
bool is_compatible(const Ideal& iz, const PairDivisor& pair);

/// Order of vanishing of f at a rational point.
int multiplicity(const Poly& f, std::span<const Coeff> point);

struct MultContainment {
  /// mult_P(Δ) as the fraction num/(q-1).
  std::uint64_t mult_num = 0;
  std::uint64_t mult_den = 1;
  bool applicable = false;  // mult ≥ l
  bool contained = false;   // τ ⊆ m_P
  Ideal tau_ideal;
  bool verdict() const { return !applicable || contained; }
};
/// If mult_P(Δ) ≥ l then τ(Δ) ⊆ m_P. On a cone over P^n pass an affine
/// representative of the point and its codimension as l.
MultContainment mult_containment_check(const PairDivisor& pair, std::span<const Coeff> point,
                                       std::uint64_t l);

}  // namespace frobsys
