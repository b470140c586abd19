#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "frobsys/poly.hpp"

namespace frobsys {

/// Finitely generated ideal with a lazily computed reduced Groebner basis.
/// Immutable; copies share the cached basis, which is computed once even
/// under concurrent access.
class Ideal {
 public:
  /// The zero ideal.
  explicit Ideal(RingPtr ring);
  Ideal(RingPtr ring, std::vector<Poly> generators);

  static Ideal unit(RingPtr ring);
  /// Wraps an already reduced Groebner basis without recomputing it.
  static Ideal from_groebner(RingPtr ring, std::vector<Poly> basis);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return generators_; }
  const std::vector<Poly>& groebner() const;

  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const;
  /// True when every generator is homogeneous.
  bool is_homogeneous() const;

  Poly normal_form(const Poly& f) const;
  bool contains(const Poly& f) const;
  /// other ⊆ *this.
  bool contains(const Ideal& other) const;

  /// Generators of the reduced basis, e.g. "(x, y^2)"; "(0)" and "(1)" for the trivial ideals.
  std::string to_string() const;

  friend bool operator==(const Ideal& a, const Ideal& b);
  friend bool operator!=(const Ideal& a, const Ideal& b) { return !(a == b); }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Poly> basis;
  };

  RingPtr ring_;
  std::vector<Poly> generators_;
  std::shared_ptr<Cache> cache_;
};

Ideal operator+(const Ideal& a, const Ideal& b);
Ideal operator*(const Ideal& a, const Ideal& b);
/// g * I.
Ideal operator*(const Poly& g, const Ideal& a);

Ideal intersect(const Ideal& a, const Ideal& b);
/// (I : g).
Ideal quotient(const Ideal& a, const Poly& g);
/// (I : J) = {g : gJ ⊆ I}.
Ideal quotient(const Ideal& a, const Ideal& b);
/// I : J^∞. Uses the grevlex last-variable trick for homogeneous I and J
/// generated by variables, otherwise one auxiliary variable per generator of J.
Ideal saturate(const Ideal& a, const Ideal& b);
/// I : J^∞ by iterating quotients until two consecutive steps agree.
Ideal saturate_by_iteration(const Ideal& a, const Ideal& b);
/// I^{[p^e]}.
Ideal bracket_power(const Ideal& a, int e);

/// The ideal generated by all variables.
Ideal irrelevant_ideal(const RingPtr& ring);
/// Ideal of a rational point in affine space: (x_i - c_i).
Ideal point_ideal(const RingPtr& ring, std::span<const Coeff> point);

/// Maps generators into `target`, variable i going to map[i].
Ideal remap(const Ideal& a, const RingPtr& target, std::span<const std::size_t> map);

}  // namespace frobsys
