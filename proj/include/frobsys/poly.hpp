#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frobsys/ring.hpp"

namespace frobsys {

struct Term {
  Monomial mono;
  Coeff coeff;
};

/// Sparse multivariate polynomial over F_p. Terms are kept sorted by
/// decreasing ring order with no zero coefficients.
class Poly {
 public:
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  /// Takes ownership of arbitrary terms; merges duplicates and sorts.
  Poly(RingPtr ring, std::vector<Term> terms);

  static Poly constant(RingPtr ring, std::int64_t c);
  static Poly variable(RingPtr ring, std::size_t i);
  static Poly monomial(RingPtr ring, const Monomial& m, Coeff c = 1);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_.front().mono.is_one(); }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  Coeff leading_coeff() const { return terms_.front().coeff; }

  /// Highest total degree of a term; -1 for the zero polynomial.
  int degree() const;
  /// Lowest total degree of a term; -1 for the zero polynomial.
  int low_degree() const;
  bool is_homogeneous() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(Coeff c) const;
  Poly times_monomial(const Monomial& m, Coeff c = 1) const;
  Poly monic() const;
  Poly pow(std::uint64_t n) const;
  /// g(x_1^q, ..., x_n^q), which equals g^q because coefficients lie in F_p.
  Poly frobenius(std::uint64_t q) const;

  /// this - c*m*g, the reduction step of division.
  Poly sub_mul(Coeff c, const Monomial& m, const Poly& g) const;

  Coeff evaluate(std::span<const Coeff> point) const;
  /// f(x + point): the Taylor re-centering used for multiplicities.
  Poly translate(std::span<const Coeff> point) const;
  /// Part of total degree d.
  Poly homogeneous_part(std::uint32_t d) const;
  /// Formal partial derivative.
  Poly derivative(std::size_t var) const;

  /// Map into another ring with the same characteristic; variable i goes to
  /// target variable map[i].
  Poly remap(const RingPtr& target, std::span<const std::size_t> map) const;

  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void normalize();

  RingPtr ring_;
  std::vector<Term> terms_;
};

namespace detail {
/// a - c*m*b on raw sorted term ranges.
std::vector<Term> sub_mul_terms(const Ring& ring, std::span<const Term> a, Coeff c,
                                const Monomial& m, std::span<const Term> b);
}  // namespace detail

/// Exact division; throws DomainError when g does not divide f.
Poly divide_exact(const Poly& f, const Poly& g);

/// Parses "x^2*y + 3*z - (x+y)^3" in the given ring. Integers are read mod p.
Poly parse_poly(const RingPtr& ring, std::string_view text);

}  // namespace frobsys
