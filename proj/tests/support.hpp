#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "frobsys/ideal.hpp"

namespace frobsys::testing {

inline RingPtr make_ring(std::uint32_t p, std::vector<std::string> names, Caps caps = {}) {
  return Ring::make(p, std::move(names), MonomialOrder::kGrevlex, 0, caps);
}

inline Poly P(const RingPtr& r, std::string_view s) { return parse_poly(r, s); }

inline Ideal I(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Poly> v;
  for (const char* g : gens) v.push_back(parse_poly(r, g));
  return Ideal(r, std::move(v));
}

/// Seeded generator of small random algebraic objects.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }
  bool coin() { return below(2) == 1; }

  Monomial monomial(const Ring& r, std::uint32_t max_deg) {
    Monomial m;
    std::uint32_t budget = static_cast<std::uint32_t>(below(max_deg + 1));
    for (std::uint32_t k = 0; k < budget; ++k) {
      std::size_t v = below(r.nvars());
      m.set(v, m[v] + 1);
    }
    return m;
  }

  Poly poly(const RingPtr& r, std::uint32_t max_deg, std::size_t max_terms) {
    std::vector<Term> terms;
    std::size_t n = 1 + below(max_terms);
    for (std::size_t i = 0; i < n; ++i)
      terms.push_back({monomial(*r, max_deg), static_cast<Coeff>(1 + below(r->characteristic() - 1))});
    return Poly(r, std::move(terms));
  }

  Poly nonzero_poly(const RingPtr& r, std::uint32_t max_deg, std::size_t max_terms) {
    for (;;) {
      Poly f = poly(r, max_deg, max_terms);
      if (!f.is_zero()) return f;
    }
  }

  /// Homogeneous polynomial of exact degree d with up to max_terms terms.
  Poly homogeneous(const RingPtr& r, std::uint32_t d, std::size_t max_terms) {
    for (;;) {
      std::vector<Term> terms;
      std::size_t n = 1 + below(max_terms);
      for (std::size_t i = 0; i < n; ++i) {
        Monomial m;
        for (std::uint32_t k = 0; k < d; ++k) {
          std::size_t v = below(r->nvars());
          m.set(v, m[v] + 1);
        }
        terms.push_back({m, static_cast<Coeff>(1 + below(r->characteristic() - 1))});
      }
      Poly f(r, std::move(terms));
      if (!f.is_zero()) return f;
    }
  }

  Ideal ideal(const RingPtr& r, std::size_t max_gens, std::uint32_t max_deg, std::size_t max_terms) {
    std::vector<Poly> gens;
    std::size_t n = 1 + below(max_gens);
    for (std::size_t i = 0; i < n; ++i) gens.push_back(nonzero_poly(r, max_deg, max_terms));
    return Ideal(r, std::move(gens));
  }

  Ideal monomial_ideal(const RingPtr& r, std::size_t max_gens, std::uint32_t max_deg) {
    std::vector<Poly> gens;
    std::size_t n = 1 + below(max_gens);
    for (std::size_t i = 0; i < n; ++i) gens.push_back(Poly::monomial(r, monomial(*r, max_deg)));
    return Ideal(r, std::move(gens));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace frobsys::testing
