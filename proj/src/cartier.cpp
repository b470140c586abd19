#include "frobsys/cartier.hpp"

#include <string>

#include "frobsys/errors.hpp"

namespace frobsys {

std::uint64_t frobenius_q(const Ring& ring, int e) {
  if (e <= 0) throw DomainError("Frobenius level must be at least 1 (got " + std::to_string(e) + ")");
  std::uint64_t q = 1;
  for (int i = 0; i < e; ++i) {
    q *= ring.characteristic();
    if (q > ring.caps().max_q)
      throw ResourceError("Frobenius q cap exceeded (max_q=" + std::to_string(ring.caps().max_q) +
                          ", level " + std::to_string(e) + ")");
  }
  return q;
}

Poly FrobExpansion::reassemble(const RingPtr& ring) const {
  Poly out(ring);
  for (const auto& [b, g] : parts) out += g.frobenius(q).times_monomial(b);
  return out;
}

FrobExpansion frob_expand(const Poly& g, int e) {
  const RingPtr& ring = g.ring();
  FrobExpansion out;
  out.e = e;
  out.q = frobenius_q(*ring, e);
  const auto q = static_cast<std::uint32_t>(out.q);
  std::map<Monomial, std::vector<Term>, MonomialLexLess> buckets;
  for (const Term& t : g.terms()) {
    Monomial base, rest;
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
      base.set(i, t.mono[i] % q);
      rest.set(i, t.mono[i] / q);
    }
    buckets[base].push_back({rest, t.coeff});
  }
  for (auto& [b, terms] : buckets) out.parts.emplace(b, Poly(ring, std::move(terms)));
  return out;
}

Poly trace(const Poly& g, int e) {
  const RingPtr& ring = g.ring();
  const auto q = static_cast<std::uint32_t>(frobenius_q(*ring, e));
  std::vector<Term> terms;
  for (const Term& t : g.terms()) {
    Monomial m;
    bool hit = true;
    for (std::size_t i = 0; i < ring->nvars() && hit; ++i) {
      if (t.mono[i] % q != q - 1) hit = false;
      else m.set(i, t.mono[i] / q);
    }
    if (hit) terms.push_back({m, t.coeff});
  }
  return Poly(ring, std::move(terms));
}

Ideal bracket_root(const Ideal& j, int e) {
  frobenius_q(*j.ring(), e);
  std::vector<Poly> gens;
  for (const Poly& g : j.generators())
    for (auto& [b, part] : frob_expand(g, e).parts) gens.push_back(part);
  return Ideal(j.ring(), std::move(gens));
}

CartierMap::CartierMap(Poly multiplier, int e) : f_(std::move(multiplier)), e_(e) {
  if (f_.is_zero()) throw DomainError("Cartier map multiplier must be nonzero");
  frobenius_q(*f_.ring(), e_);
}

CartierMap CartierMap::iterate(int n) const {
  if (n < 1) throw DomainError("iterate count must be at least 1");
  const std::uint64_t q = frobenius_q(*ring(), e_);
  Poly mult = Poly::constant(ring(), 1);
  Poly power = f_;
  for (int i = 0; i < n; ++i) {
    mult = mult * power;
    if (i + 1 < n) power = power.frobenius(q);
  }
  return CartierMap(std::move(mult), e_ * n);
}

Ideal apply_cartier(const CartierMap& map, const Ideal& j) {
  require_same_ring(*map.ring(), *j.ring(), "apply_cartier");
  return bracket_root(map.multiplier() * j, map.level());
}

}  // namespace frobsys
