#include "frobsys/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "frobsys/errors.hpp"
#include "frobsys/groebner.hpp"

namespace frobsys {

namespace {

std::vector<Poly> drop_zeros(std::vector<Poly> gens) {
  std::vector<Poly> out;
  for (Poly& g : gens)
    if (!g.is_zero()) out.push_back(std::move(g));
  return out;
}

// Auxiliary ring with one extra eliminated variable at index 0.
RingPtr with_aux_variable(const Ring& ring) {
  std::string name = "_t";
  for (const std::string& n : ring.names())
    if (n == name) name += "_";
  return ring.with_front_block({name});
}

std::vector<std::size_t> shift_map(std::size_t n) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), 1);
  return m;
}

// Keep basis elements free of the aux variable and map them back.
Ideal eliminate_aux(const RingPtr& ring, const std::vector<Poly>& basis) {
  std::vector<std::size_t> back(ring->nvars() + 1, 0);
  for (std::size_t i = 0; i < ring->nvars(); ++i) back[i + 1] = i;
  std::vector<Poly> kept;
  for (const Poly& g : basis)
    if (g.leading_monomial()[0] == 0) kept.push_back(g.remap(ring, back));
  return Ideal(ring, std::move(kept));
}

bool is_variable(const Poly& g, std::size_t* var) {
  if (g.size() != 1 || g.leading_monomial().degree() != 1) return false;
  const Monomial& m = g.leading_monomial();
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (m[i] == 1) *var = i;
  return true;
}

// Homogeneous I : x_v^∞. In grevlex with x_v last, dividing each basis element
// by its largest power of x_v yields a basis of the saturation.
Ideal saturate_by_variable(const Ideal& a, std::size_t v) {
  const RingPtr& ring = a.ring();
  const std::size_t n = ring->nvars();
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < n; ++i)
    if (i != v) perm.push_back(i);
  perm.push_back(v);
  RingPtr pr = ring->permuted(perm);
  std::vector<std::size_t> to(n), from(n);
  for (std::size_t i = 0; i < n; ++i) {
    to[perm[i]] = i;
    from[i] = perm[i];
  }
  Ideal moved = remap(a, pr, to);
  std::vector<Poly> out;
  for (const Poly& g : moved.groebner()) {
    std::uint32_t k = UINT32_MAX;
    for (const Term& t : g.terms()) k = std::min(k, t.mono[n - 1]);
    Monomial div;
    div.set(n - 1, k);
    std::vector<Term> terms;
    for (const Term& t : g.terms()) terms.push_back({div.cofactor_in(t.mono), t.coeff});
    out.push_back(Poly(pr, std::move(terms)).remap(ring, from));
  }
  return Ideal(ring, std::move(out));
}

// I : g^∞ via I + (1 - t g) eliminating t.
Ideal saturate_by_element(const Ideal& a, const Poly& g) {
  const RingPtr& ring = a.ring();
  RingPtr aux = with_aux_variable(*ring);
  auto map = shift_map(ring->nvars());
  std::vector<Poly> gens;
  for (const Poly& f : a.generators()) gens.push_back(f.remap(aux, map));
  Poly t = Poly::variable(aux, 0);
  gens.push_back(Poly::constant(aux, 1) - t * g.remap(aux, map));
  return eliminate_aux(ring, reduced_groebner_basis(gens));
}

}  // namespace

Ideal::Ideal(RingPtr ring) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {}

Ideal::Ideal(RingPtr ring, std::vector<Poly> generators)
    : ring_(std::move(ring)),
      generators_(drop_zeros(std::move(generators))),
      cache_(std::make_shared<Cache>()) {
  for (const Poly& g : generators_) require_same_ring(*ring_, *g.ring(), "Ideal");
}

Ideal Ideal::unit(RingPtr ring) {
  Poly one = Poly::constant(ring, 1);
  return from_groebner(std::move(ring), {one});
}

Ideal Ideal::from_groebner(RingPtr ring, std::vector<Poly> basis) {
  Ideal out(ring, basis);
  std::call_once(out.cache_->once, [&] { out.cache_->basis = std::move(basis); });
  return out;
}

const std::vector<Poly>& Ideal::groebner() const {
  std::call_once(cache_->once, [this] { cache_->basis = reduced_groebner_basis(generators_); });
  return cache_->basis;
}

bool Ideal::is_unit() const {
  for (const Poly& g : generators_)
    if (g.is_constant()) return true;
  const auto& gb = groebner();
  return gb.size() == 1 && gb.front().is_constant();
}

bool Ideal::is_homogeneous() const {
  for (const Poly& g : generators_)
    if (!g.is_homogeneous()) return false;
  return true;
}

Poly Ideal::normal_form(const Poly& f) const {
  require_same_ring(*ring_, *f.ring(), "normal_form");
  if (is_zero()) return f;
  return frobsys::normal_form(f, groebner());
}

bool Ideal::contains(const Poly& f) const {
  if (f.is_zero()) return true;
  if (is_zero()) return false;
  return normal_form(f).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  require_same_ring(*ring_, *other.ring_, "containment");
  for (const Poly& g : other.generators_)
    if (!contains(g)) return false;
  return true;
}

std::string Ideal::to_string() const {
  if (is_zero()) return "(0)";
  std::string s = "(";
  const auto& gb = groebner();
  for (std::size_t i = 0; i < gb.size(); ++i) {
    if (i) s += ", ";
    s += gb[i].to_string();
  }
  return s + ")";
}

bool operator==(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring_, *b.ring_, "ideal comparison");
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  return a.groebner() == b.groebner();
}

Ideal operator+(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring(), "ideal sum");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::vector<Poly> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal operator*(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring(), "ideal product");
  if (a.is_zero() || b.is_zero()) return Ideal(a.ring());
  std::vector<Poly> gens;
  for (const Poly& f : a.generators())
    for (const Poly& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal operator*(const Poly& g, const Ideal& a) {
  require_same_ring(*a.ring(), *g.ring(), "ideal scaling");
  std::vector<Poly> gens;
  for (const Poly& f : a.generators()) gens.push_back(g * f);
  return Ideal(a.ring(), std::move(gens));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring(), "intersect");
  if (a.is_zero() || b.is_zero()) return Ideal(a.ring());
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  const RingPtr& ring = a.ring();
  RingPtr aux = with_aux_variable(*ring);
  auto map = shift_map(ring->nvars());
  Poly t = Poly::variable(aux, 0);
  Poly one_minus_t = Poly::constant(aux, 1) - t;
  std::vector<Poly> gens;
  for (const Poly& f : a.generators()) gens.push_back(t * f.remap(aux, map));
  for (const Poly& g : b.generators()) gens.push_back(one_minus_t * g.remap(aux, map));
  return eliminate_aux(ring, reduced_groebner_basis(gens));
}

Ideal quotient(const Ideal& a, const Poly& g) {
  require_same_ring(*a.ring(), *g.ring(), "quotient");
  if (g.is_zero()) return Ideal::unit(a.ring());
  if (a.contains(g)) return Ideal::unit(a.ring());
  Ideal both = intersect(a, Ideal(a.ring(), {g}));
  std::vector<Poly> gens;
  for (const Poly& h : both.groebner()) gens.push_back(divide_exact(h, g));
  return Ideal(a.ring(), std::move(gens));
}

Ideal quotient(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring(), "quotient");
  if (b.is_zero() || a.contains(b)) return Ideal::unit(a.ring());
  std::optional<Ideal> acc;
  for (const Poly& g : b.generators()) {
    Ideal q = quotient(a, g);
    acc = acc ? intersect(*acc, q) : q;
  }
  return *acc;
}

Ideal saturate(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring(), "saturate");
  if (b.is_zero()) return Ideal::unit(a.ring());
  if (b.is_unit() || a.is_zero()) return a;
  if (a.is_unit()) return a;
  const bool all_vars = std::all_of(b.generators().begin(), b.generators().end(),
                                    [](const Poly& g) { std::size_t v; return is_variable(g, &v); });
  std::optional<Ideal> acc;
  for (const Poly& g : b.generators()) {
    std::size_t v = 0;
    Ideal s = (all_vars && a.is_homogeneous() && is_variable(g, &v)) ? saturate_by_variable(a, v)
                                                                      : saturate_by_element(a, g);
    acc = acc ? intersect(*acc, s) : s;
    if (acc->is_zero()) break;
  }
  return Ideal::from_groebner(a.ring(), acc->groebner());
}

Ideal saturate_by_iteration(const Ideal& a, const Ideal& b) {
  Ideal cur = a;
  for (;;) {
    Ideal next = quotient(cur, b);
    if (next == cur) return cur;
    cur = next;
  }
}

Ideal bracket_power(const Ideal& a, int e) {
  if (e < 0) throw DomainError("bracket_power: level must be non-negative");
  std::uint64_t q = 1;
  for (int i = 0; i < e; ++i) q *= a.ring()->characteristic();
  std::vector<Poly> gens;
  for (const Poly& g : a.generators()) gens.push_back(g.frobenius(q));
  return Ideal(a.ring(), std::move(gens));
}

Ideal irrelevant_ideal(const RingPtr& ring) {
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < ring->nvars(); ++i) gens.push_back(Poly::variable(ring, i));
  return Ideal(ring, std::move(gens));
}

Ideal point_ideal(const RingPtr& ring, std::span<const Coeff> point) {
  if (point.size() != ring->nvars()) throw StructuralError("point has wrong number of coordinates");
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    gens.push_back(Poly::variable(ring, i) - Poly::constant(ring, point[i]));
  return Ideal(ring, std::move(gens));
}

Ideal remap(const Ideal& a, const RingPtr& target, std::span<const std::size_t> map) {
  std::vector<Poly> gens;
  for (const Poly& g : a.generators()) gens.push_back(g.remap(target, map));
  return Ideal(target, std::move(gens));
}

}  // namespace frobsys
