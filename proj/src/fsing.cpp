#include "frobsys/fsing.hpp"

#include <string>

#include "frobsys/errors.hpp"

namespace frobsys {

namespace {

Poly determinant(std::vector<std::vector<Poly>> m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Poly det(m[0][0].ring());
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    Poly term = m[0][c] * determinant(std::move(minor));
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

Ideal with_ambient(const PairDivisor& pair, const Ideal& j) { return j + pair.ambient_ideal(); }

}  // namespace

PairDivisor::PairDivisor(Poly f, std::uint64_t a, int e)
    : PairDivisor(std::vector<PairComponent>{{std::move(f), a}}, e) {}

PairDivisor::PairDivisor(std::vector<PairComponent> components, int e, std::vector<Poly> ambient)
    : components_(std::move(components)), e_(e), ambient_(std::move(ambient)) {
  if (components_.empty()) throw DomainError("pair needs at least one component");
  for (const PairComponent& c : components_) {
    if (c.f.is_zero()) throw DomainError("pair divisor: f must be nonzero");
    require_same_ring(*ring(), *c.f.ring(), "pair divisor");
  }
  for (const Poly& h : ambient_) require_same_ring(*ring(), *h.ring(), "pair ambient");
  q_ = frobenius_q(*ring(), e_);
}

PairDivisor PairDivisor::plus(Poly g, std::uint64_t a) const {
  auto comps = components_;
  comps.push_back({std::move(g), a});
  return PairDivisor(std::move(comps), e_, ambient_);
}

PairDivisor PairDivisor::at_level(int n) const {
  if (n < 1) throw DomainError("level multiple must be at least 1");
  std::uint64_t scale = 0, power = 1;
  for (int i = 0; i < n; ++i) {
    scale += power;
    power *= q_;
  }
  auto comps = components_;
  for (PairComponent& c : comps) c.a *= scale;
  return PairDivisor(std::move(comps), e_ * n, ambient_);
}

PairDivisor PairDivisor::on(std::vector<Poly> ambient) const {
  return PairDivisor(components_, e_, std::move(ambient));
}

Poly PairDivisor::multiplier() const {
  Poly m = Poly::constant(ring(), 1);
  for (const PairComponent& c : components_) m = m * c.f.pow(c.a);
  for (const Poly& h : ambient_) m = m * h.pow(q_ - 1);
  return m;
}

Ideal PairDivisor::ambient_ideal() const { return Ideal(ring(), ambient_); }

Poly PairDivisor::default_test_element() const {
  Poly c = Poly::constant(ring(), 1);
  for (const PairComponent& comp : components_) {
    if (comp.a == 0) continue;
    c = c * comp.f.pow((comp.a + q_ - 2) / (q_ - 1));
  }
  if (ambient_.empty()) return c;

  // Jacobian ideal of a reduced complete intersection lies in its test ideal.
  const Ideal h = ambient_ideal();
  const std::size_t k = ambient_.size();
  const std::size_t n = ring()->nvars();
  if (k > n) throw UnsupportedError("ambient has more equations than variables");
  std::vector<std::size_t> cols(k);
  for (std::size_t i = 0; i < k; ++i) cols[i] = i;
  do {
    std::vector<std::vector<Poly>> m;
    for (const Poly& eq : ambient_) {
      std::vector<Poly> row;
      for (std::size_t col : cols) row.push_back(eq.derivative(col));
      m.push_back(std::move(row));
    }
    Poly minor = determinant(std::move(m));
    Poly candidate = c * minor;
    if (!h.contains(candidate)) return candidate;
  } while (next_combination(cols, n));
  throw UnsupportedError("no test element: ambient is not generically smooth or f vanishes on it");
}

std::string PairDivisor::describe() const {
  std::string s;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) s += " + ";
    s += "(" + std::to_string(components_[i].a) + "/" + std::to_string(q_ - 1) + ")*div(" +
         components_[i].f.to_string() + ")";
  }
  return s;
}

ChainResult sigma_chain(const PairDivisor& pair) {
  const CartierMap phi = pair.cartier_map();
  const int cap = pair.ring()->caps().max_steps;
  Ideal cur = Ideal::unit(pair.ring());
  for (int step = 1; step <= cap; ++step) {
    Ideal next = with_ambient(pair, apply_cartier(phi, cur));
    if (!cur.contains(next))
      throw InvariantError("sigma recursion failed to descend at step " + std::to_string(step));
    if (next == cur) return {cur, step};
    cur = std::move(next);
  }
  throw ResourceError("sigma chain step cap exceeded (steps=" + std::to_string(cap) + ")");
}

Ideal sigma(const PairDivisor& pair) { return sigma_chain(pair).ideal; }

ChainResult cartier_closure(const PairDivisor& pair, const Ideal& start) {
  const CartierMap phi = pair.cartier_map();
  const int cap = pair.ring()->caps().max_steps;
  Ideal cur = with_ambient(pair, start);
  for (int step = 1; step <= cap; ++step) {
    Ideal image = apply_cartier(phi, cur);
    if (cur.contains(image)) {
      cur = Ideal::from_groebner(cur.ring(), cur.groebner());
      return {cur, step};
    }
    cur = cur + image;
  }
  throw ResourceError("tau chain step cap exceeded (steps=" + std::to_string(cap) + ")");
}

ChainResult tau_chain(const PairDivisor& pair, std::optional<Poly> c) {
  const Poly base = pair.default_test_element();
  if (c) {
    if (c->is_zero()) throw DomainError("tau: test element must be nonzero");
    require_same_ring(*pair.ring(), *c->ring(), "tau");
  }
  ChainResult out = cartier_closure(pair, Ideal(pair.ring(), {c ? *c : base}));
  if (c) {
    ChainResult ref = cartier_closure(pair, Ideal(pair.ring(), {*c * base}));
    if (ref.ideal != out.ideal)
      throw PreconditionError("tau: " + c->to_string() + " is not a test element for this pair");
  }
  Ideal fixed = with_ambient(pair, apply_cartier(pair.cartier_map(), out.ideal));
  if (fixed != out.ideal) throw InvariantError("tau chain limit is not fixed by the Cartier map");
  return out;
}

Ideal tau(const PairDivisor& pair, std::optional<Poly> c) { return tau_chain(pair, std::move(c)).ideal; }

TwistReport twist_check(const PairDivisor& pair, const Poly& g) {
  if (g.is_zero()) throw DomainError("twist_check: g must be nonzero");
  TwistReport r{tau(pair.plus(g, pair.q() - 1)), with_ambient(pair, g * tau(pair)), false};
  r.holds = r.augmented == r.twisted;
  return r;
}

bool is_sharply_F_pure(const PairDivisor& pair) { return sigma(pair).is_unit(); }

bool is_strongly_F_regular(const PairDivisor& pair, std::optional<Poly> c) {
  return tau(pair, std::move(c)).is_unit();
}

bool is_sharply_F_pure_at(const PairDivisor& pair, std::span<const Coeff> point) {
  return !point_ideal(pair.ring(), point).contains(sigma(pair));
}

bool is_strongly_F_regular_at(const PairDivisor& pair, std::span<const Coeff> point) {
  return !point_ideal(pair.ring(), point).contains(tau(pair));
}

bool fedder_oracle(const Ideal& i, const Ideal& m) {
  require_same_ring(*i.ring(), *m.ring(), "fedder_oracle");
  if (!m.contains(i)) throw DomainError("fedder_oracle: I is not contained in m");
  const Ideal mp = bracket_power(m, 1);
  const std::uint32_t p = i.ring()->characteristic();
  if (i.generators().size() == 1) return !mp.contains(i.generators().front().pow(p - 1));
  return !mp.contains(quotient(bracket_power(i, 1), i));
}

bool is_compatible(const Ideal& iz, const PairDivisor& pair) {
  require_same_ring(*iz.ring(), *pair.ring(), "is_compatible");
  if (iz.is_unit()) throw PreconditionError("is_compatible: I_Z must be a proper ideal");
  return iz.contains(apply_cartier(pair.cartier_map(), iz));
}

int multiplicity(const Poly& f, std::span<const Coeff> point) {
  if (point.size() != f.ring()->nvars())
    throw StructuralError("multiplicity: point has wrong number of coordinates");
  return f.translate(point).low_degree();
}

MultContainment mult_containment_check(const PairDivisor& pair, std::span<const Coeff> point,
                                       std::uint64_t l) {
  MultContainment out{0, pair.q() - 1, false, false, Ideal(pair.ring())};
  for (const PairComponent& c : pair.components()) {
    int m = multiplicity(c.f, point);
    if (m < 0) throw DomainError("multiplicity of the zero polynomial");
    out.mult_num += c.a * static_cast<std::uint64_t>(m);
  }
  out.applicable = out.mult_num >= l * out.mult_den;
  out.tau_ideal = tau(pair);
  out.contained = point_ideal(pair.ring(), point).contains(out.tau_ideal);
  return out;
}

}  // namespace frobsys
