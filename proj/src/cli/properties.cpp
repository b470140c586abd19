#include "frobsys/cli/properties.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "frobsys/cartier.hpp"
#include "frobsys/errors.hpp"
#include "frobsys/fsing.hpp"
#include "frobsys/proj.hpp"

namespace frobsys::cli {

namespace {

/// Seeded sampler. Uses plain modular reduction of mt19937_64 output so the
/// stream is identical across standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return rng_() % n; }

  template <class T>
  T pick(std::initializer_list<T> xs) {
    return *(xs.begin() + below(xs.size()));
  }

  RingPtr ring(std::initializer_list<std::uint32_t> primes, std::vector<std::string> names) {
    return Ring::make(pick(primes), std::move(names), MonomialOrder::kGrevlex, 0, Caps{});
  }

  Monomial monomial(const Ring& r, std::uint32_t max_deg) {
    Monomial m;
    const auto d = static_cast<std::uint32_t>(below(max_deg + 1));
    for (std::uint32_t k = 0; k < d; ++k) {
      const std::size_t v = below(r.nvars());
      m.set(v, m[v] + 1);
    }
    return m;
  }

  Poly poly(const RingPtr& r, std::uint32_t max_deg, std::size_t max_terms) {
    std::vector<Term> terms;
    const std::size_t n = 1 + below(max_terms);
    for (std::size_t i = 0; i < n; ++i)
      terms.push_back({monomial(*r, max_deg), static_cast<Coeff>(1 + below(r->characteristic() - 1))});
    return Poly(r, std::move(terms));
  }

  Poly nonzero(const RingPtr& r, std::uint32_t max_deg, std::size_t max_terms) {
    for (;;)
      if (Poly f = poly(r, max_deg, max_terms); !f.is_zero()) return f;
  }

  Poly homogeneous(const RingPtr& r, std::uint32_t d, std::size_t max_terms) {
    for (;;) {
      std::vector<Term> terms;
      const std::size_t n = 1 + below(max_terms);
      for (std::size_t i = 0; i < n; ++i) {
        Monomial m;
        for (std::uint32_t k = 0; k < d; ++k) {
          const std::size_t v = below(r->nvars());
          m.set(v, m[v] + 1);
        }
        terms.push_back({m, static_cast<Coeff>(1 + below(r->characteristic() - 1))});
      }
      if (Poly f(r, std::move(terms)); !f.is_zero()) return f;
    }
  }

  Ideal ideal(const RingPtr& r, std::size_t max_gens, std::uint32_t max_deg, std::size_t max_terms) {
    std::vector<Poly> gens;
    const std::size_t n = 1 + below(max_gens);
    for (std::size_t i = 0; i < n; ++i) gens.push_back(nonzero(r, max_deg, max_terms));
    return Ideal(r, std::move(gens));
  }

 private:
  std::mt19937_64 rng_;
};

/// A single case returns an empty string on success, otherwise a witness.
using Case = std::function<std::string(Sampler&)>;

std::string label(const RingPtr& r, const std::string& what) {
  return "p=" + std::to_string(r->characteristic()) + " " + what;
}

std::string adjunction(Sampler& s) {
  auto r = s.ring({2, 3, 5}, {"x", "y"});
  const int e = 1 + static_cast<int>(s.below(2));
  Ideal j = s.ideal(r, 3, 6, 3);
  if (!bracket_power(bracket_root(j, e), e).contains(j))
    return label(r, "J ⊄ root(J)^[q] for J=" + j.to_string() + ", e=" + std::to_string(e));
  if (bracket_root(bracket_power(j, e), e) != j)
    return label(r, "root(J^[q]) != J for J=" + j.to_string() + ", e=" + std::to_string(e));
  return {};
}

std::string linearity(Sampler& s) {
  auto r = s.ring({2, 3, 5}, {"x", "y"});
  const int e = 1 + static_cast<int>(s.below(2));
  const std::uint64_t q = frobenius_q(*r, e);
  Poly h = s.poly(r, 3, 3);
  Poly g = s.poly(r, static_cast<std::uint32_t>(2 * q), 6);
  Poly g2 = s.poly(r, static_cast<std::uint32_t>(2 * q), 6);
  if (trace(h.frobenius(q) * g, e) != h * trace(g, e))
    return label(r, "trace(h^q g) != h trace(g) for h=" + h.to_string() + ", g=" + g.to_string());
  if (trace(g + g2, e) != trace(g, e) + trace(g2, e))
    return label(r, "trace not additive on " + g.to_string() + ", " + g2.to_string());
  return {};
}

std::string composition(Sampler& s) {
  auto r = s.ring({2, 3}, {"x", "y"});
  CartierMap phi(s.nonzero(r, 4, 3), 1);
  Poly g = s.poly(r, 12, 5);
  if (phi(phi(g)) != phi.iterate(2)(g))
    return label(r, "phi(phi(g)) != phi^2(g) for f=" + phi.multiplier().to_string() + ", g=" + g.to_string());
  Ideal j = s.ideal(r, 2, 4, 3);
  if (apply_cartier(phi, apply_cartier(phi, j)) != apply_cartier(phi.iterate(2), j))
    return label(r, "ideal composition fails for f=" + phi.multiplier().to_string() + ", J=" + j.to_string());
  return {};
}

struct GradedInstance {
  ProjScheme x;
  Poly f;
  std::uint32_t m;
};

/// Random form on P^1 or P^2 with a degree m large enough that every source
/// degree stays nonnegative for coefficients a ≤ 2(p-1).
GradedInstance graded_instance(Sampler& s) {
  auto r = s.below(2) == 0 ? s.ring({2, 3, 5}, {"x", "y"}) : s.ring({2, 3, 5}, {"x", "y", "z"});
  Poly f = s.homogeneous(r, 1 + static_cast<std::uint32_t>(s.below(3)), 3);
  const std::int64_t need = 2 * static_cast<std::int64_t>(f.degree()) - static_cast<std::int64_t>(r->nvars());
  const auto m = static_cast<std::uint32_t>(std::max<std::int64_t>(need, 0) + static_cast<std::int64_t>(s.below(3)));
  return {ProjScheme::projective_space(r), f, m};
}

std::string s0_monotone(Sampler& s) {
  GradedInstance g = graded_instance(s);
  const std::uint64_t p = g.x.ring()->characteristic();
  const std::uint64_t a2 = s.below(p);
  const std::uint64_t a1 = a2 + s.below(p - 1);
  PairDivisor big(g.f, a1, 1), small(g.f, a2, 1);
  const S0Kind which = s.below(2) == 0 ? S0Kind::kSigma : S0Kind::kTau;
  auto vb = s0_compute(g.x, big, g.m, which).space;
  auto vs = s0_compute(g.x, small, g.m, which).space;
  if (!vs.contains(vb))
    return label(g.x.ring(), "S0 not monotone for f=" + g.f.to_string() + ", a=" + std::to_string(a1) + " vs " +
                                 std::to_string(a2) + ", m=" + std::to_string(g.m));
  return {};
}

std::string tau_in_sigma(Sampler& s) {
  if (s.below(2) == 0) {
    auto r = s.ring({2, 3, 5, 7}, {"x", "y"});
    PairDivisor pair(s.nonzero(r, 3, 3), s.below(2 * (r->characteristic() - 1) + 1), 1);
    if (!sigma(pair).contains(tau(pair))) return label(r, "tau ⊄ sigma for " + pair.describe());
    return {};
  }
  GradedInstance g = graded_instance(s);
  const std::uint64_t p = g.x.ring()->characteristic();
  PairDivisor pair(g.f, s.below(2 * (p - 1) + 1), 1);
  auto vs = s0_compute(g.x, pair, g.m, S0Kind::kSigma).space;
  auto vt = s0_compute(g.x, pair, g.m, S0Kind::kTau).space;
  if (!vs.contains(vt))
    return label(g.x.ring(), "S0(tau) ⊄ S0(sigma) for " + pair.describe() + ", m=" + std::to_string(g.m));
  return {};
}

std::string level_independence(Sampler& s) {
  GradedInstance g = graded_instance(s);
  const std::uint64_t p = g.x.ring()->characteristic();
  PairDivisor pair(g.f, s.below(2 * (p - 1) + 1), 1);
  const S0Kind which = s.below(2) == 0 ? S0Kind::kSigma : S0Kind::kTau;
  if (s0_compute(g.x, pair, g.m, which).space != s0_compute(g.x, pair.at_level(2), g.m, which).space)
    return label(g.x.ring(), "S0 changes with level for " + pair.describe() + ", m=" + std::to_string(g.m));
  return {};
}

std::string twist_law(Sampler& s) {
  auto r = s.ring({2, 3, 5, 7}, {"x", "y"});
  PairDivisor pair(s.nonzero(r, 4, 3), s.below(2 * (r->characteristic() - 1) + 1), 1);
  Poly g = s.nonzero(r, 2, 2);
  if (!twist_check(pair, g).holds) return label(r, "twist law fails for " + pair.describe() + ", g=" + g.to_string());
  return {};
}

std::string fedder_agreement(Sampler& s) {
  auto r = s.ring({2, 3, 5, 7}, {"x", "y"});
  const std::vector<Coeff> origin(2, 0);
  Poly h = s.nonzero(r, 4, 4);
  h = h - Poly::constant(r, h.evaluate(origin));
  if (h.is_zero()) h = parse_poly(r, "x*y");
  const bool local = is_sharply_F_pure_at(PairDivisor(h, r->characteristic() - 1, 1), origin);
  if (local != fedder_oracle(Ideal(r, {h}), irrelevant_ideal(r)))
    return label(r, "Fedder disagrees with the local check for h=" + h.to_string());
  return {};
}

const std::map<std::string, Case>& cases() {
  static const std::map<std::string, Case> table = {
      {"bracket-root-adjunction", adjunction},
      {"p-inverse-linearity", linearity},
      {"composition", composition},
      {"s0-monotonicity", s0_monotone},
      {"tau-in-sigma", tau_in_sigma},
      {"level-independence", level_independence},
      {"twist-law", twist_law},
      {"fedder-agreement", fedder_agreement},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : cases()) out.push_back(k);
    return out;
  }();
  return names;
}

PropertyOutcome run_property(const std::string& name, std::size_t n, std::uint64_t seed) {
  auto it = cases().find(name);
  if (it == cases().end()) throw DomainError("unknown property '" + name + "'");
  PropertyOutcome out;
  out.name = name;
  Sampler sampler(seed);
  for (std::size_t i = 0; i < n; ++i) {
    std::string witness;
    try {
      witness = it->second(sampler);
    } catch (const Error& e) {
      witness = std::string(e.kind()) + " error: " + e.what();
    }
    ++out.cases;
    if (!witness.empty()) {
      ++out.failures;
      if (out.witnesses.size() < 5) out.witnesses.push_back("case " + std::to_string(i) + ": " + witness);
    }
  }
  return out;
}

}  // namespace frobsys::cli
