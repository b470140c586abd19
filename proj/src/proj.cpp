#include "frobsys/proj.hpp"

#include <functional>
#include <string>

#include "frobsys/errors.hpp"
#include "frobsys/extfield.hpp"
#include "frobsys/kernels/trace_image.hpp"

namespace frobsys {

namespace {

PairDivisor on_cone(const ProjScheme& x, const PairDivisor& pair) {
  require_same_ring(*x.ring(), *pair.ring(), "pair on scheme");
  for (const PairComponent& c : pair.components())
    if (!c.f.is_homogeneous()) throw DomainError("pair divisor must be given by homogeneous forms");
  return pair.on(x.equations());
}

std::int64_t degree_sum(const std::vector<Poly>& forms) {
  std::int64_t s = 0;
  for (const Poly& f : forms) s += f.degree();
  return s;
}

void check_source_degree(const ProjScheme& x, const PairDivisor& pair, std::uint32_t m, int level) {
  std::int64_t src = s0_source_degree(x, pair, m, level);
  if (src < 0)
    throw DomainError("negative source degree " + std::to_string(src) + " at level " +
                      std::to_string(level));
}

Ideal start_ideal(const ProjScheme& x, const PairDivisor& pair, S0Kind which) {
  if (which == S0Kind::kSigma) return Ideal::unit(x.ring());
  return graded_fsing_ideal(x, pair, S0Kind::kTau);
}

// Iterates B_k = φ(B_{k-1}) + modulus from `start` until two ideals repeat.
S0Result stable_image(const CartierMap& phi, const Ideal& modulus, Ideal start, const ChartPtr& chart,
                      const std::function<void(int)>& check_level) {
  const int cap = modulus.ring()->caps().max_s0_levels;
  std::vector<std::size_t> dims;
  Ideal cur = start + modulus;
  for (int k = 1; k <= cap; ++k) {
    check_level(k);
    Ideal next = apply_cartier(phi, cur) + modulus;
    next = Ideal::from_groebner(next.ring(), next.groebner());
    GradedSubspace piece = ideal_piece(next, chart);
    dims.push_back(piece.dim());
    if (next == cur) return {std::move(piece), k, std::move(dims)};
    cur = std::move(next);
  }
  throw ResourceError("S0 stabilization cap exceeded (levels=" + std::to_string(cap) + ")");
}

std::string format_elem(const ExtField& f, const ExtField::Elem& a) {
  if (f.degree() == 1) return std::to_string(a[0]);
  std::string s;
  for (int i = 0; i < f.degree(); ++i) {
    if (!a[i]) continue;
    if (!s.empty()) s += "+";
    if (i == 0) s += std::to_string(a[i]);
    else s += (a[i] == 1 ? "" : std::to_string(a[i]) + "*") + (i == 1 ? "w" : "w^" + std::to_string(i));
  }
  return s.empty() ? "0" : s;
}

std::string format_point(const ExtField& f, const std::vector<ExtField::Elem>& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ":" : "") + format_elem(f, p[i]);
  return s + "]";
}

}  // namespace

ProjScheme::ProjScheme(RingPtr ring, std::vector<Poly> equations, Ideal ideal)
    : ring_(std::move(ring)), equations_(std::move(equations)), ideal_(std::move(ideal)) {}

ProjScheme ProjScheme::projective_space(RingPtr ring) { return complete_intersection(ring, {}); }

ProjScheme ProjScheme::complete_intersection(RingPtr ring, std::vector<Poly> equations) {
  if (ring->nvars() < 2) throw DomainError("projective space needs at least two variables");
  for (const Poly& h : equations) {
    require_same_ring(*ring, *h.ring(), "scheme equations");
    if (h.is_constant() || !h.is_homogeneous())
      throw DomainError("scheme equations must be nonconstant forms: " + h.to_string());
  }
  if (equations.size() >= ring->nvars()) throw DomainError("too many equations for a nonempty scheme");
  Ideal ideal(ring, equations);
  if (!equations.empty()) {
    Ideal sat = saturate(ideal, irrelevant_ideal(ring));
    if (sat.is_unit()) throw DomainError("scheme is empty");
    if (sat != ideal) throw StructuralError("defining ideal is not saturated");
    ideal = Ideal::from_groebner(ring, ideal.groebner());
  }
  return ProjScheme(std::move(ring), std::move(equations), std::move(ideal));
}

int ProjScheme::canonical_twist() const { return static_cast<int>(degree_sum(equations_)) - n() - 1; }

ChartPtr ProjScheme::chart(std::uint32_t m) const { return std::make_shared<GradedChart>(ideal_, m); }

std::string ProjScheme::describe() const {
  if (equations_.empty()) return "P^" + std::to_string(n());
  std::string s = "V(";
  for (std::size_t i = 0; i < equations_.size(); ++i) s += (i ? ", " : "") + equations_[i].to_string();
  return s + ") in P^" + std::to_string(n());
}

GradedSubspace graded_piece(const ProjScheme& x, std::uint32_t m) {
  return GradedSubspace::full(x.chart(m));
}

std::int64_t s0_source_degree(const ProjScheme& x, const PairDivisor& pair, std::uint32_t m,
                              int level) {
  const std::int64_t q = static_cast<std::int64_t>(pair.q());
  std::int64_t big_q = 1;
  for (int i = 0; i < level; ++i) big_q *= q;
  std::int64_t src = big_q * m + (big_q - 1) * (x.n() + 1 - degree_sum(x.equations()));
  const std::int64_t scale = (big_q - 1) / (q - 1);
  for (const PairComponent& c : pair.components())
    src -= static_cast<std::int64_t>(c.a) * c.f.degree() * scale;
  return src;
}

Ideal graded_fsing_ideal(const ProjScheme& x, const PairDivisor& pair, S0Kind which) {
  PairDivisor cone = on_cone(x, pair);
  Ideal j = which == S0Kind::kSigma ? sigma(cone) : tau(cone);
  return saturate(j + x.ideal(), irrelevant_ideal(x.ring()));
}

S0Result s0_compute(const ProjScheme& x, const PairDivisor& pair, std::uint32_t m, S0Kind which) {
  PairDivisor cone = on_cone(x, pair);
  return stable_image(cone.cartier_map(), x.ideal(), start_ideal(x, pair, which), x.chart(m),
                      [&](int k) { check_source_degree(x, pair, m, k); });
}

S0Result s0_direct(const ProjScheme& x, const PairDivisor& pair, std::uint32_t m, S0Kind which,
                   bool parallel) {
  PairDivisor cone = on_cone(x, pair);
  ChartPtr chart = x.chart(m);
  std::vector<Poly> sources;
  if (which == S0Kind::kSigma) sources.push_back(Poly::constant(x.ring(), 1));
  else sources = start_ideal(x, pair, which).groebner();

  const int cap = x.ring()->caps().max_s0_levels;
  std::vector<std::size_t> dims;
  std::optional<Matrix> prev;
  for (int k = 1; k <= cap; ++k) {
    check_source_degree(x, pair, m, k);
    PairDivisor level = cone.at_level(k);
    const Poly mult = level.multiplier();
    std::vector<Poly> components;
    for (const Poly& g : sources)
      for (auto& [b, part] : frob_expand(mult * g, level.level()).parts) components.push_back(part);
    Matrix image = parallel ? kernels::trace_image_parallel(*chart, components)
                            : kernels::trace_image_serial(*chart, components);
    dims.push_back(image.rows());
    if (prev && *prev == image) return {GradedSubspace(chart, std::move(image)), k, std::move(dims)};
    prev = std::move(image);
  }
  throw ResourceError("S0 stabilization cap exceeded (levels=" + std::to_string(cap) + ")");
}

bool is_base_point_free(const GradedSubspace& v) {
  if (v.is_zero()) throw DomainError("base-point check on the zero subspace");
  const RingPtr& ring = v.modulus().ring();
  Ideal lifts(ring, v.basis());
  return saturate(v.modulus() + lifts, irrelevant_ideal(ring)).is_unit();
}

SeparationReport separates(const ProjScheme& x, const GradedSubspace& v, int k) {
  if (x.dimension() != 1) throw DomainError("separation check needs a curve");
  ExtField field(x.ring()->characteristic(), k);
  const std::size_t nv = x.ring()->nvars();
  const std::vector<Poly> forms = v.basis();
  std::vector<std::vector<Poly>> grads(forms.size());
  for (std::size_t s = 0; s < forms.size(); ++s)
    for (std::size_t i = 0; i < nv; ++i) grads[s].push_back(forms[s].derivative(i));
  std::vector<std::vector<Poly>> jac(x.equations().size());
  for (std::size_t j = 0; j < x.equations().size(); ++j)
    for (std::size_t i = 0; i < nv; ++i) jac[j].push_back(x.equations()[j].derivative(i));

  // Normalized representatives: first nonzero coordinate equal to 1.
  std::vector<std::vector<ExtField::Elem>> points;
  for (std::size_t lead = 0; lead < nv; ++lead) {
    std::uint64_t count = 1;
    for (std::size_t i = lead + 1; i < nv; ++i) count *= field.order();
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<ExtField::Elem> pt(nv, field.zero());
      pt[lead] = field.one();
      std::uint64_t rest = idx;
      for (std::size_t i = lead + 1; i < nv; ++i) {
        pt[i] = field.element(rest % field.order());
        rest /= field.order();
      }
      bool on = true;
      for (const Poly& h : x.equations())
        if (!field.is_zero(field.evaluate(h, pt))) on = false;
      if (on) points.push_back(std::move(pt));
    }
  }

  SeparationReport rep;
  rep.extension_degree = k;
  rep.points = points.size();
  auto add_failure = [&](std::string msg) {
    if (rep.failures.size() < 20) rep.failures.push_back(std::move(msg));
  };
  std::vector<std::vector<ExtField::Elem>> values;
  for (const auto& pt : points) {
    std::vector<ExtField::Elem> row;
    for (const Poly& f : forms) row.push_back(field.evaluate(f, pt));
    values.push_back(std::move(row));
  }
  for (std::size_t a = 0; a < points.size(); ++a) {
    std::vector<std::vector<ExtField::Elem>> jm;
    for (const auto& eq : jac) {
      std::vector<ExtField::Elem> row;
      for (const Poly& d : eq) row.push_back(field.evaluate(d, points[a]));
      jm.push_back(std::move(row));
    }
    auto tangent = field.kernel(std::move(jm), nv);
    std::vector<std::vector<ExtField::Elem>> mat{values[a]};
    for (const auto& t : tangent) {
      std::vector<ExtField::Elem> row;
      for (std::size_t s = 0; s < forms.size(); ++s) {
        ExtField::Elem acc = field.zero();
        for (std::size_t i = 0; i < nv; ++i)
          acc = field.add(acc, field.mul(field.evaluate(grads[s][i], points[a]), t[i]));
        row.push_back(std::move(acc));
      }
      mat.push_back(std::move(row));
    }
    ++rep.tangents_checked;
    if (forms.empty() || field.rank(mat) != tangent.size())
      add_failure("tangent directions at " + format_point(field, points[a]) + " not separated");
  }
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      ++rep.pairs_checked;
      if (forms.empty() || field.rank({values[a], values[b]}) != 2)
        add_failure("points " + format_point(field, points[a]) + " and " +
                    format_point(field, points[b]) + " not separated");
    }
  rep.coverage = std::to_string(rep.points) + " points rational over F_" +
                 std::to_string(field.order()) + ", " + std::to_string(rep.pairs_checked) +
                 " pairs, " + std::to_string(rep.tangents_checked) +
                 " tangent checks; closed points of higher degree not covered";
  return rep;
}

bool global_generation_check(const Ideal& j, std::uint32_t m) {
  if (!j.is_homogeneous()) throw DomainError("global generation check needs a homogeneous ideal");
  const RingPtr& ring = j.ring();
  auto chart = std::make_shared<GradedChart>(Ideal(ring), m);
  Ideal jm(ring, ideal_piece(j, chart).basis());
  Ideal irr = irrelevant_ideal(ring);
  return saturate(jm, irr) == saturate(j, irr);
}

GlobalGenerationReport s0_global_generation_check(const ProjScheme& x, const PairDivisor& pair,
                                                  std::uint32_t m, S0Kind which) {
  S0Result s0 = s0_compute(x, pair, m, which);
  Ideal target = graded_fsing_ideal(x, pair, which);
  bool holds = false;
  if (!s0.space.is_zero()) {
    if (target.is_unit()) {
      holds = is_base_point_free(s0.space);
    } else {
      Ideal lifts = x.ideal() + Ideal(x.ring(), s0.space.basis());
      holds = saturate(lifts, irrelevant_ideal(x.ring())) == target;
    }
  }
  return {std::move(s0), std::move(target), holds};
}

Ideal projective_point_ideal(const RingPtr& ring, std::span<const Coeff> point) {
  const std::size_t n = ring->nvars();
  if (point.size() != n) throw StructuralError("point has wrong number of coordinates");
  const PrimeField& k = ring->field();
  bool nonzero = false;
  for (Coeff c : point) nonzero = nonzero || k.reduce(c) != 0;
  if (!nonzero) throw DomainError("the zero vector is not a projective point");
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      gens.push_back(Poly::variable(ring, j).scaled(k.reduce(point[i])) -
                     Poly::variable(ring, i).scaled(k.reduce(point[j])));
  return Ideal(ring, std::move(gens));
}

DegreeBoundResult degree_bound_pipeline(const RingPtr& ring,
                                        const std::vector<std::vector<Coeff>>& points, const Poly& a,
                                        std::uint32_t d, std::uint32_t l, std::uint32_t e) {
  require_same_ring(*ring, *a.ring(), "degree_bound_pipeline");
  if (points.empty()) throw DomainError("no points given");
  if (l == 0 || e == 0) throw DomainError("multiplicity threshold and codimension must be positive");
  if (!a.is_homogeneous() || a.degree() != static_cast<int>(d))
    throw DomainError("A must be a form of degree " + std::to_string(d));
  const std::uint32_t n = static_cast<std::uint32_t>(ring->nvars()) - 1;
  if (e < n)
    throw PreconditionError("points have codimension " + std::to_string(n) + " > e = " + std::to_string(e));
  std::string offending;
  for (const auto& pt : points) {
    if (multiplicity(a, pt) < static_cast<int>(l)) {
      offending += offending.empty() ? "" : ", ";
      offending += "[";
      for (std::size_t i = 0; i < pt.size(); ++i) offending += (i ? ":" : "") + std::to_string(pt[i]);
      offending += "]";
    }
  }
  if (!offending.empty()) throw PreconditionError("multiplicity below " + std::to_string(l) + " at " + offending);

  DegreeBoundResult out{Poly(ring), d * e / l, 0, 0, true, Ideal(ring), 0};
  const std::uint64_t p = ring->characteristic();
  const std::uint64_t max_q = ring->caps().max_q;
  for (std::uint64_t q = p, level = 1; q <= max_q && out.level == 0; q *= p, ++level)
    if (static_cast<std::uint64_t>(e) * (q - 1) % l == 0) {
      out.level = static_cast<int>(level);
      out.a = static_cast<std::uint64_t>(e) * (q - 1) / l;
    }
  if (out.level == 0) {
    // Round t = e/l up to a/(q-1) while keeping t'·d < δ + 1.
    out.exact_coefficient = false;
    for (std::uint64_t q = p, level = 1; q <= max_q && out.level == 0; q *= p, ++level) {
      std::uint64_t ac = (static_cast<std::uint64_t>(e) * (q - 1) + l - 1) / l;
      if (ac * d < (out.delta + 1) * (q - 1)) {
        out.level = static_cast<int>(level);
        out.a = ac;
      }
    }
    if (out.level == 0) throw ResourceError("no level within the q cap represents e/l (max_q=" + std::to_string(max_q) + ")");
  }

  Ideal is = projective_point_ideal(ring, points.front());
  for (std::size_t i = 1; i < points.size(); ++i) is = intersect(is, projective_point_ideal(ring, points[i]));
  out.tau_ideal = saturate(tau(PairDivisor(a, out.a, out.level)), irrelevant_ideal(ring));
  if (!is.contains(out.tau_ideal)) throw InvariantError("test ideal is not contained in the ideal of S");
  auto chart = std::make_shared<GradedChart>(Ideal(ring), out.delta);
  GradedSubspace piece = ideal_piece(out.tau_ideal, chart);
  out.sections = piece.dim();
  if (piece.is_zero()) throw InvariantError("test ideal has no section in degree " + std::to_string(out.delta));
  out.form = piece.basis().front();
  if (!is.contains(out.form)) throw InvariantError("returned form does not vanish on S");
  return out;
}

RestrictionReport restriction_surjectivity(const ProjScheme& x, const PairDivisor& pair,
                                           const Ideal& iz, int m) {
  PairDivisor cone = on_cone(x, pair);
  Ideal z = iz + x.ideal();
  if (!iz.is_homogeneous()) throw DomainError("center must be given by a homogeneous ideal");
  if (z.is_unit() || !is_compatible(z, cone))
    throw PreconditionError("center is not compatible with the pair");
  // deg(M - K - Δ) > 0, scaled by q-1.
  std::int64_t pos = (static_cast<std::int64_t>(m) - x.canonical_twist()) * static_cast<std::int64_t>(pair.q() - 1);
  for (const PairComponent& c : pair.components()) pos -= static_cast<std::int64_t>(c.a) * c.f.degree();
  if (pos <= 0) throw PreconditionError("M - K - Δ is not ample");
  if (m < 0) throw PreconditionError("negative degree");

  const auto deg = static_cast<std::uint32_t>(m);
  S0Result sx = s0_compute(x, pair, deg, S0Kind::kSigma);
  auto zchart = std::make_shared<GradedChart>(Ideal::from_groebner(x.ring(), z.groebner()), deg);
  S0Result sz = stable_image(cone.cartier_map(), z, Ideal::unit(x.ring()), zchart,
                             [&](int k) { check_source_degree(x, pair, deg, k); });
  std::vector<Poly> forms = sx.space.basis();
  GradedSubspace restricted = GradedSubspace::span(zchart, forms);
  bool surjective = restricted == sz.space;
  return {std::move(sx.space), std::move(sz.space), std::move(restricted), surjective};
}

}  // namespace frobsys
