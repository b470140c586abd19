#include "frobsys/groebner.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "frobsys/kernels/rref.hpp"

namespace frobsys {

namespace {

const Poly* find_reducer(const Monomial& m, const std::vector<const Poly*>& reducers) {
  for (const Poly* g : reducers)
    if (g->leading_monomial().divides(m)) return g;
  return nullptr;
}

// Reducers must be monic.
Poly reduce_full(const Poly& f, const std::vector<const Poly*>& reducers) {
  const Ring& ring = *f.ring();
  std::vector<Term> rem;
  std::vector<Term> h = f.terms();
  std::size_t start = 0;
  while (start < h.size()) {
    const Term lt = h[start];
    if (const Poly* g = find_reducer(lt.mono, reducers)) {
      Monomial m = g->leading_monomial().cofactor_in(lt.mono);
      h = detail::sub_mul_terms(ring, std::span<const Term>(h).subspan(start), lt.coeff, m,
                                g->terms());
      start = 0;
    } else {
      rem.push_back(lt);
      ++start;
    }
  }
  return Poly(f.ring(), std::move(rem));
}

Poly s_polynomial(const Poly& f, const Poly& g, const Monomial& l) {
  // Both monic.
  Poly a = f.times_monomial(f.leading_monomial().cofactor_in(l));
  return a.sub_mul(1, g.leading_monomial().cofactor_in(l), g);
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Buchberger {
 public:
  explicit Buchberger(RingPtr ring) : ring_(std::move(ring)), caps_(ring_->caps()) {}

  // Returns false when the unit ideal was detected.
  bool add_generator(const Poly& f) { return insert(reduce_full(f, reducers())); }

  bool run() {
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
        return ring_->compare(a.lcm, b.lcm) < 0;
      });
      Pair pr = *best;
      *best = pairs_.back();
      pairs_.pop_back();
      const Poly& f = polys_[pr.i];
      const Poly& g = polys_[pr.j];
      if (f.size() == 1 && g.size() == 1) continue;
      if (pr.lcm.degree() > caps_.max_degree)
        throw ResourceError("Groebner degree cap exceeded (degree=" +
                            std::to_string(caps_.max_degree) + ")");
      if (!insert(reduce_full(s_polynomial(f, g, pr.lcm), reducers()))) return false;
    }
    return true;
  }

  std::vector<Poly> reduced_basis() const {
    std::vector<const Poly*> act = reducers();
    std::sort(act.begin(), act.end(), [&](const Poly* a, const Poly* b) {
      return ring_->compare(a->leading_monomial(), b->leading_monomial()) < 0;
    });
    std::vector<const Poly*> minimal;
    for (const Poly* g : act) {
      bool redundant = false;
      for (const Poly* m : minimal)
        if (m->leading_monomial().divides(g->leading_monomial())) redundant = true;
      if (!redundant) minimal.push_back(g);
    }
    std::vector<Poly> out;
    out.reserve(minimal.size());
    for (const Poly* g : minimal) {
      std::vector<const Poly*> others;
      for (const Poly* o : minimal)
        if (o != g) others.push_back(o);
      Poly tail(ring_, std::vector<Term>(g->terms().begin() + 1, g->terms().end()));
      Poly head = Poly::monomial(ring_, g->leading_monomial(), 1);
      out.push_back(head + reduce_full(tail, others));
    }
    return out;
  }

 private:
  std::vector<const Poly*> reducers() const {
    std::vector<const Poly*> r;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) r.push_back(&polys_[i]);
    return r;
  }

  bool insert(Poly h) {
    if (h.is_zero()) return true;
    if (h.is_constant()) return false;
    polys_.push_back(h.monic());
    active_.push_back(false);
    update(polys_.size() - 1);
    std::size_t n_active = std::count(active_.begin(), active_.end(), true);
    if (n_active > caps_.max_generators)
      throw ResourceError("Groebner generator cap exceeded (generators=" +
                          std::to_string(caps_.max_generators) + ")");
    return true;
  }

  // Gebauer-Moeller installation of a new basis element.
  void update(std::size_t h) {
    const Monomial lh = polys_[h].leading_monomial();
    std::vector<Pair> fresh;
    for (std::size_t g = 0; g < polys_.size(); ++g)
      if (active_[g]) fresh.push_back({g, h, lcm(polys_[g].leading_monomial(), lh)});

    std::vector<Pair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const Pair& p = fresh[a];
      bool keep = coprime(polys_[p.i].leading_monomial(), lh);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < fresh.size() && keep; ++b)
          if (fresh[b].lcm.divides(p.lcm)) keep = false;
        for (const Pair& q : kept)
          if (keep && q.lcm.divides(p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }
    std::vector<Pair> next;
    for (const Pair& p : pairs_) {
      const Monomial& l = p.lcm;
      bool drop = lh.divides(l) && lcm(polys_[p.i].leading_monomial(), lh) != l &&
                  lcm(polys_[p.j].leading_monomial(), lh) != l;
      if (!drop) next.push_back(p);
    }
    for (const Pair& p : kept)
      if (!coprime(polys_[p.i].leading_monomial(), lh)) next.push_back(p);
    pairs_ = std::move(next);

    for (std::size_t g = 0; g < polys_.size(); ++g)
      if (active_[g] && lh.divides(polys_[g].leading_monomial())) active_[g] = false;
    active_[h] = true;
  }

  RingPtr ring_;
  Caps caps_;
  std::vector<Poly> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

std::vector<Poly> linear_interreduce(std::span<const Poly> polys) {
  if (polys.empty()) return {};
  const RingPtr& ring = polys.front().ring();
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  std::vector<Monomial> columns;
  for (const Poly& f : polys) {
    require_same_ring(*ring, *f.ring(), "linear_interreduce");
    for (const Term& t : f.terms())
      if (index.emplace(t.mono, 0).second) columns.push_back(t.mono);
  }
  std::sort(columns.begin(), columns.end(),
            [&](const Monomial& a, const Monomial& b) { return ring->greater(a, b); });
  for (std::size_t c = 0; c < columns.size(); ++c) index[columns[c]] = c;
  Matrix m(0, columns.size());
  std::vector<Coeff> row(columns.size());
  for (const Poly& f : polys) {
    if (f.is_zero()) continue;
    std::fill(row.begin(), row.end(), 0);
    for (const Term& t : f.terms()) row[index[t.mono]] = t.coeff;
    m.append_row(row);
  }
  kernels::rref(m, ring->field());
  std::vector<Poly> out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<Term> terms;
    for (std::size_t c = 0; c < columns.size(); ++c)
      if (m.at(r, c)) terms.push_back({columns[c], m.at(r, c)});
    out.emplace_back(ring, std::move(terms));
  }
  return out;
}

std::vector<Poly> reduced_groebner_basis(std::span<const Poly> generators) {
  std::vector<Poly> nonzero;
  for (const Poly& f : generators)
    if (!f.is_zero()) nonzero.push_back(f);
  if (nonzero.empty()) return {};
  const RingPtr ring = nonzero.front().ring();
  for (const Poly& f : nonzero) require_same_ring(*ring, *f.ring(), "groebner");
  for (const Poly& f : nonzero)
    if (f.is_constant()) return {Poly::constant(ring, 1)};

  std::size_t total_terms = 0;
  std::unordered_map<Monomial, char, MonomialHash> distinct;
  for (const Poly& f : nonzero) {
    total_terms += f.size();
    for (const Term& t : f.terms()) distinct.emplace(t.mono, 0);
  }
  std::vector<Poly> input = nonzero;
  if (nonzero.size() > 1 && nonzero.size() * distinct.size() <= (1u << 22))
    input = linear_interreduce(nonzero);
  std::sort(input.begin(), input.end(), [&](const Poly& a, const Poly& b) {
    return ring->compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });

  Buchberger bb(ring);
  for (const Poly& f : input)
    if (!bb.add_generator(f)) return {Poly::constant(ring, 1)};
  if (!bb.run()) return {Poly::constant(ring, 1)};
  return bb.reduced_basis();
}

Poly normal_form(const Poly& f, std::span<const Poly> basis) {
  std::vector<Poly> monic;
  monic.reserve(basis.size());
  for (const Poly& g : basis) {
    require_same_ring(*f.ring(), *g.ring(), "normal_form");
    if (!g.is_zero()) monic.push_back(g.monic());
  }
  std::vector<const Poly*> reducers;
  for (const Poly& g : monic) reducers.push_back(&g);
  return reduce_full(f, reducers);
}

}  // namespace frobsys
