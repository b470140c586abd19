#include "frobsys/graded.hpp"

#include <algorithm>

#include "frobsys/errors.hpp"
#include "frobsys/groebner.hpp"

namespace frobsys {

namespace {

void enumerate(std::size_t var, std::size_t nvars, std::uint32_t left, Monomial& cur,
               std::vector<Monomial>& out) {
  if (var + 1 == nvars) {
    cur.set(var, left);
    out.push_back(cur);
    cur.set(var, 0);
    return;
  }
  for (std::uint32_t k = 0; k <= left; ++k) {
    cur.set(var, k);
    enumerate(var + 1, nvars, left - k, cur, out);
  }
  cur.set(var, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const Ring& ring, std::uint32_t d) {
  std::vector<Monomial> out;
  Monomial cur;
  enumerate(0, ring.nvars(), d, cur, out);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return ring.greater(a, b); });
  return out;
}

GradedChart::GradedChart(Ideal modulus, std::uint32_t degree)
    : modulus_(std::move(modulus)), degree_(degree) {
  const Ring& ring = *modulus_.ring();
  std::vector<Monomial> all = monomials_of_degree(ring, degree);
  const std::vector<Poly>& gb = modulus_.groebner();
  auto is_standard = [&](const Monomial& m) {
    for (const Poly& g : gb)
      if (g.leading_monomial().divides(m)) return false;
    return true;
  };
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
  for (const Monomial& m : all)
    if (is_standard(m)) {
      index.emplace(m, static_cast<std::uint32_t>(standard_.size()));
      standard_.push_back(m);
    }
  for (const Monomial& m : all) {
    SparseVec v;
    if (auto it = index.find(m); it != index.end()) {
      v.push_back({it->second, 1});
    } else {
      Poly nf = normal_form(Poly::monomial(modulus_.ring(), m), gb);
      for (const Term& t : nf.terms()) v.push_back({index.at(t.mono), t.coeff});
    }
    table_.emplace(m, std::move(v));
  }
}

const SparseVec& GradedChart::coords(const Monomial& m) const {
  auto it = table_.find(m);
  if (it == table_.end()) throw DomainError("monomial has the wrong degree for this graded piece");
  return it->second;
}

std::vector<Coeff> GradedChart::vector_of(const Poly& form) const {
  const PrimeField& k = ring()->field();
  std::vector<Coeff> v(dim(), 0);
  for (const Term& t : form.terms())
    for (auto [i, c] : coords(t.mono)) v[i] = k.add(v[i], k.mul(c, t.coeff));
  return v;
}

Poly GradedChart::form_of(std::span<const Coeff> v) const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) terms.push_back({standard_[i], v[i]});
  return Poly(ring(), std::move(terms));
}

GradedSubspace::GradedSubspace(ChartPtr chart, Matrix rref_rows)
    : chart_(std::move(chart)), rows_(std::move(rref_rows)) {
  if (rows_.rows() == 0) rows_ = Matrix(0, chart_->dim());
}

GradedSubspace GradedSubspace::full(ChartPtr chart) {
  Matrix m(chart->dim(), chart->dim());
  for (std::size_t i = 0; i < chart->dim(); ++i) m.at(i, i) = 1;
  return GradedSubspace(std::move(chart), std::move(m));
}

GradedSubspace GradedSubspace::zero(ChartPtr chart) {
  const std::size_t d = chart->dim();
  return GradedSubspace(std::move(chart), Matrix(0, d));
}

GradedSubspace GradedSubspace::from_basis(ChartPtr chart, const EchelonBasis& basis) {
  return GradedSubspace(std::move(chart), basis.to_rref());
}

GradedSubspace GradedSubspace::span(ChartPtr chart, std::span<const Poly> forms) {
  EchelonBasis basis(chart->ring()->field(), chart->dim());
  for (const Poly& f : forms) basis.insert(chart->vector_of(f));
  return from_basis(std::move(chart), basis);
}

std::vector<Poly> GradedSubspace::basis() const {
  std::vector<Poly> out;
  for (std::size_t r = 0; r < rows_.rows(); ++r) out.push_back(chart_->form_of(rows_.row(r)));
  return out;
}

bool GradedSubspace::contains(const Poly& form) const {
  EchelonBasis b(chart_->ring()->field(), ambient_dim());
  for (std::size_t r = 0; r < rows_.rows(); ++r)
    b.insert(std::vector<Coeff>(rows_.row(r).begin(), rows_.row(r).end()));
  return b.contains(chart_->vector_of(form));
}

bool GradedSubspace::contains(const GradedSubspace& other) const {
  if (other.ambient_dim() != ambient_dim() || other.degree() != degree())
    throw StructuralError("subspaces live in different graded pieces");
  EchelonBasis b(chart_->ring()->field(), ambient_dim());
  for (std::size_t r = 0; r < rows_.rows(); ++r)
    b.insert(std::vector<Coeff>(rows_.row(r).begin(), rows_.row(r).end()));
  for (std::size_t r = 0; r < other.rows_.rows(); ++r)
    if (!b.contains(std::vector<Coeff>(other.rows_.row(r).begin(), other.rows_.row(r).end())))
      return false;
  return true;
}

bool operator==(const GradedSubspace& a, const GradedSubspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.degree() != b.degree())
    throw StructuralError("subspaces live in different graded pieces");
  return a.rows_ == b.rows_;
}

GradedSubspace ideal_piece(const Ideal& j, const ChartPtr& chart) {
  require_same_ring(*j.ring(), *chart->ring(), "ideal_piece");
  const Ring& ring = *chart->ring();
  const PrimeField& k = ring.field();
  EchelonBasis basis(k, chart->dim());
  if (j.is_zero()) return GradedSubspace::from_basis(chart, basis);
  const std::uint32_t m = chart->degree();
  for (const Poly& g : j.groebner()) {
    if (!g.is_homogeneous()) throw DomainError("ideal_piece: ideal must be homogeneous");
    if (static_cast<std::uint32_t>(g.degree()) > m) continue;
    for (const Monomial& gamma : monomials_of_degree(ring, m - g.degree())) {
      std::vector<Coeff> v(chart->dim(), 0);
      for (const Term& t : g.terms())
        for (auto [i, c] : chart->coords(t.mono * gamma)) v[i] = k.add(v[i], k.mul(c, t.coeff));
      basis.insert(std::move(v));
      if (basis.full()) return GradedSubspace::from_basis(chart, basis);
    }
  }
  return GradedSubspace::from_basis(chart, basis);
}

}  // namespace frobsys
