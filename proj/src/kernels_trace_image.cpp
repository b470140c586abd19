#include "frobsys/kernels/trace_image.hpp"

#include <omp.h>

#include <map>

namespace frobsys::kernels {

namespace {

struct Item {
  std::size_t component;
  const Monomial* gamma;
};

struct Items {
  std::map<std::uint32_t, std::vector<Monomial>> by_degree;
  std::vector<Item> list;
};

Items make_items(const GradedChart& chart, std::span<const Poly> components) {
  Items items;
  const std::uint32_t m = chart.degree();
  for (std::size_t c = 0; c < components.size(); ++c) {
    const Poly& g = components[c];
    if (g.is_zero() || static_cast<std::uint32_t>(g.degree()) > m) continue;
    const std::uint32_t k = m - g.degree();
    auto it = items.by_degree.find(k);
    if (it == items.by_degree.end())
      it = items.by_degree.emplace(k, monomials_of_degree(*chart.ring(), k)).first;
  }
  for (std::size_t c = 0; c < components.size(); ++c) {
    const Poly& g = components[c];
    if (g.is_zero() || static_cast<std::uint32_t>(g.degree()) > m) continue;
    for (const Monomial& gamma : items.by_degree.at(m - g.degree())) items.list.push_back({c, &gamma});
  }
  return items;
}

std::vector<Coeff> image_vector(const GradedChart& chart, const Poly& g, const Monomial& gamma) {
  const PrimeField& k = chart.ring()->field();
  std::vector<Coeff> v(chart.dim(), 0);
  for (const Term& t : g.terms())
    for (auto [i, c] : chart.coords(t.mono * gamma)) v[i] = k.add(v[i], k.mul(c, t.coeff));
  return v;
}

}  // namespace

Matrix trace_image_serial(const GradedChart& chart, std::span<const Poly> components) {
  Items items = make_items(chart, components);
  EchelonBasis basis(chart.ring()->field(), chart.dim());
  for (const Item& it : items.list) {
    if (basis.full()) break;
    basis.insert(image_vector(chart, components[it.component], *it.gamma));
  }
  return basis.to_rref();
}

Matrix trace_image_parallel(const GradedChart& chart, std::span<const Poly> components) {
  Items items = make_items(chart, components);
  const PrimeField& field = chart.ring()->field();
  const int threads = omp_get_max_threads();
  std::vector<EchelonBasis> local(threads, EchelonBasis(field, chart.dim()));
  const auto n = static_cast<std::ptrdiff_t>(items.list.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    EchelonBasis& mine = local[omp_get_thread_num()];
    if (mine.full()) continue;
    const Item& it = items.list[i];
    mine.insert(image_vector(chart, components[it.component], *it.gamma));
  }
  EchelonBasis merged(field, chart.dim());
  for (const EchelonBasis& b : local) {
    Matrix rows = b.to_rref();
    for (std::size_t r = 0; r < rows.rows() && !merged.full(); ++r)
      merged.insert(std::vector<Coeff>(rows.row(r).begin(), rows.row(r).end()));
  }
  return merged.to_rref();
}

}  // namespace frobsys::kernels
