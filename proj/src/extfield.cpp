#include "frobsys/extfield.hpp"

#include "frobsys/errors.hpp"

namespace frobsys {

namespace {

// Coefficients low to high, leading 1 implicit at degree k.
bool has_root(const PrimeField& f, const std::vector<Coeff>& mu) {
  const std::uint32_t p = f.characteristic();
  for (Coeff x = 0; x < p; ++x) {
    Coeff acc = 1;
    for (std::size_t i = mu.size(); i-- > 0;) acc = f.add(f.mul(acc, x), mu[i]);
    if (acc == 0) return true;
  }
  return false;
}

}  // namespace

ExtField::ExtField(std::uint32_t p, int k) : base_(p), k_(k), order_(1) {
  if (k < 1 || k > 3) throw UnsupportedError("extension degree must be 1, 2 or 3");
  for (int i = 0; i < k; ++i) order_ *= p;
  mu_.assign(k, 0);
  if (k == 1) return;
  // Degree 2 and 3 polynomials are irreducible iff they have no root.
  const std::uint64_t count = order_;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    for (int i = 0; i < k; ++i) {
      mu_[i] = static_cast<Coeff>(rest % p);
      rest /= p;
    }
    if (!has_root(base_, mu_)) return;
  }
  throw InvariantError("no irreducible polynomial found");
}

ExtField::Elem ExtField::one() const { return embed(1); }

ExtField::Elem ExtField::embed(Coeff c) const {
  Elem e = zero();
  e[0] = c % characteristic();
  return e;
}

ExtField::Elem ExtField::element(std::uint64_t index) const {
  Elem e = zero();
  for (int i = 0; i < k_; ++i) {
    e[i] = static_cast<Coeff>(index % characteristic());
    index /= characteristic();
  }
  return e;
}

bool ExtField::is_zero(const Elem& a) const {
  for (Coeff c : a)
    if (c) return false;
  return true;
}

ExtField::Elem ExtField::add(const Elem& a, const Elem& b) const {
  Elem r(k_);
  for (int i = 0; i < k_; ++i) r[i] = base_.add(a[i], b[i]);
  return r;
}

ExtField::Elem ExtField::sub(const Elem& a, const Elem& b) const {
  Elem r(k_);
  for (int i = 0; i < k_; ++i) r[i] = base_.sub(a[i], b[i]);
  return r;
}

ExtField::Elem ExtField::mul(const Elem& a, const Elem& b) const {
  std::vector<Coeff> prod(2 * k_ - 1, 0);
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) prod[i + j] = base_.add(prod[i + j], base_.mul(a[i], b[j]));
  for (int d = 2 * k_ - 2; d >= k_; --d) {
    Coeff c = prod[d];
    if (!c) continue;
    prod[d] = 0;
    for (int i = 0; i < k_; ++i) prod[d - k_ + i] = base_.sub(prod[d - k_ + i], base_.mul(c, mu_[i]));
  }
  prod.resize(k_);
  return prod;
}

ExtField::Elem ExtField::pow(Elem a, std::uint64_t n) const {
  Elem r = one();
  while (n) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

ExtField::Elem ExtField::inv(const Elem& a) const {
  if (is_zero(a)) throw DomainError("inverse of zero in extension field");
  return pow(a, order_ - 2);
}

ExtField::Elem ExtField::evaluate(const Poly& f, const std::vector<Elem>& point) const {
  Elem acc = zero();
  for (const Term& t : f.terms()) {
    Elem v = embed(t.coeff);
    for (std::size_t i = 0; i < point.size(); ++i)
      if (t.mono[i]) v = mul(v, pow(point[i], t.mono[i]));
    acc = add(acc, v);
  }
  return acc;
}

std::size_t ExtField::rank(std::vector<std::vector<Elem>> m) const {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && is_zero(m[piv][c])) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    Elem inv_p = inv(m[r][c]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (is_zero(m[i][c])) continue;
      Elem factor = mul(m[i][c], inv_p);
      for (std::size_t j = c; j < cols; ++j) m[i][j] = sub(m[i][j], mul(factor, m[r][j]));
    }
    ++r;
  }
  return r;
}

std::vector<std::vector<ExtField::Elem>> ExtField::kernel(std::vector<std::vector<Elem>> m,
                                                          std::size_t cols) const {
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && is_zero(m[piv][c])) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    Elem inv_p = inv(m[r][c]);
    for (std::size_t j = 0; j < cols; ++j) m[r][j] = mul(m[r][j], inv_p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      Elem factor = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = sub(m[i][j], mul(factor, m[r][j]));
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<std::vector<Elem>> basis;
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(cols, zero());
    v[free] = one();
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = sub(zero(), m[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace frobsys
