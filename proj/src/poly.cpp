#include "frobsys/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace frobsys {

namespace {

struct TermGreater {
  const Ring* ring;
  bool operator()(const Term& a, const Term& b) const { return ring->greater(a.mono, b.mono); }
};

// Merge a and s*m*b (s already scaled) under the ring order.
std::vector<Term> merge_add(const Ring& ring, std::span<const Term> a, std::span<const Term> b,
                            Coeff scale, const Monomial* shift) {
  const PrimeField& k = ring.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial bm = shift ? b[j].mono * *shift : b[j].mono;
    if (i == a.size()) {
      Coeff c = k.mul(b[j].coeff, scale);
      if (c) out.push_back({bm, c});
      ++j;
      continue;
    }
    int cmp = ring.compare(a[i].mono, bm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      Coeff c = k.mul(b[j].coeff, scale);
      if (c) out.push_back({bm, c});
      ++j;
    } else {
      Coeff c = k.add(a[i].coeff, k.mul(b[j].coeff, scale));
      if (c) out.push_back({bm, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

namespace detail {
std::vector<Term> sub_mul_terms(const Ring& ring, std::span<const Term> a, Coeff c,
                                const Monomial& m, std::span<const Term> b) {
  return merge_add(ring, a, b, ring.field().neg(c % ring.characteristic()), &m);
}
}  // namespace detail

Poly::Poly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  normalize();
}

void Poly::normalize() {
  const PrimeField& k = ring_->field();
  std::sort(terms_.begin(), terms_.end(), TermGreater{ring_.get()});
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    Coeff c = t.coeff % k.characteristic();
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = k.add(out.back().coeff, c);
    } else {
      out.push_back({t.mono, c});
    }
    if (out.back().coeff == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

Poly Poly::constant(RingPtr ring, std::int64_t c) {
  Coeff v = ring->field().reduce(c);
  Poly p(std::move(ring));
  if (v) p.terms_.push_back({Monomial{}, v});
  return p;
}

Poly Poly::variable(RingPtr ring, std::size_t i) {
  if (i >= ring->nvars()) throw DomainError("variable index out of range");
  Monomial m;
  m.set(i, 1);
  return monomial(std::move(ring), m, 1);
}

Poly Poly::monomial(RingPtr ring, const Monomial& m, Coeff c) {
  Poly p(std::move(ring));
  c %= p.ring_->characteristic();
  if (c) p.terms_.push_back({m, c});
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

int Poly::low_degree() const {
  if (terms_.empty()) return -1;
  int d = static_cast<int>(terms_.front().mono.degree());
  for (const Term& t : terms_) d = std::min(d, static_cast<int>(t.mono.degree()));
  return d;
}

bool Poly::is_homogeneous() const {
  for (const Term& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

Poly Poly::operator-() const { return scaled(ring_->field().neg(1 % ring_->characteristic())); }

Poly& Poly::operator+=(const Poly& o) {
  require_same_ring(*ring_, *o.ring_, "polynomial addition");
  terms_ = merge_add(*ring_, terms_, o.terms_, 1, nullptr);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_ring(*ring_, *o.ring_, "polynomial subtraction");
  terms_ = merge_add(*ring_, terms_, o.terms_, ring_->field().neg(1), nullptr);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_ring(*a.ring_, *b.ring_, "polynomial multiplication");
  if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
  const Poly& small = a.size() <= b.size() ? a : b;
  const Poly& large = a.size() <= b.size() ? b : a;
  if (small.size() == 1) return large.times_monomial(small.terms_[0].mono, small.terms_[0].coeff);
  const PrimeField& k = a.ring_->field();
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  acc.reserve(small.size() * large.size());
  for (const Term& s : small.terms_) {
    for (const Term& l : large.terms_) {
      auto [it, inserted] = acc.try_emplace(s.mono * l.mono, 0);
      it->second = k.add(it->second, k.mul(s.coeff, l.coeff));
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (const auto& [m, c] : acc)
    if (c) terms.push_back({m, c});
  Poly r(a.ring_);
  std::sort(terms.begin(), terms.end(), TermGreater{a.ring_.get()});
  r.terms_ = std::move(terms);
  return r;
}

Poly Poly::scaled(Coeff c) const {
  c %= ring_->characteristic();
  Poly r(ring_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (Term& t : r.terms_) t.coeff = ring_->field().mul(t.coeff, c);
  return r;
}

Poly Poly::times_monomial(const Monomial& m, Coeff c) const {
  c %= ring_->characteristic();
  Poly r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.mono * m, ring_->field().mul(t.coeff, c)});
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(leading_coeff()));
}

Poly Poly::frobenius(std::uint64_t q) const {
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.mono.scaled(q), t.coeff});
  return r;  // scaling exponents preserves any monomial order
}

Poly Poly::pow(std::uint64_t n) const {
  // Base-p digits: f^n = prod_i (f^{d_i})^{[p^i]}.
  const std::uint64_t p = ring_->characteristic();
  Poly result = constant(ring_, 1);
  if (n == 0) return result;
  if (is_zero()) return Poly(ring_);
  std::uint64_t q = 1;
  while (n > 0) {
    std::uint64_t digit = n % p;
    if (digit != 0) {
      Poly f = constant(ring_, 1);
      Poly base = *this;
      std::uint64_t d = digit;
      while (d > 0) {
        if (d & 1) f = f * base;
        d >>= 1;
        if (d) base = base * base;
      }
      result = result * f.frobenius(q);
    }
    n /= p;
    q *= p;
  }
  return result;
}

Poly Poly::sub_mul(Coeff c, const Monomial& m, const Poly& g) const {
  Poly r(ring_);
  r.terms_ = merge_add(*ring_, terms_, g.terms_, ring_->field().neg(c % ring_->characteristic()), &m);
  return r;
}

Coeff Poly::evaluate(std::span<const Coeff> point) const {
  const PrimeField& k = ring_->field();
  if (point.size() != ring_->nvars()) throw DomainError("point has wrong number of coordinates");
  Coeff sum = 0;
  for (const Term& t : terms_) {
    Coeff v = t.coeff;
    for (std::size_t i = 0; i < ring_->nvars() && v; ++i)
      if (t.mono[i]) v = k.mul(v, k.pow(point[i] % k.characteristic(), t.mono[i]));
    sum = k.add(sum, v);
  }
  return sum;
}

Poly Poly::translate(std::span<const Coeff> point) const {
  if (point.size() != ring_->nvars()) throw DomainError("point has wrong number of coordinates");
  std::vector<Poly> shifted;
  for (std::size_t i = 0; i < ring_->nvars(); ++i)
    shifted.push_back(variable(ring_, i) + constant(ring_, point[i]));
  Poly r(ring_);
  for (const Term& t : terms_) {
    Poly term = constant(ring_, t.coeff);
    for (std::size_t i = 0; i < ring_->nvars(); ++i)
      if (t.mono[i]) term = term * shifted[i].pow(t.mono[i]);
    r += term;
  }
  return r;
}

Poly Poly::homogeneous_part(std::uint32_t d) const {
  Poly r(ring_);
  for (const Term& t : terms_)
    if (t.mono.degree() == d) r.terms_.push_back(t);
  return r;
}

Poly Poly::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const Term& t : terms_) {
    std::uint32_t e = t.mono[var];
    if (e == 0) continue;
    Coeff c = ring_->field().mul(t.coeff, e % ring_->characteristic());
    if (c == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({m, c});
  }
  return Poly(ring_, std::move(out));
}

Poly Poly::remap(const RingPtr& target, std::span<const std::size_t> map) const {
  if (target->characteristic() != ring_->characteristic())
    throw StructuralError("remap across characteristics");
  if (map.size() != ring_->nvars()) throw DomainError("remap table has wrong size");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < map.size(); ++i)
      if (t.mono[i]) m.set(map[i], m[map[i]] + t.mono[i]);
    out.push_back({m, t.coeff});
  }
  return Poly(target, std::move(out));
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    if (!first) os << " + ";
    first = false;
    bool wrote = false;
    if (t.coeff != 1 || t.mono.is_one()) {
      os << t.coeff;
      wrote = true;
    }
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (!t.mono[i]) continue;
      if (wrote) os << "*";
      os << ring_->names()[i];
      if (t.mono[i] > 1) os << "^" << t.mono[i];
      wrote = true;
    }
  }
  return os.str();
}

bool operator==(const Poly& a, const Poly& b) {
  if (!a.ring_->same_as(*b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

Poly divide_exact(const Poly& f, const Poly& g) {
  require_same_ring(*f.ring(), *g.ring(), "divide_exact");
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  const PrimeField& k = f.ring()->field();
  Coeff inv_lc = k.inv(g.leading_coeff());
  Poly rest = f;
  std::vector<Term> quotient;
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    if (!g.leading_monomial().divides(lt.mono))
      throw DomainError("divide_exact: " + g.to_string() + " does not divide " + f.to_string());
    Monomial m = g.leading_monomial().cofactor_in(lt.mono);
    Coeff c = k.mul(lt.coeff, inv_lc);
    quotient.push_back({m, c});
    rest = rest.sub_mul(c, m, g);
  }
  return Poly(f.ring(), std::move(quotient));
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class PolyParser {
 public:
  PolyParser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Poly run() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty polynomial");
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_ + 1); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  Poly term() {
    Poly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Poly factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    Poly base = atom();
    if (accept('^')) {
      skip_ws();
      std::uint64_t e = 0;
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
        if (e > (1ull << 32)) fail("exponent too large");
        ++pos_;
      }
      if (pos_ == start) fail("expected exponent after '^'");
      return base.pow(e);
    }
    return base;
  }

  Poly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint64_t p = ring_->characteristic();
      std::uint64_t v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = (v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0')) % p;
        ++pos_;
      }
      return Poly::constant(ring_, static_cast<std::int64_t>(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      const auto& names = ring_->names();
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return Poly::variable(ring_, i);
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const RingPtr& ring, std::string_view text) { return PolyParser(ring, text).run(); }

}  // namespace frobsys
