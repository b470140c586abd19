#include "frobsys/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace frobsys {

Monomial::Monomial(std::span<const std::uint32_t> exps) {
  if (exps.size() > kMaxVars) throw std::length_error("too many variables in monomial");
  for (std::size_t i = 0; i < exps.size(); ++i) {
    exp_[i] = exps[i];
    deg_ += exps[i];
  }
}

Monomial Monomial::cofactor_in(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = other.exp_[i] - exp_[i];
  r.deg_ = other.deg_ - deg_;
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = a.exp_[i] + b.exp_[i];
  r.deg_ = a.deg_ + b.deg_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    r.deg_ += r.exp_[i];
  }
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
    r.deg_ += r.exp_[i];
  }
  return r;
}

Monomial Monomial::scaled(std::uint64_t k) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    std::uint64_t v = static_cast<std::uint64_t>(exp_[i]) * k;
    if (v > 0x7fffffffu) throw std::overflow_error("monomial exponent overflow");
    r.exp_[i] = static_cast<std::uint32_t>(v);
    r.deg_ += r.exp_[i];
  }
  return r;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint32_t e : exp_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

}  // namespace frobsys
