#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

namespace frobsys {

inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector. Unused trailing slots stay zero so that monomials from
/// rings with fewer variables compare and hash consistently.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const std::uint32_t> exps);

  std::uint32_t operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, std::uint32_t v) {
    deg_ = deg_ - exp_[i] + v;
    exp_[i] = v;
  }
  std::uint32_t degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp_[i] > other.exp_[i]) return false;
    return true;
  }
  /// Requires divides(other): returns other / *this.
  Monomial cofactor_in(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (a.exp_[i] != 0 && b.exp_[i] != 0) return false;
    return true;
  }

  Monomial scaled(std::uint64_t k) const;

  bool operator==(const Monomial& o) const { return deg_ == o.deg_ && exp_ == o.exp_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  /// Plain lexicographic comparison on the raw exponent array; used for
  /// deterministic container ordering only, not as a ring order.
  bool lex_less(const Monomial& o) const { return exp_ < o.exp_; }

  std::size_t hash() const;

 private:
  std::array<std::uint32_t, kMaxVars> exp_{};
  std::uint32_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct MonomialLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.lex_less(b); }
};

}  // namespace frobsys
