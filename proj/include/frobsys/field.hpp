#pragma once

#include <cstdint>

#include "frobsys/errors.hpp"

namespace frobsys {

using Coeff = std::uint32_t;

/// Arithmetic in F_p for a prime p < 2^16. Values are kept in [0, p).
class PrimeField {
 public:
  static constexpr std::uint32_t kMaxCharacteristic = 1u << 16;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  Coeff reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  Coeff add(Coeff a, Coeff b) const {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Coeff inv(Coeff a) const;
  Coeff pow(Coeff a, std::uint64_t n) const;

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace frobsys
