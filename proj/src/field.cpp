#include "frobsys/field.hpp"

#include <string>

namespace frobsys {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p > kMaxCharacteristic || !is_prime(p))
    throw DomainError("characteristic must be a prime below 2^16, got " + std::to_string(p));
}

Coeff PrimeField::inv(Coeff a) const {
  if (a == 0) throw DomainError("division by zero in F_" + std::to_string(p_));
  std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce(t);
}

Coeff PrimeField::pow(Coeff a, std::uint64_t n) const {
  Coeff result = 1 % p_;
  Coeff base = a;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

}  // namespace frobsys
