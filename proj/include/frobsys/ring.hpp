#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "frobsys/field.hpp"
#include "frobsys/monomial.hpp"

namespace frobsys {

enum class MonomialOrder {
  kGrevlex,
  kLex,
  /// Product order: grevlex on the first `block` variables, ties broken by
  /// grevlex on the rest. Eliminates the first block.
  kElimination,
};

/// Resource caps. Exceeding any of them raises ResourceError naming the cap.
struct Caps {
  std::uint32_t max_degree = 64;       // S-pair degree inside Groebner runs
  std::size_t max_generators = 512;    // working basis size inside Groebner runs
  int max_steps = 64;                  // sigma / tau chain length
  std::uint64_t max_q = 256;           // largest p^e accepted by Frobenius expansion
  int max_s0_levels = 8;               // S0 stabilization levels
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Polynomial ring F_p[x_1..x_n] with a fixed monomial order.
class Ring {
 public:
  static RingPtr make(std::uint32_t p, std::vector<std::string> names,
                      MonomialOrder order = MonomialOrder::kGrevlex, std::size_t block = 0,
                      Caps caps = {});

  const PrimeField& field() const { return field_; }
  std::uint32_t characteristic() const { return field_.characteristic(); }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  MonomialOrder order() const { return order_; }
  std::size_t block() const { return block_; }
  const Caps& caps() const { return caps_; }

  /// Three-way comparison under the ring order: <0, 0, >0.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// Same characteristic, names and order.
  bool same_as(const Ring& other) const;

  /// Copy of this ring with `names` prepended as an eliminated block.
  RingPtr with_front_block(const std::vector<std::string>& names) const;
  /// Same variables reordered by `perm` (new index i holds old variable perm[i]), grevlex.
  RingPtr permuted(const std::vector<std::size_t>& perm) const;
  RingPtr with_caps(Caps caps) const;

  std::string describe() const;

 private:
  Ring(std::uint32_t p, std::vector<std::string> names, MonomialOrder order, std::size_t block,
       Caps caps);

  PrimeField field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
  std::size_t block_;
  Caps caps_;
};

void require_same_ring(const Ring& a, const Ring& b, const char* what);

}  // namespace frobsys
