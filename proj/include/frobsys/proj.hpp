#pragma once

#include <string>
#include <vector>

#include "frobsys/fsing.hpp"
#include "frobsys/graded.hpp"

namespace frobsys {

/// X ⊆ P^n given by a saturated homogeneous ideal in n+1 variables; either
/// P^n itself or a complete intersection of the given forms.
class ProjScheme {
 public:
  static ProjScheme projective_space(RingPtr ring);
  static ProjScheme complete_intersection(RingPtr ring, std::vector<Poly> equations);

  const RingPtr& ring() const { return ring_; }
  int n() const { return static_cast<int>(ring_->nvars()) - 1; }
  int dimension() const { return n() - static_cast<int>(equations_.size()); }
  const std::vector<Poly>& equations() const { return equations_; }
  const Ideal& ideal() const { return ideal_; }
  /// Degree of ω_X: Σ deg h_j - n - 1.
  int canonical_twist() const;
  ChartPtr chart(std::uint32_t m) const;

  std::string describe() const;

 private:
  ProjScheme(RingPtr ring, std::vector<Poly> equations, Ideal ideal);

  RingPtr ring_;
  std::vector<Poly> equations_;
  Ideal ideal_;
};

/// (S/I)_m with its monomial basis.
GradedSubspace graded_piece(const ProjScheme& x, std::uint32_t m);

enum class S0Kind { kSigma, kTau };

struct S0Result {
  GradedSubspace space;
  /// Number of trace levels computed before the image stabilized.
  int levels = 0;
  /// Image dimension at each level.
  std::vector<std::size_t> dims;
};

/// Degree of the source piece feeding degree m at level k:
/// Q·m + (Q-1)(n+1-Σ deg h) - Σ a_i·deg f_i·(Q-1)/(q-1) with Q = q^k.
std::int64_t s0_source_degree(const ProjScheme& x, const PairDivisor& pair, std::uint32_t m,
                              int level);

/// Saturated σ or τ of the pair on the cone over X (containing I_X).
Ideal graded_fsing_ideal(const ProjScheme& x, const PairDivisor& pair, S0Kind which);

/// S⁰ in degree m: the stable image of the iterated trace maps, computed as
/// the degree-m piece of B_k = φ(B_{k-1}) + I_X until the ideals B_k repeat.
/// B_0 is the unit ideal for σ and the saturated test ideal of the cone for τ.
S0Result s0_compute(const ProjScheme& x, const PairDivisor& pair, std::uint32_t m, S0Kind which);

/// Same subspace built level by level from the full source graded piece with
/// the level-k trace, stopping when consecutive images agree as row spaces.
S0Result s0_direct(const ProjScheme& x, const PairDivisor& pair, std::uint32_t m, S0Kind which,
                   bool parallel = true);

/// The common zeros of V on X are empty.
bool is_base_point_free(const GradedSubspace& v);

struct SeparationReport {
  int extension_degree = 1;
  std::size_t points = 0;
  std::size_t pairs_checked = 0;
  std::size_t tangents_checked = 0;
  std::vector<std::string> failures;
  std::string coverage;
  bool ok() const { return failures.empty(); }
};

/// Point and tangent separation over the F_{p^k}-rational points of a curve.
SeparationReport separates(const ProjScheme& x, const GradedSubspace& v, int k);

/// Degree-m elements of J generate the same sheaf: sat((J_m)) = sat(J).
bool global_generation_check(const Ideal& j, std::uint32_t m);

struct GlobalGenerationReport {
  S0Result s0;
  Ideal target;  // saturated σ or τ on the cone
  bool holds = false;
};

/// S⁰ alone generates σ(X,Δ)⊗O(m) (resp. τ).
GlobalGenerationReport s0_global_generation_check(const ProjScheme& x, const PairDivisor& pair,
                                                  std::uint32_t m, S0Kind which);

struct DegreeBoundResult {
  Poly form;
  std::uint32_t delta = 0;
  /// Pair used for D = (a/(p^E-1))·div(A).
  std::uint64_t a = 0;
  int level = 1;
  bool exact_coefficient = true;
  Ideal tau_ideal;
  std::size_t sections = 0;
};

/// Given points S ⊂ P^n where A (degree d) has multiplicity ≥ l, and e ≥ the
/// codimension of S, returns a nonzero form of degree ⌊de/l⌋ vanishing on S,
/// taken from the test ideal of (e/l)·div(A).
DegreeBoundResult degree_bound_pipeline(const RingPtr& ring,
                                        const std::vector<std::vector<Coeff>>& points, const Poly& a,
                                        std::uint32_t d, std::uint32_t l, std::uint32_t e);

/// Homogeneous ideal of a point of P^n.
Ideal projective_point_ideal(const RingPtr& ring, std::span<const Coeff> point);

struct RestrictionReport {
  GradedSubspace s0_x;
  GradedSubspace s0_z;
  GradedSubspace restricted;
  bool surjective = false;
};

/// Restriction of S⁰(X, σ⊗O(m)) to a compatible center Z maps onto S⁰(Z).
RestrictionReport restriction_surjectivity(const ProjScheme& x, const PairDivisor& pair,
                                           const Ideal& iz, int m);

}  // namespace frobsys
