#pragma once

#include <span>
#include <vector>

#include "frobsys/poly.hpp"

namespace frobsys {

/// Reduced Groebner basis of the ideal generated by `generators` under the
/// ring's monomial order: monic, sorted by increasing leading monomial.
/// Honors the ring's degree and basis-size caps.
std::vector<Poly> reduced_groebner_basis(std::span<const Poly> generators);

/// Remainder of full division of f by `basis` (all terms reduced).
Poly normal_form(const Poly& f, std::span<const Poly> basis);

/// Gaussian elimination on coefficient vectors: returns polynomials spanning
/// the same F_p-space with pairwise distinct leading monomials, all monic.
std::vector<Poly> linear_interreduce(std::span<const Poly> polys);

}  // namespace frobsys
