#pragma once

#include <span>

#include "frobsys/graded.hpp"

namespace frobsys::kernels {

/// Span of x^γ·g over all components g (homogeneous, degree ≤ m) and all
/// monomials γ of complementary degree, in the chart's coordinates. This is
/// the degree-m image of a trace map once the components are the Frobenius
/// expansion pieces of multiplier·generator. Returns the reduced echelon form.
Matrix trace_image_serial(const GradedChart& chart, std::span<const Poly> components);

/// Same result as trace_image_serial; source items are distributed over
/// OpenMP threads, each growing its own echelon basis, merged at the end.
Matrix trace_image_parallel(const GradedChart& chart, std::span<const Poly> components);

}  // namespace frobsys::kernels
