#pragma once

#include "frobsys/linalg.hpp"

namespace frobsys::kernels {

/// Reference Gauss-Jordan elimination; leaves m in reduced row echelon form
/// with zero rows removed.
RrefInfo rref_serial(Matrix& m, const PrimeField& field);

/// Same result as rref_serial; the elimination sweep for each pivot runs
/// across rows with OpenMP.
RrefInfo rref_parallel(Matrix& m, const PrimeField& field);

/// Dispatches to the parallel kernel for large matrices.
RrefInfo rref(Matrix& m, const PrimeField& field);

}  // namespace frobsys::kernels
