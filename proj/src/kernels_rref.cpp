#include "frobsys/kernels/rref.hpp"

namespace frobsys::kernels {

namespace {

// Shared driver; `parallel` toggles the OpenMP sweep.
RrefInfo gauss_jordan(Matrix& m, const PrimeField& k, bool parallel) {
  RrefInfo info;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m.at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    m.swap_rows(piv, r);
    Coeff inv = k.inv(m.at(r, c));
    for (std::size_t j = c; j < cols; ++j) m.at(r, j) = k.mul(m.at(r, j), inv);

    const auto pivot_row = m.row(r);
    const long long nrows = static_cast<long long>(rows);
#pragma omp parallel for schedule(static) if (parallel)
    for (long long i = 0; i < nrows; ++i) {
      if (static_cast<std::size_t>(i) == r) continue;
      auto row = m.row(static_cast<std::size_t>(i));
      Coeff f = row[c];
      if (f == 0) continue;
      Coeff neg = k.neg(f);
      for (std::size_t j = c; j < cols; ++j)
        if (pivot_row[j]) row[j] = k.add(row[j], k.mul(neg, pivot_row[j]));
    }
    info.pivots.push_back(c);
    ++r;
  }
  info.rank = r;
  m.truncate_rows(r);
  return info;
}

}  // namespace

RrefInfo rref_serial(Matrix& m, const PrimeField& field) { return gauss_jordan(m, field, false); }

RrefInfo rref_parallel(Matrix& m, const PrimeField& field) { return gauss_jordan(m, field, true); }

RrefInfo rref(Matrix& m, const PrimeField& field) {
  constexpr std::size_t kParallelThreshold = 1u << 16;
  return m.rows() * m.cols() >= kParallelThreshold ? rref_parallel(m, field)
                                                   : rref_serial(m, field);
}

}  // namespace frobsys::kernels
