#include <random>

#include <benchmark/benchmark.h>

#include "frobsys/cartier.hpp"
#include "frobsys/kernels/rref.hpp"
#include "frobsys/kernels/trace_image.hpp"

using namespace frobsys;

namespace {

Matrix random_matrix(std::size_t n, std::uint32_t p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = static_cast<Coeff>(rng() % p);
  return m;
}

template <RrefInfo (*Kernel)(Matrix&, const PrimeField&)>
void BM_Rref(benchmark::State& state) {
  const PrimeField field(65521);
  const Matrix input = random_matrix(static_cast<std::size_t>(state.range(0)), 65521, 7);
  for (auto _ : state) {
    Matrix m = input;
    benchmark::DoNotOptimize(Kernel(m, field));
  }
}

/// Frobenius pieces of f^a·x^γ feeding degree m of P^2 over F_5 at level 2.
struct TraceInput {
  ChartPtr chart;
  std::vector<Poly> components;
};

TraceInput trace_input(std::uint32_t m) {
  auto ring = Ring::make(5, {"x", "y", "z"}, MonomialOrder::kGrevlex, 0, Caps{});
  Poly f = parse_poly(ring, "x^3 + y^3 + z^3 + x*y*z");
  FrobExpansion ex = frob_expand(f.pow(12), 2);
  TraceInput in{std::make_shared<GradedChart>(Ideal(ring), m), {}};
  for (auto& [b, part] : ex.parts) in.components.push_back(part);
  return in;
}

template <Matrix (*Kernel)(const GradedChart&, std::span<const Poly>)>
void BM_TraceImage(benchmark::State& state) {
  const TraceInput in = trace_input(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(*in.chart, in.components));
}

}  // namespace

BENCHMARK(BM_Rref<kernels::rref_serial>)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Rref<kernels::rref_parallel>)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TraceImage<kernels::trace_image_serial>)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TraceImage<kernels::trace_image_parallel>)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
