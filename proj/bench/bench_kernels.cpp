// Serial reference against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include "conelab/delone.hpp"
#include "conelab/io.hpp"
#include "conelab/matroid.hpp"
#include "conelab/quadform.hpp"
#include "conelab/tumatrix.hpp"

using namespace conelab;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_TuScan(benchmark::State& state) {
  // A10 glued to A(K4): 8 x 16, every square submatrix scanned.
  const IntMatrix a = assemble_sum1(r10_matrix(), graphic_representation(complete_graph(4)));
  for (auto _ : state) benchmark::DoNotOptimize(is_totally_unimodular(a, exec_of(state)));
}

void BM_Enumerate(benchmark::State& state) {
  const QuadForm q = q5();
  for (auto _ : state) benchmark::DoNotOptimize(short_vectors(q, 8, exec_of(state)));
}

void BM_SecondaryCheck(benchmark::State& state) {
  const IntMatrix a = graphic_representation(complete_graph(4));
  for (auto _ : state) benchmark::DoNotOptimize(secondary_cone_check(a, 8, 12345, 0, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_TuScan)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Enumerate)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SecondaryCheck)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
