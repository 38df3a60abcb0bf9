// bench_core.cpp
// Microbenchmarks for the classification hot path: the per-candidate gate
// pipeline, the lattice enumeration behind the terminal test, and the Smith
// form underlying every grading computation.

#include <benchmark/benchmark.h>

#include "antican/acomplex.hpp"
#include "antican/classify.hpp"
#include "antican/polyhedra.hpp"

using namespace antican;

namespace {

DefiningData row1_instance() {
  DefiningData dd;
  dd.r = 2;
  dd.s = 2;
  dd.m = 0;
  dd.n = {2, 2, 1};
  dd.L = {{1, 1}, {1, 1}, {2}};
  dd.d = {{0, 1, 0, 0, -1}, {0, 0, 1, 0, -1}};
  dd.dprime = {{}, {}};
  return dd;
}

DefiningData rejected_instance() {
  // fails the terminal gate at the lineality stage
  DefiningData dd = row1_instance();
  dd.d = {{0, 1, 0, 0, -1}, {0, 0, 3, 0, -3}};
  return dd;
}

void BM_PipelineTerminal(benchmark::State& state) {
  DefiningData dd = row1_instance();
  for (auto _ : state) {
    GateStats st;
    benchmark::DoNotOptimize(filter_pipeline(dd, st));
  }
}
BENCHMARK(BM_PipelineTerminal);

void BM_PipelineRejected(benchmark::State& state) {
  DefiningData dd = rejected_instance();
  for (auto _ : state) {
    GateStats st;
    benchmark::DoNotOptimize(filter_pipeline(dd, st));
  }
}
BENCHMARK(BM_PipelineRejected);

void BM_LeafLatticePoints(benchmark::State& state) {
  DefiningData dd = row1_instance();
  Grading g = grading(dd);
  ACComplex ac = build_complex(dd, g);
  for (auto _ : state)
    for (const Polytope& leaf : ac.leaves) benchmark::DoNotOptimize(lattice_points(leaf));
}
BENCHMARK(BM_LeafLatticePoints);

void BM_SmithNormalForm(benchmark::State& state) {
  IntMat m(5, 6);
  long long vals[5][6] = {{-1, -1, 1, 1, 0, 0},  {-1, -1, 0, 0, 5, 0}, {-1, -1, 0, 0, 0, 2},
                          {0, 1, 3, 0, -7, 1},   {0, 0, 1, 0, -2, 1}};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 6; ++j) m.at(i, j) = vals[i][j];
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm);

void BM_Normalize(benchmark::State& state) {
  DefiningData dd = row1_instance();
  for (auto _ : state) benchmark::DoNotOptimize(normalize(dd));
}
BENCHMARK(BM_Normalize);

}  // namespace

BENCHMARK_MAIN();
