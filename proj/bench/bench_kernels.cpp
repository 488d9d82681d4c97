#include <benchmark/benchmark.h>

#include "latshift/criteria.hpp"
#include "latshift/oracle.hpp"
#include "latshift/spectral.hpp"

using namespace latshift;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

void set_label(benchmark::State& state) {
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel/" + std::to_string(kernels::max_threads()));
}

// M x on the quadrant box i+j <= 120 (7381 vertices)
void BM_TruncatedMultiply(benchmark::State& state) {
  const auto mat = truncated_matrix(GraphModel::quadrant(), Extent{120});
  std::vector<Complex> x(mat.size());
  for (std::size_t t = 0; t < x.size(); ++t) x[t] = Complex(1.0 / static_cast<double>(t + 1), 0.0);
  const auto exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(mat.multiply(x, exec));
  set_label(state);
}

void BM_MatrixPowerApply(benchmark::State& state) {
  const auto q = GraphModel::quadrant();
  const auto mat = truncated_matrix(q, Extent{80});
  auto f = SparseVector<Complex>::unit(q, q.vertex(30, 30));
  f.add(q.vertex(10, 40), Complex(-2.0, 0.0));
  const auto exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(matrix_power_apply(mat, f, 12, exec));
  set_label(state);
}

void BM_StripCriterion(benchmark::State& state) {
  const auto fam = WeightFamily::polynomial_j(3);
  StripScanOptions opts;
  opts.horizon = 4000;
  opts.window = 40;
  opts.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(strip_criterion(fam, 4, opts));
  set_label(state);
}

void BM_GsRegionScan(benchmark::State& state) {
  std::vector<double> rs;
  for (int t = 0; t <= 40; ++t) rs.push_back(1.0 + 0.025 * t);
  std::vector<Complex> ss;
  for (int a = 1; a <= 20; ++a)
    for (int b = 0; b < 16; ++b) ss.push_back(std::polar(0.04 * a, 0.39 * b));
  const auto fam = WeightFamily::geometric_sum(1.5);
  const auto exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(gs_region_scan(fam, rs, ss, 60, exec));
  set_label(state);
}

}  // namespace

BENCHMARK(BM_TruncatedMultiply)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MatrixPowerApply)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StripCriterion)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GsRegionScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
