#include <benchmark/benchmark.h>

#include "qcat/braid.hpp"
#include "qcat/sixj.hpp"
#include "qcat/virasoro.hpp"

namespace {

void BM_ScalarMulAdd(benchmark::State& state) {
  const qcat::ScalarQ a = qcat::qint(5) / qcat::qint(3);
  const qcat::ScalarQ b = qcat::qfact(4) / (qcat::ScalarQ::q() - qcat::ScalarQ(1));
  for (auto _ : state) {
    auto c = a * b + a / b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_ScalarMulAdd);

void BM_QFact(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qcat::qfact(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_QFact)->Arg(4)->Arg(8)->Arg(12);

// The memo tables make repeated calls free, so these time the first
// computation by varying the labels across a sweep.
void BM_CgProjectionSweep(benchmark::State& state) {
  const int lmax = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int a = 0; a <= lmax; ++a)
      for (int b = 0; b <= lmax; ++b)
        for (int l : qcat::sel(a, b).members)
          benchmark::DoNotOptimize(&qcat::cg_projection(l, a, b, qcat::CoproductSide::Delta));
  }
}
BENCHMARK(BM_CgProjectionSweep)->Arg(4)->Iterations(1)->Unit(benchmark::kMillisecond);

void BM_RMatrix(benchmark::State& state) {
  const int ell = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qcat::rmatrix(ell, ell));
}
BENCHMARK(BM_RMatrix)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SixJMemoLookup(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(&qcat::sixj(2, 2, 2, 2));
}
BENCHMARK(BM_SixJMemoLookup)->Unit(benchmark::kMicrosecond);

void BM_PentagonSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qcat::pentagon_sweep(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PentagonSweep)->Arg(2)->Iterations(1)->Unit(benchmark::kMillisecond);

void BM_ShapovalovGram(benchmark::State& state) {
  mpq_class t(3, 5);
  const mpq_class c = qcat::central_charge(t);
  const mpq_class h = qcat::h_weight(3, t);
  for (auto _ : state) benchmark::DoNotOptimize(qcat::shapovalov_gram(c, h, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ShapovalovGram)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_KacDeterminant(benchmark::State& state) {
  const mpq_class t(5, 7);
  const auto gram = qcat::shapovalov_gram(qcat::central_charge(t), qcat::h_weight(5, t), 6);
  for (auto _ : state) benchmark::DoNotOptimize(qcat::determinant(gram));
}
BENCHMARK(BM_KacDeterminant)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
