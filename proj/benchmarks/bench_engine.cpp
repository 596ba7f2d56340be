#include <benchmark/benchmark.h>

#include "thetacorr/corpus.hpp"
#include "thetacorr/jacquet.hpp"
#include "thetacorr/langlands.hpp"
#include "thetacorr/session.hpp"
#include "thetacorr/tables.hpp"
#include "thetacorr/theta.hpp"

using namespace thetacorr;

static void BM_CorpusBuild(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(make_corpus(7, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CorpusBuild)->Arg(1)->Arg(4);

static void BM_LiftFromGSp4(benchmark::State& state) {
  Corpus c = make_corpus(11);
  for (auto _ : state)
    for (const auto& e : c.gsp4) benchmark::DoNotOptimize(theta_gsp4_to_33(e.value));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(c.gsp4.size()));
}
BENCHMARK(BM_LiftFromGSp4);

static void BM_AdjointPoleTest(benchmark::State& state) {
  Corpus c = make_corpus(13);
  std::vector<LParameter> params;
  for (const auto& e : c.gsp4) {
    LParameter phi = lparam_gsp4(e.value);
    if (!opaque_parameter(phi)) params.push_back(std::move(phi));
  }
  for (auto _ : state)
    for (const auto& phi : params) benchmark::DoNotOptimize(has_pole_at_one(adjoint(phi)));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(params.size()));
}
BENCHMARK(BM_AdjointPoleTest);

static void BM_ParameterCompat(benchmark::State& state) {
  Corpus c = make_corpus(17);
  for (auto _ : state)
    for (const auto& e : c.gso22) benchmark::DoNotOptimize(check_parameter_compat(e.value));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(c.gso22.size()));
}
BENCHMARK(BM_ParameterCompat);

static void BM_EmitTables(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(emit_tables());
}
BENCHMARK(BM_EmitTables);

static void BM_JacquetFiltration(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state)
    for (int n = 1; n <= 6; ++n)
      for (int k = 0; k <= n; ++k) benchmark::DoNotOptimize(filtration({m, n, -1, Side::Symplectic, k, false}));
}
BENCHMARK(BM_JacquetFiltration)->Arg(4)->Arg(12);

static void BM_SessionQuery(benchmark::State& state) {
  Session s;
  s.run(tables_prelude());
  for (auto _ : state) benchmark::DoNotOptimize(s.query("lift gsp4 JB(chi1*nu^(2/3), chi2*nu^(1/3), chi)"));
}
BENCHMARK(BM_SessionQuery);
BENCHMARK_MAIN();
