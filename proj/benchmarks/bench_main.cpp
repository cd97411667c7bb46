#include <benchmark/benchmark.h>

#include "neumaier/canonical.hpp"
#include "neumaier/constructions.hpp"
#include "neumaier/enumeration.hpp"
#include "neumaier/gf2.hpp"

using namespace neumaier;

namespace {

void BM_GroupMultiply(benchmark::State& state) {
  const auto g = make_group("C4xC2^4");
  Element acc = 1;
  for (auto _ : state) {
    for (Element x = 0; x < g.order(); ++x) acc = g.mul(acc, x);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.order()));
}
BENCHMARK(BM_GroupMultiply);

void BM_WalshSpectrum(benchmark::State& state) {
  const auto f = gf2::maiorana_mcfarland(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gf2::walsh_spectrum(f));
}
BENCHMARK(BM_WalshSpectrum)->Arg(2)->Arg(4)->Arg(6);

void BM_Theorem1Check(benchmark::State& state) {
  const auto r = theorem2_graph(2, "C2^3");
  for (auto _ : state) benchmark::DoNotOptimize(theorem1_check(r.construction.h, r.construction.graph.connection));
}
BENCHMARK(BM_Theorem1Check);

void BM_StrictlyNeumaierCheck(benchmark::State& state) {
  const auto r = theorem2_graph(2, "C2^3");
  for (auto _ : state)
    benchmark::DoNotOptimize(strictly_neumaier_check(r.construction.graph, r.construction.h));
}
BENCHMARK(BM_StrictlyNeumaierCheck);

void BM_CanonicalForm64(benchmark::State& state) {
  const auto r = theorem2_graph(2, "C2^3");
  const auto d = materialize(r.construction.graph);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(d));
}
BENCHMARK(BM_CanonicalForm64)->Unit(benchmark::kMillisecond);

void BM_EnumerateCensus16(benchmark::State& state) {
  const auto g = make_group("C2xD8");
  EnumerationOptions o;
  o.strong_prune = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_sweep(g, {16, 9, 4, 2, 4}, o));
}
BENCHMARK(BM_EnumerateCensus16)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_AutomorphismGroup(benchmark::State& state) {
  const auto g = make_group("C2^4");
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(g));
}
BENCHMARK(BM_AutomorphismGroup)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
