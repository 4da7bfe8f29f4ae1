#include "qcluster/checks.hpp"
#include "qcluster/toda.hpp"

#include <benchmark/benchmark.h>

using namespace qcluster;

static void BM_CoxeterBaxterTop(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Seed s = build_coxeter(n);
    const MutationSeq seq = standard_sequence(SequenceKind::baxter_top, n);
    for (auto _ : state) benchmark::DoNotOptimize(mutate_sequence(s, seq));
}
BENCHMARK(BM_CoxeterBaxterTop)->Arg(4)->Arg(8)->Arg(16);

static void BM_Hamiltonians(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hamiltonians(n));
}
BENCHMARK(BM_Hamiltonians)->DenseRange(2, 5);

static void BM_HamiltonianCommutator(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto hs = hamiltonians(n);
    const IntMatrix f2 = toda_form2(n);
    for (auto _ : state) benchmark::DoNotOptimize(te_commutator(hs[1], hs[n - 1], f2));
}
BENCHMARK(BM_HamiltonianCommutator)->DenseRange(2, 4);

static void BM_FrozenTrick(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_frozen_trick(n));
}
BENCHMARK(BM_FrozenTrick)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_BifundSequence(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const Seed s = build_glued(m, m);
    const MutationSeq seq = bifund_sequence(m, m);
    for (auto _ : state) benchmark::DoNotOptimize(mutate_sequence(s, seq));
}
BENCHMARK(BM_BifundSequence)->DenseRange(2, 6);

static void BM_BuildClusterSeed(benchmark::State& state) {
    const GaugeQuiver g = example_gauge_quiver(Partition::p4);
    for (auto _ : state) benchmark::DoNotOptimize(build_cluster_seed(g));
}
BENCHMARK(BM_BuildClusterSeed);

static void BM_MonopoleCommutator(benchmark::State& state) {
    const GaugeQuiver g = example_gauge_quiver(Partition::p22);
    const DiffOp e = monopole_E(g, "1", -1);
    const DiffOp f = monopole_F(g, "3", -1);
    for (auto _ : state) benchmark::DoNotOptimize(do_commutator(e, f));
}
BENCHMARK(BM_MonopoleCommutator)->Unit(benchmark::kMillisecond);

static void BM_LaurentFuzz(benchmark::State& state) {
    const ClusterSeed cs = build_cluster_seed(example_gauge_quiver(Partition::p22));
    const auto cat = example_catalog(Partition::p22, cs.seed);
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_universally_laurent(cat[2].image, cs.seed, 8, 32, 1, threads));
}
BENCHMARK(BM_LaurentFuzz)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_MAIN();
