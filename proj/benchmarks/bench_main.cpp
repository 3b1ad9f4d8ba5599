#include <benchmark/benchmark.h>

#include "loccdisc/builders.hpp"
#include "loccdisc/engine.hpp"
#include "loccdisc/families.hpp"
#include "loccdisc/verify.hpp"

using namespace loccdisc;

static void BM_BuildBipartite(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(buildBipartiteEq1(4, n));
}
BENCHMARK(BM_BuildBipartite)->Arg(5)->Arg(8);

static void BM_GramTripartite(benchmark::State& state) {
    const auto set = buildTripartiteEq6();
    for (auto _ : state) benchmark::DoNotOptimize(gramMatrix(set));
}
BENCHMARK(BM_GramTripartite);

static void BM_TensorOddStopper(benchmark::State& state) {
    const auto set = buildOddSprime({4, 5, 6, 4, 5});
    const auto tree = composeOdd({4, 5, 6, 4, 5});
    const Ket resource = tree.resource.ket(tree.layout);
    const Ket& stopper = set.find("stopper")->ket;
    for (auto _ : state) benchmark::DoNotOptimize(tensor(stopper, resource));
}
BENCHMARK(BM_TensorOddStopper);

static void BM_SimulateTheorem1(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto tree = theorem1Protocol(4, n);
    const auto set = buildBipartiteEq1(4, n);
    const Ket input = tensor(set.states.front().ket, tree.resource.ket(tree.layout));
    for (auto _ : state) benchmark::DoNotOptimize(simulate(tree, input));
}
BENCHMARK(BM_SimulateTheorem1)->Arg(5)->Arg(8);

static void BM_VerifyTripartite456(benchmark::State& state) {
    const auto tree = tripartite456Protocol();
    const auto set = buildTripartiteEq6();
    for (auto _ : state) benchmark::DoNotOptimize(verifyPerfect(tree, set, true));
}
BENCHMARK(BM_VerifyTripartite456);

static void BM_WitnessTripartite(benchmark::State& state) {
    const auto set = buildTripartiteEq6();
    for (auto _ : state) benchmark::DoNotOptimize(indistinguishabilityWitness(set, "Alice"));
}
BENCHMARK(BM_WitnessTripartite);

BENCHMARK_MAIN();
