#include <benchmark/benchmark.h>

#include "centra/catalog.hpp"
#include "centra/classify.hpp"
#include "centra/constructors.hpp"
#include "centra/lattice.hpp"
#include "centra/presentation.hpp"
#include "centra/todd_coxeter.hpp"

using namespace centra;

static void BM_ClosureSymmetric(benchmark::State& state) {
  auto const n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(symmetric(n));
  }
}
BENCHMARK(BM_ClosureSymmetric)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_ClassXPsl2(benchmark::State& state) {
  auto const G = psl2(gf(static_cast<std::uint32_t>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(in_class_X(*G).member);
  }
  state.counters["order"] = static_cast<double>(G->order());
}
BENCHMARK(BM_ClassXPsl2)->Arg(7)->Arg(11)->Arg(13)->Arg(17)->Unit(benchmark::kMillisecond);

static void BM_ClassXBruteforceDihedral(benchmark::State& state) {
  auto const G = dihedral(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(in_class_X_bruteforce(*G).member);
  }
}
BENCHMARK(BM_ClassXBruteforceDihedral)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_AllSubgroups(benchmark::State& state) {
  GroupPtr const groups[] = {symmetric(4), alternating(5), psl2(gf(7))};
  auto const&    G        = groups[state.range(0)];
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_subgroups(*G).size());
  }
  state.counters["order"] = static_cast<double>(G->order());
}
BENCHMARK(BM_AllSubgroups)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

static void BM_ToddCoxeter147(benchmark::State& state) {
  auto const P = parse_presentation(find_presentation("ex-nc147").text);
  for (auto _ : state) {
    benchmark::DoNotOptimize(todd_coxeter(P, Convention::B).table.cosets());
  }
}
BENCHMARK(BM_ToddCoxeter147)->Unit(benchmark::kMicrosecond);

static void BM_RealizeAutomatic(benchmark::State& state) {
  auto const P = parse_presentation(find_presentation("odd75").text);
  for (auto _ : state) {
    benchmark::DoNotOptimize(realize(P, ConventionChoice::automatic, 75).group->order());
  }
}
BENCHMARK(BM_RealizeAutomatic)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
