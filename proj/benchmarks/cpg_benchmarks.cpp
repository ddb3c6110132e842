#include <benchmark/benchmark.h>

#include <random>

#include "cpg/analysis.hpp"
#include "cpg/coprime_graph.hpp"
#include "cpg/embedder.hpp"
#include "cpg/exact_solvers.hpp"
#include "cpg/group_spec.hpp"
#include "cpg/planarity.hpp"
#include "cpg/subgroup_lattice.hpp"
#include "cpg/theorem_suite.hpp"

namespace {

cpg::Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  cpg::Graph g(n);
  for (cpg::Vertex u = 0; u < n; ++u)
    for (cpg::Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

const char* const kLatticeSpecs[] = {"S4", "Z3xA4", "Z2Z3Z3sZ2", "G6:5,3", "Z:420"};

void BM_SubgroupLattice(benchmark::State& state) {
  const auto g = cpg::build_group(kLatticeSpecs[state.range(0)]);
  state.SetLabel(g.name());
  for (auto _ : state) benchmark::DoNotOptimize(cpg::all_subgroups(g, 1024));
}
BENCHMARK(BM_SubgroupLattice)->DenseRange(0, 4);

void BM_CliqueNumber(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(cpg::clique_number(g));
}
BENCHMARK(BM_CliqueNumber)->Arg(16)->Arg(32)->Arg(48)->Arg(64);

void BM_ChromaticNumber(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(cpg::chromatic_number(g));
}
BENCHMARK(BM_ChromaticNumber)->Arg(12)->Arg(20)->Arg(28);

void BM_Planarity(benchmark::State& state) {
  const auto g = cpg::build_cyclic_coprime_graph(static_cast<std::uint64_t>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(cpg::planarity(g));
}
BENCHMARK(BM_Planarity)->Arg(60)->Arg(210)->Arg(420)->Arg(2310);

void BM_Analyze(benchmark::State& state) {
  const auto g = cpg::build_coprime_graph(cpg::build_group("Z2Z3Z3sZ2")).graph;
  for (auto _ : state) benchmark::DoNotOptimize(cpg::analyze(g, {128}));
}
BENCHMARK(BM_Analyze);

void BM_DegreeTheorem(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cpg::check_degree_theorem(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_DegreeTheorem)->Arg(1000)->Arg(5000);

void BM_Embed(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(cpg::embed(g));
}
BENCHMARK(BM_Embed)->Arg(8)->Arg(12)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
