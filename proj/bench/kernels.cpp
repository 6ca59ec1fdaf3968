// Serial reference kernels against their OpenMP counterparts.
// Thread count follows OMP_NUM_THREADS.

#include "crn/geometry.hpp"
#include "crn/linalg.hpp"
#include "crn/network.hpp"
#include "crn/siphons.hpp"
#include "crn/transversals.hpp"

#include <benchmark/benchmark.h>

#include <string>

using namespace crn;

namespace {

const ReactionNetwork& network(const std::string& name)
{
  static std::map<std::string, ReactionNetwork> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, load_network(std::string(CRN_NETWORKS_DIR) + "/" + name)).first;
  return it->second;
}

Hypergraph path(int n)
{
  Hypergraph h{n, {}};
  for (int i = 0; i + 1 < n; ++i) h.edges.push_back({i, i + 1});
  return h;
}

template <auto Kernel>
void branching(benchmark::State& state)
{
  const auto& net = network("adjacent_minors_5x5.crn");
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(net, {}).siphons.size());
}

template <auto Kernel>
void transversal_count(benchmark::State& state)
{
  const auto h = path(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(h, {}).total);
}

template <auto Kernel>
void transversal_list(benchmark::State& state)
{
  const auto h = path(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(h, {}).sets.size());
}

template <auto Kernel>
void facets(benchmark::State& state)
{
  const auto q = build_cone(network("ex1_1.crn"));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(q).size());
}

template <auto Kernel>
void vertices(benchmark::State& state)
{
  const auto& net = network("ex1_2.crn");
  const auto p = make_polytope(net, RationalVector(static_cast<std::size_t>(net.num_species()), 1));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(p).size());
}

}  // namespace

BENCHMARK(branching<serial::branch_minimal_siphons>)->Name("branching/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(branching<parallel::branch_minimal_siphons>)->Name("branching/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(transversal_count<serial::count_minimal_transversals>)->Name("chain_count/serial")->Arg(30)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(transversal_count<parallel::count_minimal_transversals>)->Name("chain_count/parallel")->Arg(30)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(transversal_list<serial::minimal_transversals>)->Name("chain_list/serial")->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(transversal_list<parallel::minimal_transversals>)->Name("chain_list/parallel")->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(facets<serial::enumerate_facets>)->Name("facets/serial");
BENCHMARK(facets<parallel::enumerate_facets>)->Name("facets/parallel");
BENCHMARK(vertices<serial::enumerate_vertex_supports>)->Name("vertices/serial");
BENCHMARK(vertices<parallel::enumerate_vertex_supports>)->Name("vertices/parallel");

BENCHMARK_MAIN();
