#include <benchmark/benchmark.h>

#include <string>

#include "ptlattice/brute_force.hpp"
#include "ptlattice/catalog.hpp"
#include "ptlattice/pretorsion.hpp"
#include "ptlattice_cli/quiver_file.hpp"

namespace {

ptl::AlgebraPtr load(const std::string& name) {
  return ptl::cli::load_quiver_file(std::string(PTLATTICE_FIXTURE_DIR) + "/" + name + ".toml").algebra();
}

void BM_PretorsionLattice(benchmark::State& state, const std::string& name) {
  const auto algebra = load(name);
  for (auto _ : state) {
    const auto catalog = ptl::build_catalog(algebra);
    ptl::PretorsionContext ctx(catalog);
    benchmark::DoNotOptimize(ptl::build_pretorsion_lattice(ctx).size());
  }
}
BENCHMARK_CAPTURE(BM_PretorsionLattice, a3_sink, std::string("a3-sink"));
BENCHMARK_CAPTURE(BM_PretorsionLattice, d4_subspace, std::string("d4-subspace"));
BENCHMARK_CAPTURE(BM_PretorsionLattice, twocycle_exit, std::string("twocycle-exit"));

void BM_BruteForceD4(benchmark::State& state) {
  const auto algebra = load("d4-subspace");
  for (auto _ : state) benchmark::DoNotOptimize(ptl::enumerate_brute_force(algebra).modules.size());
}
BENCHMARK(BM_BruteForceD4)->Unit(benchmark::kMillisecond);

void BM_TheoryCensus(benchmark::State& state, const std::string& name) {
  const auto algebra = load(name);
  const auto catalog = ptl::build_catalog(algebra);
  ptl::PretorsionContext ctx(catalog);
  const auto lt = ptl::build_pretorsion_lattice(ctx);
  const auto ltf = ptl::build_pretorsionfree_lattice(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(ptl::enumerate_pretorsion_theories(ctx, lt, ltf, false).size());
}
BENCHMARK_CAPTURE(BM_TheoryCensus, a2, std::string("a2"));
BENCHMARK_CAPTURE(BM_TheoryCensus, a3_sink, std::string("a3-sink"))->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
