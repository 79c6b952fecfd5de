#include <benchmark/benchmark.h>

#include "pencil/cover.hpp"
#include "pencil/cyclic.hpp"
#include "pencil/resolution.hpp"

using namespace pencil;

namespace {

void BM_resolution_cusp_chain(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  std::string expr = "(x^2+y^" + std::to_string(2 * k + 1) + ")^2";
  CurveGerm germ = parse_germ(expr);
  for (auto _ : state) {
    ResolutionReport rep = embedded_resolution(germ);
    benchmark::DoNotOptimize(rep.nodes.size());
  }
}
BENCHMARK(BM_resolution_cusp_chain)->DenseRange(1, 9, 2);

void BM_resolution_tangent_bundle(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  std::string expr = "x*(x+y^" + std::to_string(k) + ")^2*(x+2*y^2)";
  CurveGerm germ = parse_germ(expr);
  for (auto _ : state) {
    ResolutionReport rep = embedded_resolution(germ);
    benchmark::DoNotOptimize(rep.steps.size());
  }
}
BENCHMARK(BM_resolution_tangent_bundle)->DenseRange(2, 8, 2);

void BM_hirzebruch_jung(benchmark::State& state) {
  const long d = state.range(0);
  for (auto _ : state) {
    // a deliberately unstructured family of cyclic singularities
    ChainDescription cd = resolve_cyclic(Int(d), Int(d / 3 + 1), Int(d / 5 + 2));
    benchmark::DoNotOptimize(cd.k2.num());
  }
}
BENCHMARK(BM_hirzebruch_jung)->RangeMultiplier(8)->Range(64, 1 << 18);

void BM_cover_and_contraction(benchmark::State& state) {
  const long mult = state.range(0);
  FiberConfig cfg;
  cfg.name = "bench";
  cfg.components.push_back({"C", 1, 2});
  GermPoint gp;
  gp.equation = "x^2+y^3";
  gp.germ = parse_germ(gp.equation);
  gp.branch_map[0] = "C";
  cfg.germs.push_back(gp);
  ResolvedFiber rf = resolve_fiber(cfg);
  const Int d = rf.M * mult;  // longer (-2)-chains as d grows
  for (auto _ : state) {
    CoverGraph cg = cyclic_cover_graph(rf, d);
    SemistableModel m = contract_minus_ones(cg);
    benchmark::DoNotOptimize(m.contractions.get_ui());
  }
}
BENCHMARK(BM_cover_and_contraction)->RangeMultiplier(4)->Range(1, 256);

}  // namespace

BENCHMARK_MAIN();
