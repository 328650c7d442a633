#include <benchmark/benchmark.h>

#include "misfit/analysis.hpp"
#include "misfit/ch.hpp"
#include "misfit/kernel.hpp"
#include "misfit/mc.hpp"
#include "misfit/rng.hpp"

using namespace misfit;

namespace {

ElasticKernel iso_kernel(const GridSpec& g, double eta) {
    return build_kernel(g, stiffness_from_isotropic(IsotropicModuli(1.0, 1.0)),
                        TransformationStrain::dilatational(eta));
}

void BM_KernelBuild2D(benchmark::State& state) {
    GridSpec g(2, {int(state.range(0)), int(state.range(0)), 1});
    const StiffnessTensor lam = stiffness_from_cubic(CubicModuli(2.0, 1.0, 0.8));
    const TransformationStrain de0 = TransformationStrain::dilatational(0.01);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_kernel(g, lam, de0));
    }
    state.SetItemsProcessed(state.iterations() * g.sites());
}
BENCHMARK(BM_KernelBuild2D)->Arg(64)->Arg(128);

void BM_ChStep(benchmark::State& state) {
    GridSpec g(2, {int(state.range(0)), int(state.range(0)), 1});
    CHParams p(1.0, 0.75, 1.0, 1.0 / 3.0, 0.05);
    Rng rng(1);
    CHState s(random_initial_field(g, 0.5, 0.01, rng), p, iso_kernel(g, 0.2));
    for (auto _ : state) s.step();
    state.SetItemsProcessed(state.iterations() * g.sites());
}
BENCHMARK(BM_ChStep)->Arg(128)->Arg(256);

void BM_McSweep(benchmark::State& state) {
    GridSpec g(2, {int(state.range(0)), int(state.range(0)), 1});
    const ElasticKernel kernel = iso_kernel(g, 0.05);
    MCParams p(1.0, 1.0);
    p.kernel = kernel;
    Rng rng(2);
    SpinLattice lat(g, g.sites() / 2, rng, kernel);
    for (auto _ : state) benchmark::DoNotOptimize(lat.kawasaki_sweep(p, rng));
    state.SetItemsProcessed(state.iterations() * g.sites());
}
BENCHMARK(BM_McSweep)->Arg(64)->Arg(128);

void BM_StructureFactor(benchmark::State& state) {
    GridSpec g(2, {int(state.range(0)), int(state.range(0)), 1});
    ScalarField f(g);
    Rng rng(3);
    for (double& v : f.values) v = rng.uniform(-1.0, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(structure_factor(f));
    state.SetItemsProcessed(state.iterations() * g.sites());
}
BENCHMARK(BM_StructureFactor)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
