// Serial vs OpenMP kernels, and the per-pose cost of the two collision models.

#include <rcesdf/distance_field.hpp>
#include <rcesdf/objective.hpp>
#include <rcesdf/planner.hpp>
#include <rcesdf/scenarios.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace rcesdf;

namespace
{

SiteMask random_mask(int n)
{
    std::mt19937_64 r(5);
    std::bernoulli_distribution on(0.02);
    SiteMask m(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            m.mark(i, j, on(r));
    return m;
}

void BM_EdtSquared(benchmark::State &state, Exec exec)
{
    const auto mask = random_mask(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(edt_squared(mask, exec));
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK_CAPTURE(BM_EdtSquared, serial, Exec::Serial)->Arg(128)->Arg(512);
BENCHMARK_CAPTURE(BM_EdtSquared, parallel, Exec::Parallel)->Arg(128)->Arg(512);

// Shared by the trajectory-level benchmarks: the rectangle scenario and the
// initial spline the planner would start from.
struct Fixture
{
    Scenario scenario = rectangle_gaps_scenario();
    std::unique_ptr<CollisionSetup> rc;
    std::unique_ptr<CollisionSetup> wbfp;
    BSplineSE2 spline;

    Fixture()
    {
        rc = make_collision_setup(scenario, scenario.config, Method::RcEsdf);
        wbfp = make_collision_setup(scenario, scenario.config, Method::Wbfp);
        auto cfg = scenario.config;
        cfg.solver.max_iterations = 1;
        spline = plan(scenario, cfg).initial;
    }
};

const Fixture &fixture()
{
    static const Fixture f;
    return f;
}

void BM_CollisionTerm(benchmark::State &state, Exec exec)
{
    const auto &f = fixture();
    for (auto _ : state)
        benchmark::DoNotOptimize(collision(f.spline, *f.rc->model, exec));
    state.SetItemsProcessed(state.iterations() * constraint_point_count(f.spline));
}
BENCHMARK_CAPTURE(BM_CollisionTerm, serial, Exec::Serial);
BENCHMARK_CAPTURE(BM_CollisionTerm, parallel, Exec::Parallel);

void BM_PoseEval(benchmark::State &state, Method method)
{
    const auto &f = fixture();
    const auto &model = method == Method::RcEsdf ? *f.rc->model : *f.wbfp->model;
    const int n = constraint_point_count(f.spline);
    int k = 0;
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(model.evaluate(constraint_point(f.spline, k)));
        k = (k + 1) % n;
    }
}
BENCHMARK_CAPTURE(BM_PoseEval, rc_esdf, Method::RcEsdf);
BENCHMARK_CAPTURE(BM_PoseEval, wbfp, Method::Wbfp);

} // namespace

BENCHMARK_MAIN();
