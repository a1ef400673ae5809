#include <benchmark/benchmark.h>

#include <numbers>

#include "cphm/action_basis.hpp"
#include "cphm/jacobi.hpp"
#include "cphm/shooting.hpp"
#include "cphm/spectral.hpp"
#include "cphm/tension.hpp"

namespace {

constexpr double kPi2 = std::numbers::pi / 2;

void BM_OdeResidual(benchmark::State& state) {
    const auto sp = cphm::SpaceParams::create(3, 1);
    const auto prof = cphm::Profile::closed_form(-2.0);
    double t = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cphm::ode_residual(sp, prof, t));
        t = (t < 1.2) ? t + 1e-4 : 0.3;
    }
}
BENCHMARK(BM_OdeResidual);

void BM_OdeResidualViaTraces(benchmark::State& state) {
    const auto sp = cphm::SpaceParams::create(3, 1);
    const auto prof = cphm::Profile::closed_form(-2.0);
    double t = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cphm::ode_residual_via_traces(sp, prof, t));
        t = (t < 1.2) ? t + 1e-4 : 0.3;
    }
}
BENCHMARK(BM_OdeResidualViaTraces);

void BM_GramOracle(benchmark::State& state) {
    const auto sp = cphm::SpaceParams::create(7, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cphm::gram_oracle(sp, 0.7));
    }
}
BENCHMARK(BM_GramOracle);

void BM_Integrate(benchmark::State& state) {
    const auto sp = cphm::SpaceParams::create(3, 1);
    const cphm::ShootingConfig cfg;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cphm::integrate(sp, 2.0, cfg));
    }
}
BENCHMARK(BM_Integrate)->Unit(benchmark::kMillisecond);

void BM_Discretize(benchmark::State& state) {
    const auto sp = cphm::SpaceParams::create(3, 1);
    const auto prof = cphm::Profile::closed_form(1.0);
    const auto problem =
        cphm::SturmLiouvilleProblem::create(sp, prof, static_cast<int>(state.range(0)), 1e-3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cphm::discretize(problem));
    }
}
BENCHMARK(BM_Discretize)->Arg(200)->Arg(800);

void BM_EigenSmallest(benchmark::State& state) {
    const auto sp = cphm::SpaceParams::create(3, 1);
    const auto prof = cphm::Profile::closed_form(1.0);
    const auto problem =
        cphm::SturmLiouvilleProblem::create(sp, prof, static_cast<int>(state.range(0)), 1e-3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cphm::eigen_smallest(problem, 6));
    }
}
BENCHMARK(BM_EigenSmallest)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);

void BM_JacobiEval(benchmark::State& state) {
    const auto jp = cphm::JacobiParams::create(3.0, 3.0, 8);
    double y = -0.9;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cphm::jacobi_eval(jp, y));
        y = (y < 0.9) ? y + 1e-3 : -0.9;
    }
}
BENCHMARK(BM_JacobiEval);

void BM_LineTransformResidual(benchmark::State& state) {
    double x = -10.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cphm::line_transform_residual(5, 1, 3, x));
        x = (x < 10.0) ? x + 1e-2 : -10.0;
    }
}
BENCHMARK(BM_LineTransformResidual);

}  // namespace

BENCHMARK_MAIN();
