// Microbenchmarks for the hot paths: profile ODE integration, analytic
// jets, Gauss-map sampling, period quadrature, finite-difference mean
// curvature, graph evaluation, and section certificates.
#include <benchmark/benchmark.h>

#include "solmin/catenoid.hpp"
#include "solmin/helicoid.hpp"
#include "solmin/limit_surfaces.hpp"
#include "solmin/verify.hpp"

namespace {

using namespace solmin;

const HelicoidModel& helicoid() {
  static const HelicoidModel m = HelicoidModel::build(0.4, 5.0);
  return m;
}

const CatenoidModel& catenoid() {
  static const CatenoidModel m = CatenoidModel::build(0.6, 5.0);
  return m;
}

void BM_HelicoidBuild(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(HelicoidModel::build(0.4, 5.0));
}
BENCHMARK(BM_HelicoidBuild)->Unit(benchmark::kMillisecond);

void BM_CatenoidBuild(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(CatenoidModel::build(0.6, 5.0));
}
BENCHMARK(BM_CatenoidBuild)->Unit(benchmark::kMillisecond);

void BM_HelicoidJet(benchmark::State& state) {
  const HelicoidModel& m = helicoid();
  double u = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.jet(u, 0.7));
    u = -u;
  }
}
BENCHMARK(BM_HelicoidJet);

void BM_CatenoidJet(benchmark::State& state) {
  const CatenoidModel& m = catenoid();
  double u = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.jet(u, 0.7));
    u = -u;
  }
}
BENCHMARK(BM_CatenoidJet);

void BM_GaussSampleResidual(benchmark::State& state) {
  const CatenoidModel& m = catenoid();
  double u = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(harmonic_residual(m.gauss_sample(u, 0.7)));
    u = -u;
  }
}
BENCHMARK(BM_GaussSampleResidual);

void BM_PeriodQuadrature(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(period_W_integral(0.4));
}
BENCHMARK(BM_PeriodQuadrature);

void BM_FdMeanCurvature(benchmark::State& state) {
  const HelicoidModel& m = helicoid();
  const SurfaceEvaluator surface = [&m](double u, double v) {
    return m.immerse(u, v);
  };
  double u = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mean_curvature(surface, u, 0.7));
    u = -u;
  }
}
BENCHMARK(BM_FdMeanCurvature);

void BM_GraphEvaluate(benchmark::State& state) {
  double x1 = 2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(graph_s::evaluate(x1, 1.0));
    x1 = -x1;
  }
}
BENCHMARK(BM_GraphEvaluate);

void BM_SectionCertificate(benchmark::State& state) {
  // Needs the default grid: a section sweeps v across [0, 2V].
  static const CatenoidModel m = CatenoidModel::build(0.6);
  for (auto _ : state)
    benchmark::DoNotOptimize(convexity_certificate(m.section(0.0, 128)));
}
BENCHMARK(BM_SectionCertificate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
